#pragma once

// Report-producing checks behind the command-line tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "resolvent/ideals.hpp"
#include "resolvent/repr.hpp"

namespace resolvent {

struct Report {
    std::string check;
    std::string paper_ref;  // name of the property being checked
    std::string status;     // pass | fail | inconclusive
    nlohmann::json residuals = nlohmann::json::array();
    nlohmann::json params = nlohmann::json::object();
};

nlohmann::json to_json(const Report& r);

/// 0 when every report passes, 1 on any failure, 3 when the rest are inconclusive.
int exit_code(const std::vector<Report>& reports);

struct RunConfig {
    int dim = 2;
    NumericConfig numeric;
    bool schedule_given = false;
    std::uint64_t seed = 1;
    int count = 20;
    std::optional<double> relation_tol;

    /// Keys: dim, schedule, K0, tol_in, tol_out, noise_floor, seed, count, relation_tol.
    static RunConfig from_json(const nlohmann::json& j);
    /// dim even in [2, 8]; schedule strictly increasing.
    void validate() const;
    /// Schedule for relation checks: the configured one, or a per-dimension default.
    std::vector<int> relation_schedule() const;
    double relation_tolerance() const;
};

std::vector<Report> relation_reports(const RunConfig& rc);
Report roundtrip_report(const IrrepLabel& label, const NumericConfig& cfg);
/// Round trip over every coordinate-subspace label with phi values in {0, 1, 3}.
Report roundtrip_universe_report(int dim, const NumericConfig& cfg);
std::vector<Report> chain_reports(int dim, const NumericConfig& cfg);
std::vector<Report> principal_reports(const RunConfig& rc, int count);
Report intersection_report(const std::vector<PrincipalIdealSpec>& specs, const NumericConfig& cfg);
std::vector<Report> commutator_reports(int dim, const NumericConfig& cfg);
std::vector<Report> report_all(const RunConfig& rc);

/// Entry point; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace resolvent
