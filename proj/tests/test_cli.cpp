#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "resolvent/commands.hpp"

using namespace resolvent;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

json reports_of(const Run& r) { return json::parse(r.out); }

std::filesystem::path write_config(const std::string& name, const json& j) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << j.dump();
    return path;
}

}  // namespace

TEST_CASE("simplify") {
    auto r = run({"simplify", "R(2,0)"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("(-1/2)*i*1\n", 0) == 0);

    r = run({"simplify", "R(1,2*p1)", "--no-json"});
    CHECK(r.out == "(1/2)*R(1/2,p1)\n");

    r = run({"simplify", "R(1,q1)*R(1,p1) - R(1,p1)*R(1,q1)", "--no-json"});
    CHECK(r.code == 0);
    CHECK(r.out == "(-1)*i*R(1,p1)*R(1,q1)*R(1,q1)*R(1,p1)\n");

    r = run({"simplify", "R(1,p1)*R(2,p1)*R(3,p1)", "--budget", "1"});
    CHECK(r.code == 3);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
    CHECK(run({"simplify", "R(1,"}).code == 2);
    CHECK(run({"simplify", "R(0,p1)"}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"check-relations", "--dim", "10"}).code == 2);
    CHECK(run({"check-relations", "--dim", "3"}).code == 2);
    CHECK(run({"check-relations", "--schedule", "32,16"}).code == 2);
    CHECK(run({"ideal", "maximal", "--Z", "p1,q1", "--expr", "R(1,p1)"}).code == 2);
    CHECK(run({"ideal", "intersect", "--spec", "1;p1;1"}).code == 2);
}

TEST_CASE("reports carry the common fields") {
    auto r = run({"ideal", "member", "--Y", "p1", "--phi", "0", "--expr", "R(1,q1)", "--expect", "in"});
    CHECK(r.code == 0);
    auto j = reports_of(r);
    REQUIRE(j.is_array());
    for (const auto& rep : j) {
        CHECK(rep.contains("check"));
        CHECK(rep.contains("paper_ref"));
        CHECK(rep.contains("status"));
        CHECK(rep.contains("residuals"));
        CHECK(rep.contains("params"));
    }
    CHECK(j[0]["params"]["verdict"] == "in_kernel");

    r = run({"ideal", "member", "--Y", "p1", "--phi", "0", "--expr", "R(1,q1)", "--expect", "out"});
    CHECK(r.code == 1);
    CHECK(reports_of(r)[0]["status"] == "fail");
}

TEST_CASE("relation checks") {
    auto r = run({"check-relations"});
    CHECK(r.code == 0);
    auto j = reports_of(r);
    CHECK(j.size() == 6);
    for (const auto& rep : j) CHECK(rep["status"] == "pass");

    // a single truncation cannot show convergence
    r = run({"check-relations", "--schedule", "16"});
    CHECK(r.code == 3);
    for (const auto& rep : reports_of(r)) CHECK(rep["status"] == "inconclusive");

    r = run({"check-relations", "--dim", "4", "--count", "3"});
    CHECK(r.code == 0);
    CHECK(reports_of(r)[0]["params"]["dim"] == 4);
}

TEST_CASE("output is deterministic") {
    std::vector<std::string> args{"check-relations", "--seed", "5", "--count", "4"};
    CHECK(run(args).out == run(args).out);
    auto a = run({"ideal", "intersect", "--groups", "3", "--seed", "2"});
    auto b = run({"ideal", "intersect", "--groups", "3", "--seed", "2"});
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}

TEST_CASE("configuration file and environment") {
    auto path = write_config("resolvent_cli_test.json", {{"dim", 4}, {"count", 2}, {"schedule", {8, 12, 16}}});
    auto r = run({"check-relations", "--config", path.string()});
    auto j = reports_of(r);
    CHECK(j[0]["params"]["dim"] == 4);
    CHECK(j[0]["params"]["schedule"] == json::array({8, 12, 16}));

    // command-line flags override the file
    r = run({"check-relations", "--config", path.string(), "--dim", "2"});
    CHECK(reports_of(r)[0]["params"]["dim"] == 2);

    ::setenv("RESOLVENT_CONFIG", path.c_str(), 1);
    r = run({"check-relations"});
    CHECK(reports_of(r)[0]["params"]["count"] == 2);
    ::unsetenv("RESOLVENT_CONFIG");

    auto bad = write_config("resolvent_cli_bad.json", {{"dim", "four"}});
    CHECK(run({"check-relations", "--config", bad.string()}).code == 2);
    CHECK(run({"check-relations", "--config", "/nonexistent/config.json"}).code == 2);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST_CASE("labels and ideals") {
    auto r = run({"label", "roundtrip", "--Y", "p1", "--phi", "3"});
    CHECK(r.code == 0);
    r = run({"label", "build", "--Y", "p1,q1,p2", "--phi", "1/2"});
    CHECK(r.code == 0);
    CHECK(reports_of(r)[0]["params"]["hilbert_dimension"] == 16);
    r = run({"label", "build", "--Y", "p1", "--phi", "3", "--schedule", "4", "--export", "R(2,p1)"});
    CHECK(r.code == 0);
    // one-dimensional: (2i - 3)^{-1} = (-3 - 2i)/13
    auto m = reports_of(r)[0]["params"]["matrix"];
    REQUIRE(m.size() == 1);
    CHECK(m[0][0][0].get<double>() == doctest::Approx(-3.0 / 13));
    CHECK(m[0][0][1].get<double>() == doctest::Approx(-2.0 / 13));
    r = run({"label", "extract", "--character", "--Y", "p1", "--phi", "2"});
    CHECK(r.code == 0);
    CHECK(reports_of(r)[0]["params"]["phi"][0].get<double>() == doctest::Approx(2));
    r = run({"ideal", "maximal", "--Z", "p1", "--phi", "0", "--expr", "R(1,q1)", "--expect", "in"});
    CHECK(r.code == 0);
    CHECK(reports_of(r)[0]["params"]["member"] == true);
    CHECK(run({"chain", "--dim", "4"}).code == 0);
    CHECK(run({"ideal", "commutator"}).code == 0);
    CHECK(run({"ideal", "principal"}).code == 0);
}

TEST_CASE("exit code aggregation") {
    CHECK(exit_code({}) == 0);
    CHECK(exit_code({{"a", "", "pass"}, {"b", "", "pass"}}) == 0);
    CHECK(exit_code({{"a", "", "pass"}, {"b", "", "inconclusive"}}) == 3);
    CHECK(exit_code({{"a", "", "fail"}, {"b", "", "inconclusive"}}) == 1);
}
