#include "resolvent/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>

#include <CLI11.hpp>

namespace resolvent {

using nlohmann::json;

json to_json(const Report& r) {
    return {{"check", r.check}, {"paper_ref", r.paper_ref}, {"status", r.status}, {"residuals", r.residuals},
            {"params", r.params}};
}

int exit_code(const std::vector<Report>& reports) {
    bool inconclusive = false;
    for (const auto& r : reports) {
        if (r.status == "fail") return 1;
        if (r.status == "inconclusive") inconclusive = true;
    }
    return inconclusive ? 3 : 0;
}

RunConfig RunConfig::from_json(const json& j) {
    RunConfig rc;
    rc.numeric = NumericConfig::from_json(j);
    rc.schedule_given = j.contains("schedule");
    if (j.contains("dim")) rc.dim = j.at("dim").get<int>();
    if (j.contains("seed")) rc.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("count")) rc.count = j.at("count").get<int>();
    if (j.contains("relation_tol")) rc.relation_tol = j.at("relation_tol").get<double>();
    return rc;
}

void RunConfig::validate() const {
    if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("dim must be a positive even integer");
    if (dim > 8) throw std::invalid_argument("dim > 8 is outside desk scale");
    const auto& s = numeric.schedule;
    if (s.empty()) throw std::invalid_argument("empty schedule");
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 2) throw std::invalid_argument("truncation levels must be at least 2");
        if (k && s[k] <= s[k - 1]) throw std::invalid_argument("schedule must be strictly increasing");
    }
    if (numeric.K0 < 1) throw std::invalid_argument("K0 must be positive");
    if (count < 1) throw std::invalid_argument("count must be positive");
}

std::vector<int> RunConfig::relation_schedule() const {
    if (schedule_given) return numeric.schedule;
    switch (dim / 2) {
        case 1: return {16, 32, 64};
        case 2: return {8, 16, 24};
        case 3: return {6, 8, 10};
        default: return {4, 5, 6};
    }
}

double RunConfig::relation_tolerance() const {
    if (relation_tol) return *relation_tol;
    return dim == 2 ? 1e-6 : 1e-5;
}

namespace {

std::string status_of(bool pass) { return pass ? "pass" : "fail"; }

json rationals(const std::vector<Rational>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json spec_json(const PrincipalIdealSpec& s) {
    return {{"lambda", to_string(s.lambda)}, {"f", to_string(s.f)}, {"rho", to_string(s.rho)}};
}

}  // namespace

std::vector<Report> relation_reports(const RunConfig& rc) {
    const auto schedule = rc.relation_schedule();
    const double tol = rc.relation_tolerance();
    std::vector<Representation> reps;
    for (int N : schedule) reps.push_back(Representation::regular(rc.dim, N));
    std::vector<Report> out;
    for (Relation rel : all_relations()) {
        Report r{"relation:" + relation_name(rel), relation_name(rel) + " relation", "pass"};
        auto instances = sample_relation_instances(rel, rc.dim, rc.count, rc.seed);
        std::vector<double> worst(schedule.size(), 0.0);
        int failures = 0;
        json failed = json::array();
        for (const auto& inst : instances) {
            std::vector<double> res;
            for (const auto& rep : reps) res.push_back(relation_residual(inst, rep, rc.numeric.K0));
            for (std::size_t k = 0; k < res.size(); ++k) worst[k] = std::max(worst[k], res[k]);
            if (!non_increasing(res, rc.numeric.noise_floor) || res.back() >= tol) {
                ++failures;
                failed.push_back({{"instance", to_json(inst)}, {"residuals", res}});
            }
        }
        r.residuals = worst;
        // one truncation gives no decay evidence either way
        if (schedule.size() < 2) r.status = "inconclusive";
        else if (failures) r.status = "fail";
        r.params = {{"dim", rc.dim},           {"schedule", schedule}, {"K0", rc.numeric.K0},
                    {"tol", tol},              {"count", rc.count},    {"seed", rc.seed},
                    {"failures", failures},    {"failed", failed}};
        out.push_back(std::move(r));
    }
    return out;
}

Report roundtrip_report(const IrrepLabel& label, const NumericConfig& cfg) {
    const int d = label.Y.ambient();
    SympSpace space(d);
    std::vector<SympVector> probes;
    for (int k = 0; k < d; ++k) probes.push_back(space.unit(k));
    ExtractedLabel ex = extract_label(Representation::labeled(label, cfg.schedule.front()), probes, cfg);
    Report r{"label:roundtrip", "label bijection round trip", "pass"};
    double err = 0;
    bool same_y = ex.Y == label.Y;
    if (same_y)
        for (std::size_t k = 0; k < ex.phi.size(); ++k)
            err = std::max(err, std::abs(ex.phi[k] - to_double(label.phi.values()[k])));
    if (!ex.inconclusive.empty())
        r.status = "inconclusive";
    else
        r.status = status_of(same_y && err <= 1e-6);
    r.residuals = json::array({err});
    r.params = {{"label", to_json(label)}, {"extracted_Y", to_json(ex.Y)}, {"extracted_phi", ex.phi}};
    return r;
}

Report roundtrip_universe_report(int dim, const NumericConfig& cfg) {
    Report r{"label:roundtrip-universe", "label bijection round trip", "pass"};
    int failures = 0, inconclusive = 0, total = 0;
    double worst = 0;
    for (const auto& label : coordinate_label_universe(dim, {0, 1, 3})) {
        Report one = roundtrip_report(label, cfg);
        ++total;
        worst = std::max(worst, one.residuals.at(0).get<double>());
        if (one.status == "fail") ++failures;
        if (one.status == "inconclusive") ++inconclusive;
    }
    r.status = failures ? "fail" : inconclusive ? "inconclusive" : "pass";
    r.residuals = json::array({worst});
    r.params = {{"dim", dim}, {"labels", total}, {"failures", failures}, {"inconclusive", inconclusive}};
    return r;
}

std::vector<Report> chain_reports(int dim, const NumericConfig& cfg) {
    std::vector<Report> out;
    auto chain = build_chain(dim);
    const int expected = dim / 2 + 1;
    bool increasing = true;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        increasing = increasing && label_leq(chain[k], chain[k + 1]) && !label_leq(chain[k + 1], chain[k]);
    Report len{"chain:length", "chain length dim/2 + 1", "pass"};
    len.status = status_of(static_cast<int>(chain.size()) == expected && increasing &&
                           max_chain_length(chain) == expected);
    len.params = {{"dim", dim}, {"length", chain.size()}, {"expected", expected}, {"strictly_increasing", increasing}};
    json labels = json::array();
    for (const auto& l : chain) labels.push_back(to_json(l));
    len.params["chain"] = labels;
    out.push_back(std::move(len));

    for (const auto& w : chain_witnesses(chain, cfg)) {
        Report r{"chain:witness", "chain strictness", status_of(w.pass())};
        r.residuals = {{"lower", w.lower.residuals}, {"upper", w.upper.residuals}};
        r.params = {{"index", w.index},
                    {"f", to_string(w.f)},
                    {"lower", to_string(w.lower.status)},
                    {"upper", to_string(w.upper.status)}};
        out.push_back(std::move(r));
    }

    if (dim <= 4) {
        auto universe = coordinate_label_universe(dim, {0, 1});
        int m = max_chain_length(universe);
        Report r{"chain:universe", "chain length dim/2 + 1", status_of(m == expected)};
        r.params = {{"dim", dim}, {"labels", universe.size()}, {"max_chain_length", m}, {"expected", expected}};
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Report> principal_reports(const RunConfig& rc, int count) {
    std::vector<Report> out;
    const int N = rc.relation_schedule().back();
    Representation rep = Representation::regular(rc.dim, N);
    const double tol = rc.relation_tolerance();
    auto check = [&](const PrincipalIdealSpec& s, const Rational& mu, const std::string& name, bool exact) {
        PrincipalIdentityResult res = principal_identity_check(s, mu, rep, rc.numeric.K0);
        bool ok = res.shifted_value.is_zero() && (exact ? res.defect_is_zero && res.residual == 0 : res.residual < tol);
        Report r{name, "principal ideal identity", status_of(ok)};
        r.residuals = json::array({res.residual});
        r.params = spec_json(s);
        r.params["mu"] = to_string(mu);
        r.params["N"] = N;
        r.params["shifted_value"] = to_string(res.shifted_value);
        r.params["defect_is_zero"] = res.defect_is_zero;
        out.push_back(std::move(r));
    };
    for (const auto& s : sample_principal_specs(rc.dim, count, rc.seed)) check(s.spec, s.mu, "principal:identity", false);
    for (const auto& s : sample_principal_specs(rc.dim, 2, rc.seed + 1)) check(s.spec, s.spec.lambda, "principal:equal-parameters", true);
    return out;
}

Report intersection_report(const std::vector<PrincipalIdealSpec>& specs, const NumericConfig& cfg) {
    const int d = specs.front().f.dim();
    auto reps = sample_representations(d, cfg.schedule.front());
    const std::size_t fixed = reps.size();
    for (const auto& s : specs) reps.push_back(Representation::sharp_value(s.lambda, s.f, s.rho));

    std::vector<std::size_t> order(specs.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<VerdictStatus>> rows;
    json table = json::array();
    json residuals = json::array();
    do {
        std::vector<PrincipalIdealSpec> permuted;
        for (auto k : order) permuted.push_back(specs[k]);
        Term t = intersection_element(permuted);
        std::vector<VerdictStatus> row;
        json names = json::array();
        for (const auto& rep : reps) {
            Verdict v = membership(rep, t, cfg);
            row.push_back(v.status);
            names.push_back(to_string(v.status));
            if (rows.empty()) residuals.push_back(v.residuals);
        }
        rows.push_back(std::move(row));
        table.push_back({{"order", order}, {"element", to_dsl(t)}, {"verdicts", names}});
    } while (std::next_permutation(order.begin(), order.end()));

    bool same = std::all_of(rows.begin(), rows.end(), [&](const auto& r) { return r == rows.front(); });
    bool killed = true;
    for (std::size_t k = fixed; k < reps.size(); ++k) killed = killed && rows.front()[k] == VerdictStatus::InKernel;
    Report r{"ideal:intersection", "intersection of principal ideals", status_of(same && killed)};
    r.residuals = residuals;
    json sj = json::array();
    for (const auto& s : specs) sj.push_back(spec_json(s));
    json rj = json::array();
    for (const auto& rep : reps) rj.push_back(rep.describe());
    r.params = {{"specs", sj}, {"representations", rj}, {"orders", table}, {"sharp_factors_in_kernel", killed}};
    return r;
}

std::vector<Report> commutator_reports(int dim, const NumericConfig& cfg) {
    CommutatorReport c = commutator_ideal_checks(dim, cfg);
    json params = {{"dim", dim}, {"characters", c.characters}};
    Report a{"commutator:characters-kill-commutators", "commutator ideal in every maximal ideal",
             status_of(c.commutator_failures == 0)};
    a.params = params;
    a.params["checked"] = c.commutators_checked;
    a.params["failures"] = c.commutator_failures;
    Report b{"commutator:characters-kill-products", "commutator ideal products vanish",
             status_of(c.product_failures == 0)};
    b.params = params;
    b.params["checked"] = c.products_checked;
    b.params["failures"] = c.product_failures;
    Report e{"commutator:generating-set-equivalence", "commutator ideal generating sets",
             status_of(c.equivalence_failures == 0)};
    e.params = params;
    e.params["checked"] = c.equivalence_checked;
    e.params["failures"] = c.equivalence_failures;
    e.params["both_in_kernel"] = c.equivalence_in_kernel;
    return {a, b, e};
}

std::vector<Report> report_all(const RunConfig& rc) {
    std::vector<Report> out;
    auto append = [&](std::vector<Report> more) {
        for (auto& r : more) out.push_back(std::move(r));
    };
    for (int d : {2, 4}) {
        RunConfig sub = rc;
        sub.dim = d;
        sub.schedule_given = false;
        append(relation_reports(sub));
    }
    for (int d : {2, 4}) out.push_back(roundtrip_universe_report(d, rc.numeric));
    for (int d : {2, 4, 6}) append(chain_reports(d, rc.numeric));
    RunConfig two = rc;
    two.dim = 2;
    two.schedule_given = false;
    append(principal_reports(two, 10));
    for (const auto& g : sample_intersection_groups(5, rc.seed)) out.push_back(intersection_report(g, rc.numeric));
    append(commutator_reports(2, rc.numeric));
    return out;
}

// ---------------------------------------------------------------------------
// Command line

namespace {

struct Flags {
    std::string config;
    int dim = 0;
    std::vector<int> schedule;
    int K0 = 0;
    double tol_in = 0, tol_out = 0, tol = 0;
    std::uint64_t seed = 0;
    int count = 0;
    bool json_out = true;
    CLI::App* leaf = nullptr;  // the subcommand that was parsed

    bool given(const std::string& name) const { return leaf->get_option(name)->count() > 0; }
};

void add_common(CLI::App* app, Flags& f) {
    app->parse_complete_callback([app, &f] { f.leaf = app; });
    app->add_option("--config", f.config, "JSON config file (default: $RESOLVENT_CONFIG)");
    app->add_option("--dim", f.dim, "dimension of X (even, <= 8)");
    app->add_option("--schedule", f.schedule, "truncation levels per mode")->delimiter(',');
    app->add_option("--K0", f.K0, "compressed block size");
    app->add_option("--tol-in", f.tol_in, "in-kernel tolerance");
    app->add_option("--tol-out", f.tol_out, "not-in-kernel threshold");
    app->add_option("--tol", f.tol, "relation residual tolerance");
    app->add_option("--seed", f.seed, "sampling seed");
    app->add_option("--count", f.count, "instances per relation");
    app->add_flag("--json,!--no-json", f.json_out, "emit JSON (default on)");
}

RunConfig resolve(const Flags& f, std::optional<int> inferred_dim = std::nullopt) {
    std::string path = f.config;
    if (path.empty())
        if (const char* env = std::getenv("RESOLVENT_CONFIG")) path = env;
    RunConfig rc;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot read config '" + path + "'");
        rc = RunConfig::from_json(json::parse(in));
    }
    if (inferred_dim) rc.dim = *inferred_dim;
    if (f.given("--dim")) rc.dim = f.dim;
    if (f.given("--schedule")) {
        rc.numeric.schedule = f.schedule;
        rc.schedule_given = true;
    }
    if (f.given("--K0")) rc.numeric.K0 = f.K0;
    if (f.given("--tol-in")) rc.numeric.tol_in = f.tol_in;
    if (f.given("--tol-out")) rc.numeric.tol_out = f.tol_out;
    if (f.given("--tol")) rc.relation_tol = f.tol;
    if (f.given("--seed")) rc.seed = f.seed;
    if (f.given("--count")) rc.count = f.count;
    rc.validate();
    return rc;
}

int infer_all(const std::vector<std::string>& texts) {
    int d = 2;
    for (const auto& t : texts) d = std::max(d, infer_dim(t));
    return d;
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& t : texts) out.push_back(parse_rational(t));
    return out;
}

Subspace parse_span(const std::vector<std::string>& texts, int dim) {
    std::vector<SympVector> v;
    for (const auto& t : texts) v.push_back(parse_vector(t, dim));
    return Subspace::span(dim, v);
}

int emit(const std::vector<Report>& reports, const Flags& f, std::ostream& out) {
    if (f.json_out) {
        json a = json::array();
        for (const auto& r : reports) a.push_back(to_json(r));
        out << a.dump(2) << "\n";
    } else {
        for (const auto& r : reports) out << r.status << "\t" << r.check << "\t" << r.params.dump() << "\n";
    }
    return exit_code(reports);
}

// "lambda;f;rho"
PrincipalIdealSpec parse_spec(const std::string& text, int dim) {
    auto a = text.find(';');
    auto b = a == std::string::npos ? a : text.find(';', a + 1);
    if (b == std::string::npos) throw ParseError(0, "spec must be 'lambda;f;rho'");
    return PrincipalIdealSpec(parse_rational(text.substr(0, a)), parse_vector(text.substr(a + 1, b - a - 1), dim),
                              parse_scalar(text.substr(b + 1)));
}

void expect_status(Report& r, bool decided, bool member, const std::string& expect) {
    if (!decided) {
        r.status = "inconclusive";
        return;
    }
    if (expect.empty()) return;
    if (expect != "in" && expect != "out") throw std::invalid_argument("--expect must be 'in' or 'out'");
    r.status = status_of(member == (expect == "in"));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Resolvent algebra toolkit", "resolvent"};
    app.require_subcommand(1);
    Flags f;

    std::string expr;
    std::size_t budget = SimplifyOptions{}.budget;
    std::size_t cap = SimplifyOptions{}.degree_cap;
    auto* simplify_cmd = app.add_subcommand("simplify", "normalize an expression under the defining relations");
    simplify_cmd->add_option("expr", expr, "expression")->required();
    simplify_cmd->add_option("--budget", budget, "rewrite-step limit");
    simplify_cmd->add_option("--degree-cap", cap, "longest word the commutation rewrite may create");
    add_common(simplify_cmd, f);

    auto* relations_cmd = app.add_subcommand("check-relations", "residual suite for the defining relations");
    add_common(relations_cmd, f);

    std::vector<std::string> y_texts, phi_texts, probe_texts;
    bool all_labels = false, as_character = false;
    auto* label_cmd = app.add_subcommand("label", "irreducible representations from labels");
    label_cmd->require_subcommand(1);
    auto add_label_opts = [&](CLI::App* c) {
        c->add_option("--Y", y_texts, "spanning vectors of Y (comma separated; default X)")->delimiter(',');
        c->add_option("--phi", phi_texts, "phi on the canonical basis of radical(Y)")->delimiter(',');
        add_common(c, f);
    };
    auto* build_cmd = label_cmd->add_subcommand("build", "build a labeled representation");
    add_label_opts(build_cmd);
    std::string export_expr;
    build_cmd->add_option("--export", export_expr, "element whose matrix is added to the report");
    auto* extract_cmd = label_cmd->add_subcommand("extract", "recover the label of a representation");
    add_label_opts(extract_cmd);
    extract_cmd->add_flag("--character", as_character, "treat Y, phi as a character (Z, phi)");
    extract_cmd->add_option("--probe", probe_texts, "probe vectors (default: standard basis)")->delimiter(',');
    auto* roundtrip_cmd = label_cmd->add_subcommand("roundtrip", "build then extract");
    add_label_opts(roundtrip_cmd);
    roundtrip_cmd->add_flag("--all", all_labels, "every coordinate label with phi in {0,1,3}");

    auto* chain_cmd = app.add_subcommand("chain", "longest chain of primitive ideals");
    add_common(chain_cmd, f);

    std::string expect;
    std::vector<std::string> spec_texts;
    int groups = 5;
    auto* ideal_cmd = app.add_subcommand("ideal", "ideal membership checks");
    ideal_cmd->require_subcommand(1);
    auto* member_cmd = ideal_cmd->add_subcommand("member", "membership in a primitive ideal");
    add_label_opts(member_cmd);
    member_cmd->add_option("--expr", expr, "element")->required();
    member_cmd->add_option("--expect", expect, "in | out");
    auto* intersect_cmd = ideal_cmd->add_subcommand("intersect", "intersections of principal ideals");
    intersect_cmd->add_option("--spec", spec_texts, "'lambda;f;rho' (repeatable; default: seeded groups)");
    intersect_cmd->add_option("--groups", groups, "number of seeded groups");
    add_common(intersect_cmd, f);
    auto* principal_cmd = ideal_cmd->add_subcommand("principal", "principal ideal identity");
    add_common(principal_cmd, f);
    auto* maximal_cmd = ideal_cmd->add_subcommand("maximal", "membership in a maximal ideal");
    maximal_cmd->add_option("--Z", y_texts, "spanning vectors of the isotropic Z")->delimiter(',');
    maximal_cmd->add_option("--phi", phi_texts, "phi on the canonical basis of Z")->delimiter(',');
    maximal_cmd->add_option("--expr", expr, "element")->required();
    maximal_cmd->add_option("--expect", expect, "in | out");
    add_common(maximal_cmd, f);
    auto* commutator_cmd = ideal_cmd->add_subcommand("commutator", "commutator ideal checks");
    add_common(commutator_cmd, f);

    auto* all_cmd = app.add_subcommand("report-all", "run every check");
    add_common(all_cmd, f);

    std::vector<std::string> argv_store{"resolvent"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        auto label_from_flags = [&](const RunConfig& rc) {
            Subspace y = y_texts.empty() ? Subspace::whole(rc.dim) : parse_span(y_texts, rc.dim);
            auto values = parse_rationals(phi_texts);
            if (values.empty()) values.assign(radical(y).dim(), 0);
            return IrrepLabel::from_values(y, values);
        };

        if (simplify_cmd->parsed()) {
            RunConfig rc = resolve(f, infer_dim(expr));
            Term t = parse_term(expr, rc.dim);
            SimplifyResult res = simplify(t, {budget, cap});
            out << to_dsl(res.term) << "\n";
            if (f.json_out)
                out << json{{"dsl", to_dsl(res.term)}, {"term", to_json(res.term)}, {"canonical", res.canonical},
                            {"steps", res.steps}}
                           .dump(2)
                    << "\n";
            if (!res.canonical) {
                err << "error: rewrite budget exhausted after " << res.steps << " steps; result is not canonical\n";
                return 3;
            }
            return 0;
        }
        if (relations_cmd->parsed()) return emit(relation_reports(resolve(f)), f, out);

        if (label_cmd->parsed()) {
            RunConfig rc = resolve(f, y_texts.empty() ? std::nullopt : std::optional<int>(infer_all(y_texts)));
            if (roundtrip_cmd->parsed()) {
                if (all_labels) return emit({roundtrip_universe_report(rc.dim, rc.numeric)}, f, out);
                return emit({roundtrip_report(label_from_flags(rc), rc.numeric)}, f, out);
            }
            if (build_cmd->parsed()) {
                IrrepLabel label = label_from_flags(rc);
                Representation rep = Representation::labeled(label, rc.numeric.schedule.front());
                const auto& dec = rep.decomposition();
                Report r{"label:build", "representation from label", "pass"};
                json modes = json::array();
                for (const auto& [e, g] : dec.modes) modes.push_back({to_string(e), to_string(g)});
                r.params = {{"label", to_json(label)},
                            {"representation", rep.describe()},
                            {"modes", modes},
                            {"hilbert_dimension", rep.dimension()},
                            {"decomposition",
                             {{"trivial", to_json(dec.trivial)},
                              {"Zt", to_json(dec.Zt)},
                              {"Q", to_json(dec.Q)},
                              {"N", to_json(dec.N)},
                              {"Sperp", to_json(dec.Sperp)}}}};
                if (!export_expr.empty()) r.params["matrix"] = matrix_to_json(rep.eval(parse_term(export_expr, rc.dim)));
                return emit({r}, f, out);
            }
            // extract
            std::vector<SympVector> probes;
            for (const auto& t : probe_texts) probes.push_back(parse_vector(t, rc.dim));
            if (probes.empty())
                for (int k = 0; k < rc.dim; ++k) probes.push_back(SympSpace(rc.dim).unit(k));
            Representation rep = [&] {
                if (!as_character) return Representation::labeled(label_from_flags(rc), rc.numeric.schedule.front());
                Subspace z = y_texts.empty() ? Subspace::zero(rc.dim) : parse_span(y_texts, rc.dim);
                auto values = parse_rationals(phi_texts);
                if (values.empty()) values.assign(z.dim(), 0);
                return Representation::character(z, LinearFunctional(z, values));
            }();
            ExtractedLabel ex = extract_label(rep, probes, rc.numeric);
            Report r{"label:extract", "label of a representation", ex.inconclusive.empty() ? "pass" : "inconclusive"};
            json inc = json::array();
            for (const auto& v : ex.inconclusive) inc.push_back(to_string(v));
            r.params = {{"representation", rep.describe()}, {"Y", to_json(ex.Y)}, {"phi", ex.phi}, {"inconclusive", inc}};
            return emit({r}, f, out);
        }

        if (chain_cmd->parsed()) {
            RunConfig rc = resolve(f);
            return emit(chain_reports(rc.dim, rc.numeric), f, out);
        }

        if (member_cmd->parsed()) {
            std::vector<std::string> texts = y_texts;
            texts.push_back(expr);
            RunConfig rc = resolve(f, infer_all(texts));
            IrrepLabel label = label_from_flags(rc);
            Term t = parse_term(expr, rc.dim);
            Verdict v = kernel_membership(label, t, rc.numeric);
            Report r{"ideal:member", "primitive ideal membership", "pass"};
            r.residuals = v.residuals;
            r.params = {{"label", to_json(label)}, {"expr", to_dsl(t)}, {"verdict", to_string(v.status)}};
            expect_status(r, v.status != VerdictStatus::Inconclusive, v.status == VerdictStatus::InKernel, expect);
            return emit({r}, f, out);
        }
        if (maximal_cmd->parsed()) {
            std::vector<std::string> texts = y_texts;
            texts.push_back(expr);
            RunConfig rc = resolve(f, infer_all(texts));
            Subspace z = y_texts.empty() ? Subspace::zero(rc.dim) : parse_span(y_texts, rc.dim);
            auto values = parse_rationals(phi_texts);
            if (values.empty()) values.assign(z.dim(), 0);
            LinearFunctional phi(z, values);
            Term t = parse_term(expr, rc.dim);
            bool member = maximal_ideal_membership(z, phi, t);
            Report r{"ideal:maximal", "maximal ideal via character", "pass"};
            r.params = {{"Z", to_json(z)}, {"phi", rationals(values)}, {"expr", to_dsl(t)}, {"member", member}};
            expect_status(r, true, member, expect);
            return emit({r}, f, out);
        }
        if (intersect_cmd->parsed()) {
            RunConfig rc = resolve(f, infer_all(spec_texts));
            std::vector<Report> reports;
            if (spec_texts.empty()) {
                for (const auto& g : sample_intersection_groups(groups, rc.seed))
                    reports.push_back(intersection_report(g, rc.numeric));
            } else {
                std::vector<PrincipalIdealSpec> specs;
                for (const auto& s : spec_texts) specs.push_back(parse_spec(s, rc.dim));
                reports.push_back(intersection_report(specs, rc.numeric));
            }
            return emit(reports, f, out);
        }
        if (principal_cmd->parsed()) {
            RunConfig rc = resolve(f);
            return emit(principal_reports(rc, 10), f, out);
        }
        if (commutator_cmd->parsed()) {
            RunConfig rc = resolve(f);
            return emit(commutator_reports(rc.dim, rc.numeric), f, out);
        }
        if (all_cmd->parsed()) return emit(report_all(resolve(f)), f, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace resolvent
