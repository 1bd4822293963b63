// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "resolvent/commands.hpp"
#include "resolvent/ideals.hpp"

using namespace resolvent;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational small_rational(std::mt19937_64& rng) {
    static const int num[] = {-3, -2, -1, 0, 1, 2, 3};
    static const int den[] = {1, 2, 3};
    return Rational(num[rng() % 7], den[rng() % 3]);
}

SympVector random_vector(int dim, std::mt19937_64& rng) {
    SympVector v = SympSpace(dim).zero();
    for (int k = 0; k < dim; ++k) v[k] = small_rational(rng);
    return v;
}

Rational nonzero(std::mt19937_64& rng) {
    Rational r;
    do r = small_rational(rng);
    while (r == 0);
    return r;
}

Term random_term(int dim, std::mt19937_64& rng) {
    Term t;
    int monos = 1 + static_cast<int>(rng() % 3);
    for (int m = 0; m < monos; ++m) {
        Term w = Term::scalar(ComplexRational(small_rational(rng), small_rational(rng)));
        int len = static_cast<int>(rng() % 4);
        for (int k = 0; k < len; ++k) w = w * Term::resolvent(nonzero(rng), random_vector(dim, rng));
        t = t + w;
    }
    return t;
}

// 1 / (i lambda - r), computed componentwise.
ComplexRational circle_oracle(const Rational& lambda, const Rational& r) {
    Rational n = r * r + lambda * lambda;
    return ComplexRational(-r / n, -lambda / n);
}

// |rho - c|^2 = 1/(4 lambda^2) with c = -i/(2 lambda); 0 lies on it.
bool on_circle_oracle(const Rational& lambda, const ComplexRational& rho) {
    Rational dx = rho.re(), dy = rho.im() + 1 / (2 * lambda);
    return dx * dx + dy * dy == 1 / (4 * lambda * lambda);
}

Outcome criterion1() {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    for (int dim : {2, 4}) {
        RunConfig rc;
        rc.dim = dim;
        rc.count = 20;
        const std::vector<int> expected = dim == 2 ? std::vector<int>{16, 32, 64} : std::vector<int>{8, 16, 24};
        o.require(rc.relation_schedule() == expected, "unexpected schedule");
        o.require(rc.relation_tolerance() == (dim == 2 ? 1e-6 : 1e-5), "unexpected tolerance");
        auto reports = relation_reports(rc);
        o.require(reports.size() == 6, "six relations expected");
        for (const auto& r : reports) {
            o.require(r.params["count"] == 20, r.check + " sample count");
            o.require(r.status == "pass", r.check + " d=" + std::to_string(dim) + " " + r.residuals.dump());
        }
    }
    double t = seconds_since(t0);
    o.require(t < 60, "runtime " + sci(t) + " s");
    if (o.ok) o.detail = "d=2 and d=4, 20 instances per relation, " + sci(t) + " s";
    return o;
}

Outcome criterion2() {
    Outcome o;
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 50; ++k) {
        Rational l = nonzero(rng);
        Term t = Term::resolvent(l, SympSpace(2).zero());
        o.require(t == Term::scalar(ComplexRational(0, -1 / l)), "R(l,0) != -i/l");
    }
    for (int dim : {2, 4}) {
        for (int k = 0; k < 100; ++k) {
            Term s = random_term(dim, rng), t = random_term(dim, rng);
            ComplexRational c(small_rational(rng), small_rational(rng));
            o.require(adjoint(adjoint(s)) == s, "adjoint is not involutive");
            o.require(adjoint(s * t) == adjoint(t) * adjoint(s), "adjoint does not reverse products");
            o.require(adjoint(Term::scalar(c) * s + t) == Term::scalar(c.conj()) * adjoint(s) + adjoint(t),
                      "adjoint is not antilinear");
        }
        for (const auto& ch : sample_characters(dim))
            for (int k = 0; k < 30; ++k) {
                Term s = random_term(dim, rng), t = random_term(dim, rng);
                o.require(ch.eval_exact(s * t) == ch.eval_exact(s) * ch.eval_exact(t), "character not multiplicative");
                o.require(ch.eval_exact(adjoint(s)) == ch.eval_exact(s).conj(), "character not a *-map");
            }
    }
    if (o.ok) o.detail = "R(l,0), adjoint and character identities exact";
    return o;
}

Outcome criterion3() {
    Outcome o;
    SympSpace x(2);
    int on = 0, off = 0;
    for (int l : {-2, -1, 1, 2})
        for (int num = -20; num <= 20; ++num) {
            Rational r(num, 2);  // -10 .. 10 in halves
            ComplexRational rho = circle_oracle(l, r);
            o.require(rho == (ComplexRational(-r, l)).inverse(), "oracle mismatch");
            o.require(spec_contains(l, x.p(1), rho), "circle point rejected");
            o.require(spec_contains(l, x.q(1) - x.p(1), rho), "circle point rejected");
            ++on;
        }
    std::mt19937_64 rng(17);
    while (off < 20) {
        Rational l = (rng() % 2 ? 1 : -1) * Rational(1 + static_cast<int>(rng() % 2));
        ComplexRational rho(small_rational(rng), small_rational(rng));
        if (on_circle_oracle(l, rho)) continue;
        o.require(!spec_contains(l, x.p(1), rho), "off-circle point accepted: " + to_string(rho));
        ++off;
    }
    if (o.ok) o.detail = std::to_string(on) + " circle points accepted, " + std::to_string(off) + " off-circle rejected";
    return o;
}

Outcome criterion4() {
    Outcome o;
    NumericConfig cfg;
    cfg.schedule = {8, 12, 16};
    std::size_t labels = 0;
    double worst = 0;
    for (int dim : {2, 4}) {
        SympSpace x(dim);
        std::vector<SympVector> probes;
        for (int k = 0; k < dim; ++k) probes.push_back(x.unit(k));
        for (const auto& l : coordinate_label_universe(dim, {0, 1, 3})) {
            ++labels;
            auto ex = extract_label(Representation::labeled(l, cfg.schedule.front()), probes, cfg);
            o.require(ex.inconclusive.empty(), "inconclusive probes");
            o.require(ex.Y == l.Y, "Y not recovered");
            if (ex.Y != l.Y || ex.phi.size() != l.phi.values().size()) continue;
            for (std::size_t k = 0; k < ex.phi.size(); ++k)
                worst = std::max(worst, std::abs(ex.phi[k] - to_double(l.phi.values()[k])));
        }
    }
    o.require(worst <= 1e-6, "phi error " + sci(worst));
    if (o.ok) o.detail = std::to_string(labels) + " labels, max phi error " + sci(worst);
    return o;
}

Outcome criterion5() {
    Outcome o;
    NumericConfig cfg;
    for (int dim : {2, 4, 6}) {
        auto chain = build_chain(dim);
        o.require(static_cast<int>(chain.size()) == dim / 2 + 1, "chain length d=" + std::to_string(dim));
        for (std::size_t k = 0; k + 1 < chain.size(); ++k)
            o.require(label_leq(chain[k], chain[k + 1]) && !(chain[k] == chain[k + 1]), "chain not strict");
        for (const auto& w : chain_witnesses(chain, cfg)) o.require(w.pass(), "strictness witness failed");
    }
    for (int dim : {2, 4})
        o.require(max_chain_length(coordinate_label_universe(dim, {0, 1})) == dim / 2 + 1,
                  "universe chain length d=" + std::to_string(dim));
    if (o.ok) o.detail = "lengths 2, 3, 4; witnesses pass; universe maxima 2, 3";
    return o;
}

Outcome criterion6() {
    Outcome o;
    auto reg = Representation::regular(2, 64);
    double worst = 0;
    for (const auto& s : sample_principal_specs(2, 10, 1)) {
        auto res = principal_identity_check(s.spec, s.mu, reg, 8);
        worst = std::max(worst, res.residual);
        o.require(res.residual < 1e-6, "residual " + sci(res.residual));
        // R(mu, f) is (i mu - r)^{-1} in the sharp state; so is rho / (1 + i(mu - lambda) rho)
        o.require(res.shifted_value == ComplexRational(0), "sharp-state value mismatch");
        auto same = principal_identity_check(s.spec, s.spec.lambda, reg, 8);
        o.require(same.defect_is_zero && same.residual == 0, "lambda = mu is not exactly zero");
    }
    if (o.ok) o.detail = "10 triples, max residual " + sci(worst) + ", lambda = mu exact";
    return o;
}

Outcome criterion7() {
    Outcome o;
    NumericConfig cfg;
    auto suite = sample_representations(2, cfg.schedule.front());
    int regular = 0, labeled = 0, sharp = 0, character = 0;
    for (const auto& r : suite) switch (r.kind()) {
            case RepKind::Regular: ++regular; break;
            case RepKind::Labeled: ++labeled; break;
            case RepKind::SharpValue: ++sharp; break;
            case RepKind::Character: ++character; break;
        }
    o.require(suite.size() >= 6 && regular >= 1 && labeled >= 2 && sharp >= 2 && character >= 1, "suite composition");
    auto by_f = [](const PrincipalIdealSpec& a, const PrincipalIdealSpec& b) {
        return std::make_pair(to_string(a.f), to_string(a.rho)) < std::make_pair(to_string(b.f), to_string(b.rho));
    };
    std::size_t perms = 0;
    for (auto g : sample_intersection_groups(5, 1)) {
        std::sort(g.begin(), g.end(), by_f);
        std::vector<VerdictStatus> first;
        for (const auto& r : suite) first.push_back(membership(r, intersection_element(g), cfg).status);
        while (std::next_permutation(g.begin(), g.end(), by_f)) {
            ++perms;
            for (std::size_t k = 0; k < suite.size(); ++k)
                o.require(membership(suite[k], intersection_element(g), cfg).status == first[k],
                          "verdict depends on order in " + suite[k].describe());
        }
    }
    if (o.ok)
        o.detail = "5 groups, " + std::to_string(perms) + " reorderings, " + std::to_string(suite.size()) +
                   " representations";
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::mt19937_64 rng(8);
    std::size_t checked = 0;
    for (int dim : {2, 4})
        for (const auto& ch : sample_characters(dim))
            for (int k = 0; k < 40; ++k) {
                Term a = Term::resolvent(nonzero(rng), random_vector(dim, rng));
                SympVector f = random_vector(dim, rng), g = random_vector(dim, rng);
                Term b = Term::resolvent(nonzero(rng), g);
                o.require(ch.eval_exact(commutator(a, b)) == ComplexRational(0), "commutator not annihilated");
                if (sigma(f, g) != 0) {
                    Term p = Term::resolvent(nonzero(rng), f) * b;
                    o.require(ch.eval_exact(p) == ComplexRational(0), "noncommuting product not annihilated");
                }
                ++checked;
            }
    auto rep = commutator_ideal_checks(2, NumericConfig{});
    o.require(rep.pass(), "generating-set checks failed");
    if (o.ok)
        o.detail = std::to_string(checked) + " exact character checks; " + std::to_string(rep.equivalence_checked) +
                   " equivalence verdicts agree";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"relation residuals converge", criterion1},
        {"exact identities", criterion2},
        {"spectral circle predicate", criterion3},
        {"label round trip", criterion4},
        {"chain length", criterion5},
        {"principal ideal identity", criterion6},
        {"intersection order independence", criterion7},
        {"characters and the commutator ideal", criterion8},
    };
    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.ok) ++failed;
        std::printf("%s criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                    o.detail.c_str());
    }
    return failed ? 1 : 0;
}
