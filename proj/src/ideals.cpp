#include "resolvent/ideals.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace resolvent {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::InKernel: return "in_kernel";
        case VerdictStatus::NotInKernel: return "not_in_kernel";
        case VerdictStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict membership(const Representation& rep, const Term& t, const NumericConfig& cfg) {
    Verdict v;
    v.witness = rep.describe();
    if (rep.is_scalar()) {
        ComplexRational x = rep.eval_exact(t);
        v.residuals.push_back(std::abs(x.to_complex()));
        v.status = x.is_zero() ? VerdictStatus::InKernel : VerdictStatus::NotInKernel;
        return v;
    }
    RawTerm raw = to_raw(t);
    for (int N : cfg.schedule) v.residuals.push_back(max_abs(rep.with_levels(N).eval_compressed(raw, cfg.K0)));
    const auto& r = v.residuals;
    if (non_increasing(r, cfg.noise_floor) && r.back() < cfg.tol_in)
        v.status = VerdictStatus::InKernel;
    else if (std::all_of(r.begin(), r.end(), [&](double x) { return x > cfg.tol_out; }))
        v.status = VerdictStatus::NotInKernel;
    else
        v.status = VerdictStatus::Inconclusive;
    return v;
}

Verdict kernel_membership(const PrimLabel& p, const Term& t, const NumericConfig& cfg) {
    return membership(Representation::labeled(p, cfg.schedule.front()), t, cfg);
}

bool label_leq(const PrimLabel& a, const PrimLabel& b) {
    if (!a.Y.contains(b.Y)) return false;
    const Subspace& rad_a = a.phi.domain();
    const Subspace& rad_b = b.phi.domain();
    if (!rad_b.contains(rad_a)) return false;
    for (std::size_t k = 0; k < rad_a.basis().size(); ++k)
        if (b.phi(rad_a.basis()[k]) != a.phi.values()[k]) return false;
    return true;
}

std::vector<PrimLabel> build_chain(int dim) {
    std::vector<PrimLabel> out;
    for (const auto& y : standard_flag(dim)) out.push_back(PrimLabel::from_values(y, {}));
    return out;
}

int max_chain_length(const std::vector<PrimLabel>& labels) {
    const std::size_t n = labels.size();
    std::vector<int> memo(n, 0);
    std::function<int(std::size_t)> longest = [&](std::size_t i) {
        if (memo[i]) return memo[i];
        int best = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && !(labels[i] == labels[j]) && label_leq(labels[i], labels[j]))
                best = std::max(best, 1 + longest(j));
        return memo[i] = best;
    };
    int best = 0;
    for (std::size_t i = 0; i < n; ++i) best = std::max(best, longest(i));
    return best;
}

std::vector<PrimLabel> coordinate_label_universe(int dim, const std::vector<Rational>& phi_values) {
    SympSpace space(dim);
    std::vector<PrimLabel> out;
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
        std::vector<SympVector> gens;
        for (int k = 0; k < dim; ++k)
            if (mask & (1u << k)) gens.push_back(space.unit(k));
        Subspace y = Subspace::span(dim, gens);
        const int r = radical(y).dim();
        std::vector<std::size_t> digit(r, 0);
        for (;;) {
            std::vector<Rational> values;
            for (int k = 0; k < r; ++k) values.push_back(phi_values[digit[k]]);
            out.push_back(PrimLabel::from_values(y, values));
            int k = r - 1;
            for (; k >= 0; --k) {
                if (++digit[k] < phi_values.size()) break;
                digit[k] = 0;
            }
            if (k < 0) break;
        }
    }
    return out;
}

std::vector<ChainWitness> chain_witnesses(const std::vector<PrimLabel>& chain, const NumericConfig& cfg) {
    std::vector<ChainWitness> out;
    for (std::size_t n = 0; n + 1 < chain.size(); ++n) {
        const int d = chain[n].Y.ambient();
        SympSpace space(d);
        for (int k = 0; k < d; ++k) {
            SympVector f = space.unit(k);
            if (!chain[n].Y.contains(f) || chain[n + 1].Y.contains(f)) continue;
            Term t = Term::resolvent(1, f);
            out.push_back({n, f, kernel_membership(chain[n + 1], t, cfg), kernel_membership(chain[n], t, cfg)});
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

PrincipalIdealSpec::PrincipalIdealSpec(Rational l, SympVector v, ComplexRational r)
    : lambda(std::move(l)), f(std::move(v)), rho(std::move(r)) {
    if (!spec_contains(lambda, f, rho)) throw std::invalid_argument("rho is not on the spectral circle");
}

Term principal_element(const PrincipalIdealSpec& s) {
    return Term::resolvent(s.lambda, s.f) - Term::scalar(s.rho);
}

ComplexRational circle_point(const Rational& lambda, const Rational& r) { return ComplexRational(-r, lambda).inverse(); }

Term principal_defect(const PrincipalIdealSpec& s, const Rational& mu) {
    const ComplexRational i = ComplexRational::i();
    const ComplexRational l(s.lambda), m(mu);
    const ComplexRational c = ComplexRational(1) + i * (m - l) * s.rho;
    if (c.is_zero()) throw std::invalid_argument("1 + i(mu - lambda) rho vanishes");
    Term Rm = Term::resolvent(m, s.f);
    Term lhs = c * Rm - Term::scalar(s.rho);
    Term rhs = (Term::identity() + (i * (l - m)) * Rm) * principal_element(s);
    return lhs - rhs;
}

PrincipalIdentityResult principal_identity_check(const PrincipalIdealSpec& s, const Rational& mu,
                                                 const Representation& rep, int K0) {
    Term defect = principal_defect(s, mu);
    const ComplexRational c = ComplexRational(1) + ComplexRational::i() * ComplexRational(mu - s.lambda) * s.rho;
    PrincipalIdentityResult out;
    out.defect_is_zero = defect.is_zero();
    out.residual = max_abs(rep.eval_compressed(defect, K0));
    Representation sharp = Representation::sharp_value(s.lambda, s.f, s.rho);
    out.shifted_value = sharp.resolvent_exact(mu, s.f) - s.rho / c;
    return out;
}

std::vector<PrincipalSample> sample_principal_specs(int dim, int count, std::uint64_t seed) {
    static const std::vector<Rational> coords{Rational(-1, 2), Rational(-1, 3), Rational(-1, 4), Rational(0),
                                              Rational(1, 4),  Rational(1, 3),  Rational(1, 2)};
    static const std::vector<Rational> lambdas{-2, -1, 1, 2};
    static const std::vector<Rational> mus{-3, -2, -1, 1, 2, 3};
    std::mt19937_64 rng(seed);
    auto pick = [&](const std::vector<Rational>& v) { return v[rng() % v.size()]; };
    std::vector<PrincipalSample> out;
    while (static_cast<int>(out.size()) < count) {
        SympVector f = SympVector::zeros(dim);
        for (int k = 0; k < dim; ++k) f[k] = pick(coords);
        if (f.is_zero()) continue;
        Rational lambda = pick(lambdas);
        Rational r = Rational(static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 2) + 1);
        out.push_back({PrincipalIdealSpec(lambda, f, circle_point(lambda, r)), pick(mus)});
    }
    return out;
}

std::vector<std::vector<PrincipalIdealSpec>> sample_intersection_groups(int count, std::uint64_t seed) {
    SympSpace space(2);
    const std::vector<SympVector> vectors{space.p(1), space.q(1), space.p(1) + space.q(1), space.p(1) - space.q(1)};
    static const std::vector<Rational> lambdas{-1, 1};
    std::mt19937_64 rng(seed);
    std::vector<std::vector<PrincipalIdealSpec>> out;
    for (int g = 0; g < count; ++g) {
        std::vector<PrincipalIdealSpec> group;
        const std::size_t size = 2 + rng() % 2;
        while (group.size() < size) {
            SympVector f = vectors[rng() % vectors.size()];
            Rational lambda = lambdas[rng() % lambdas.size()];
            const auto choice = rng() % 4;
            ComplexRational rho = choice == 0 ? ComplexRational(0) : circle_point(lambda, Rational(static_cast<int>(choice) - 2));
            group.emplace_back(lambda, f, rho);
        }
        out.push_back(std::move(group));
    }
    return out;
}

Term intersection_element(const std::vector<PrincipalIdealSpec>& specs) {
    if (specs.empty()) throw std::invalid_argument("intersection of no principal ideals");
    Term out = Term::identity();
    for (const auto& s : specs) out = out * principal_element(s);
    return out;
}

bool maximal_ideal_membership(const Subspace& z, const LinearFunctional& phi, const Term& t) {
    return Representation::character(z, phi).eval_exact(t).is_zero();
}

// ---------------------------------------------------------------------------

std::vector<Representation> sample_characters(int dim) {
    SympSpace space(dim);
    std::vector<Representation> out;
    for (unsigned mask = 0; mask < (1u << dim); ++mask) {
        std::vector<SympVector> gens;
        bool isotropic = true;
        for (int k = 0; k < dim; ++k) {
            if (!(mask & (1u << k))) continue;
            if (k % 2 == 1 && (mask & (1u << (k - 1)))) isotropic = false;
            gens.push_back(space.unit(k));
        }
        if (!isotropic) continue;
        Subspace z = Subspace::span(dim, gens);
        for (unsigned bits = 0; bits < (1u << z.dim()); ++bits) {
            std::vector<Rational> values;
            for (int k = 0; k < z.dim(); ++k) values.push_back((bits >> k) & 1u ? 1 : 0);
            out.push_back(Representation::character(z, LinearFunctional(z, values)));
        }
    }
    return out;
}

std::vector<Representation> sample_representations(int dim, int levels) {
    SympSpace space(dim);
    Subspace p1 = Subspace::span(dim, {space.p(1)});
    Subspace q1 = Subspace::span(dim, {space.q(1)});
    std::vector<Representation> out;
    out.push_back(Representation::regular(dim, levels));
    out.push_back(Representation::labeled(PrimLabel::from_values(p1, {0}), levels));
    out.push_back(Representation::labeled(PrimLabel::from_values(q1, {1}), levels));
    out.push_back(Representation::sharp_value(1, space.p(1), ComplexRational(0, -1)));
    out.push_back(Representation::sharp_value(2, space.q(1), circle_point(2, 1)));
    out.push_back(Representation::character(p1, LinearFunctional(p1, {3})));
    return out;
}

CommutatorReport commutator_ideal_checks(int dim, const NumericConfig& cfg) {
    SympSpace space(dim);
    std::vector<SympVector> vectors;
    for (int k = 0; k < dim; ++k) vectors.push_back(space.unit(k));
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b) vectors.push_back(space.unit(a) + space.unit(b));
    const std::vector<Rational> lambdas{1, -2};

    CommutatorReport rep;
    auto chars = sample_characters(dim);
    rep.characters = chars.size();
    for (const auto& chi : chars)
        for (const auto& f : vectors)
            for (const auto& g : vectors)
                for (const auto& l : lambdas)
                    for (const auto& m : lambdas) {
                        Term a = Term::resolvent(l, f), b = Term::resolvent(m, g);
                        ++rep.commutators_checked;
                        if (!chi.eval_exact(commutator(a, b)).is_zero()) ++rep.commutator_failures;
                        if (sigma(f, g) == 0) continue;
                        ++rep.products_checked;
                        if (!chi.eval_exact(a * b).is_zero()) ++rep.product_failures;
                    }

    auto reps = sample_representations(dim, cfg.schedule.front());
    for (const auto& c : chars) reps.push_back(c);
    for (const auto& f : vectors)
        for (const auto& g : vectors) {
            if (sigma(f, g) == 0) continue;
            for (const auto& l : lambdas)
                for (const auto& m : lambdas) {
                    Term a = Term::resolvent(l, f), b = Term::resolvent(m, g);
                    Term sandwich = a * b * b * a;
                    Term product = a * b;
                    for (const auto& r : reps) {
                        ++rep.equivalence_checked;
                        auto vs = membership(r, sandwich, cfg).status;
                        auto vp = membership(r, product, cfg).status;
                        bool in_s = vs == VerdictStatus::InKernel, in_p = vp == VerdictStatus::InKernel;
                        if (in_s != in_p) ++rep.equivalence_failures;
                        if (in_s && in_p) ++rep.equivalence_in_kernel;
                    }
                }
        }
    return rep;
}

// ---------------------------------------------------------------------------

SymplecticMap SymplecticMap::identity(int dim) {
    SympSpace space(dim);
    SymplecticMap m;
    for (int k = 0; k < dim; ++k) m.images_.push_back(space.unit(k));
    return m;
}

SymplecticMap SymplecticMap::permute_pairs(const std::vector<int>& perm) {
    const int dim = 2 * static_cast<int>(perm.size());
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int k = 0; k < static_cast<int>(sorted.size()); ++k)
        if (sorted[k] != k) throw std::invalid_argument("not a permutation of the pairs");
    SympSpace space(dim);
    SymplecticMap m;
    for (int k = 0; k < dim / 2; ++k) {
        m.images_.push_back(space.p(perm[k] + 1));
        m.images_.push_back(space.q(perm[k] + 1));
    }
    return m;
}

SymplecticMap SymplecticMap::rotate_pair(int dim, int k) {
    SympSpace space(dim);
    if (k < 1 || k > space.modes()) throw std::invalid_argument("pair index out of range");
    SymplecticMap m = identity(dim);
    m.images_[2 * (k - 1)] = space.q(k);
    m.images_[2 * (k - 1) + 1] = -space.p(k);
    return m;
}

SymplecticMap SymplecticMap::between(int dim, int dim2) {
    if (dim != dim2) throw std::invalid_argument("symplectic spaces of different dimension are not isomorphic");
    return identity(dim);
}

SympVector SymplecticMap::operator()(const SympVector& f) const {
    if (f.dim() != dim()) throw std::invalid_argument("dimension mismatch");
    SympVector out = SympVector::zeros(dim());
    for (int k = 0; k < dim(); ++k)
        if (f[k] != 0) out += f[k] * images_[k];
    return out;
}

bool SymplecticMap::preserves_form() const {
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b) {
            SympSpace space(dim());
            if (sigma(images_[a], images_[b]) != sigma(space.unit(a), space.unit(b))) return false;
        }
    return true;
}

Term SymplecticMap::operator()(const Term& t) const {
    Term out;
    for (const auto& [w, c] : t.monomials()) {
        Term m = Term::scalar(c);
        for (const auto& g : w) m = m * Term::resolvent(g.lambda, (*this)(g.f));
        out += m;
    }
    return out;
}

}  // namespace resolvent
