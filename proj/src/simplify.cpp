// Budgeted directed rewriting under the defining relations.
//
// Rules, tried in this priority order, one rewrite per step:
//   1. resolvent identity   R(l,f) R(m,f) -> (R(l,f) - R(m,f)) / (i(m-l)),  l != m
//   2. sum contraction      c1 R(n,h) R(a,f) + c2 R(n,h) R(b,g) -> c R(a,f) R(b,g)
//                           (and the mirrored form) when sigma(f,g) = 0, h in span{f,g}
//   3. commuting reorder    R(l,f) R(m,g) -> R(m,g) R(l,f) when sigma(f,g) = 0
//   4. CCR reorder          R(l,f) R(m,g) -> R(m,g) R(l,f) + i sigma(f,g) R(l,f) R(m,g)^2 R(l,f)
//                           only while the correction word fits the degree cap
// Reordering moves adjacent generators into generator_less order.
// Homogeneity and R(l,0) are handled by normalization at construction.

#include <optional>

#include "resolvent/algebra.hpp"

namespace resolvent {

namespace {

Word splice(const Word& w, std::size_t from, std::size_t to, const Word& middle) {
    Word out(w.begin(), w.begin() + from);
    out.insert(out.end(), middle.begin(), middle.end());
    out.insert(out.end(), w.begin() + to, w.end());
    return out;
}

std::optional<Term> resolvent_rule(const Term& t) {
    for (const auto& [w, c] : t.monomials()) {
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const Generator& a = w[k];
            const Generator& b = w[k + 1];
            if (a.f != b.f || a.lambda == b.lambda) continue;
            ComplexRational scale = c / (ComplexRational::i() * (b.lambda - a.lambda));
            Term out = t;
            out.add(w, -c);
            out.add(splice(w, k, k + 2, {a}), scale);
            out.add(splice(w, k, k + 2, {b}), -scale);
            return out;
        }
    }
    return std::nullopt;
}

// h = x f + y g with f, g independent; nullopt if h is outside their span.
std::optional<std::pair<Rational, Rational>> solve_pair(const SympVector& h, const SympVector& f,
                                                        const SympVector& g) {
    const int d = f.dim();
    for (int r = 0; r < d; ++r)
        for (int s = r + 1; s < d; ++s) {
            Rational det = f[r] * g[s] - f[s] * g[r];
            if (det == 0) continue;
            Rational x = (h[r] * g[s] - h[s] * g[r]) / det;
            Rational y = (f[r] * h[s] - f[s] * h[r]) / det;
            if (x * f + y * g == h) return std::make_pair(x, y);
            return std::nullopt;
        }
    return std::nullopt;
}

std::optional<Term> sum_rule(const Term& t) {
    const auto& mons = t.monomials();
    for (auto i1 = mons.begin(); i1 != mons.end(); ++i1) {
        const Word& w1 = i1->first;
        if (w1.size() < 2) continue;
        for (auto i2 = std::next(i1); i2 != mons.end(); ++i2) {
            const Word& w2 = i2->first;
            if (w2.size() != w1.size()) continue;
            std::size_t diff = w1.size();
            bool single = true;
            for (std::size_t k = 0; k < w1.size(); ++k) {
                if (w1[k] == w2[k]) continue;
                if (diff != w1.size()) {
                    single = false;
                    break;
                }
                diff = k;
            }
            if (!single || diff == w1.size()) continue;
            const Generator& gb = w1[diff];
            const Generator& gc = w2[diff];
            if (gb.f == gc.f || sigma(gb.f, gc.f) != 0) continue;

            for (int side : {-1, +1}) {
                if ((side < 0 && diff == 0) || (side > 0 && diff + 1 >= w1.size())) continue;
                std::size_t pos_a = side < 0 ? diff - 1 : diff + 1;
                const Generator& ga = w1[pos_a];
                auto xy = solve_pair(ga.f, gb.f, gc.f);
                if (!xy) continue;
                const auto& [x, y] = *xy;
                if (x == 0 || y == 0) continue;
                if (!(ga.lambda == ComplexRational(x) * gb.lambda + ComplexRational(y) * gc.lambda)) continue;
                const ComplexRational& c1 = i1->second;
                const ComplexRational& c2 = i2->second;
                if (!(c1 * ComplexRational(x) == c2 * ComplexRational(y))) continue;
                // (1/(xy)) R(a,f) R(b,g) = (1/x) A R(a,f) + (1/y) A R(b,g), A = R(n,h).
                std::size_t lo = std::min(pos_a, diff);
                Term out = t;
                Word w1c = w1;
                Word w2c = w2;
                out.add(w1c, -c1);
                out.add(w2c, -c2);
                out.add(splice(w1c, lo, lo + 2, {gb, gc}), c1 / ComplexRational(y));
                return out;
            }
        }
    }
    return std::nullopt;
}

std::optional<Term> reorder_rule(const Term& t, bool commuting, std::size_t cap) {
    for (const auto& [w, c] : t.monomials()) {
        for (std::size_t k = 0; k + 1 < w.size(); ++k) {
            const Generator& a = w[k];
            const Generator& b = w[k + 1];
            if (a.f == b.f || !generator_less(b, a)) continue;
            Rational s = sigma(a.f, b.f);
            if (commuting != (s == 0)) continue;
            if (!commuting && w.size() + 2 > cap) continue;
            Term out = t;
            Word wc = w;
            ComplexRational coeff = c;
            out.add(wc, -coeff);
            out.add(splice(wc, k, k + 2, {b, a}), coeff);
            if (!commuting)
                out.add(splice(wc, k, k + 2, {a, b, b, a}), coeff * ComplexRational(0, s));
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace

SimplifyResult simplify(const Term& t, const SimplifyOptions& opts) {
    SimplifyResult res{t, true, 0};
    for (;;) {
        std::optional<Term> next = resolvent_rule(res.term);
        if (!next) next = sum_rule(res.term);
        if (!next) next = reorder_rule(res.term, true, opts.degree_cap);
        if (!next) next = reorder_rule(res.term, false, opts.degree_cap);
        if (!next) return res;
        if (res.steps >= opts.budget) {
            res.canonical = false;
            return res;
        }
        res.term = std::move(*next);
        ++res.steps;
    }
}

}  // namespace resolvent
