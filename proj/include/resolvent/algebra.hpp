#pragma once

// Noncommutative *-polynomials in resolvent generators R(lambda, f).
//
// Terms only ever hold normalized generators: f != 0 with first nonzero
// coordinate equal to 1, obtained from the homogeneity relation
//     nu R(nu lambda, nu f) = R(lambda, f),
// while R(lambda, 0) is replaced by the scalar -(i/lambda).

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "resolvent/rational.hpp"
#include "resolvent/symplectic.hpp"

namespace resolvent {

struct Generator {
    ComplexRational lambda;  // Re(lambda) != 0
    SympVector f;            // normalized, nonzero
};

/// Fixed generator order: lexicographic on f, then on lambda (re, im).
bool generator_less(const Generator& a, const Generator& b);
bool operator==(const Generator& a, const Generator& b);

/// R(lambda, f) = factor * R(generator) or, when f = 0, factor * 1.
struct NormalizedGenerator {
    ComplexRational factor;
    std::optional<Generator> generator;
};

/// Throws std::invalid_argument when Re(lambda) = 0.
NormalizedGenerator normalize_generator(const ComplexRational& lambda, const SympVector& f);

using Word = std::vector<Generator>;

struct WordLess {
    bool operator()(const Word& a, const Word& b) const;
};

class Term {
public:
    using Map = std::map<Word, ComplexRational, WordLess>;

    Term() = default;
    static Term scalar(const ComplexRational& c);
    static Term identity() { return scalar(1); }
    /// R(lambda, f), normalized.
    static Term resolvent(const ComplexRational& lambda, const SympVector& f);
    static Term monomial(const ComplexRational& c, Word w);

    const Map& monomials() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    /// Longest word length.
    std::size_t degree() const;
    /// Coefficient of the empty word if the term is a pure scalar.
    std::optional<ComplexRational> as_scalar() const;

    Term& operator+=(const Term& o);
    Term& operator-=(const Term& o);
    Term& operator*=(const ComplexRational& c);
    friend Term operator+(Term a, const Term& b) { return a += b; }
    friend Term operator-(Term a, const Term& b) { return a -= b; }
    friend Term operator*(const Term& a, const Term& b);
    friend Term operator*(const ComplexRational& c, Term t) { return t *= c; }
    Term operator-() const { return ComplexRational(-1) * *this; }

    friend bool operator==(const Term& a, const Term& b);

    /// Adds c * w, dropping the entry if the coefficient cancels.
    void add(const Word& w, const ComplexRational& c);

private:
    Map terms_;
};

/// Antilinear, word-reversing, R(lambda, f) -> R(-conj(lambda), f).
Term adjoint(const Term& t);
Term commutator(const Term& a, const Term& b);

struct SimplifyOptions {
    std::size_t budget = 10000;
    /// Reordering with the CCR correction is applied only while the
    /// correction word stays within this length.
    std::size_t degree_cap = 4;
};

struct SimplifyResult {
    Term term;
    bool canonical = true;  // false when the budget ran out
    std::size_t steps = 0;
};

SimplifyResult simplify(const Term& t, const SimplifyOptions& opts = {});

/// rho lies in spec(R(lambda, f)) for f != 0: rho = 0 or
/// conj(rho) - rho = 2 i lambda |rho|^2. Throws if lambda = 0 or f = 0.
bool spec_contains(const Rational& lambda, const SympVector& f, const ComplexRational& rho);

/// chi(R(mu, g)) = (i mu - phi(g))^{-1}.
ComplexRational character_value(const Rational& mu, const Rational& phi_g);

/// Probe generators of the primitive ideal labelled by (X_R, phi):
/// R(lambda, s) for probe vectors s outside X_R and R(mu, g) - chi(R(mu, g)) 1
/// for the canonical basis g of radical(X_R).
std::vector<Term> primitive_generators(const Subspace& regular, const LinearFunctional& phi,
                                       const Rational& lambda, const Rational& mu);
/// Probe vectors used for the singular part: each standard basis vector c
/// extending X_R, plus c + y for every canonical basis vector y of X_R.
std::vector<SympVector> singular_probes(const Subspace& regular);

// ---------------------------------------------------------------------------
// Expression language

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// R(<rational>, <combination of p1..pk, q1..qk>), + - *, adj(...), i, rational scalars.
Term parse_term(std::string_view text, int dim);
/// Vector in the combination syntax, e.g. "p1 - 1/2*q2" or "0".
SympVector parse_vector(std::string_view text, int dim);
/// A scalar expression like "3", "-1/2*i", "1+2*i".
ComplexRational parse_scalar(std::string_view text);
/// Smallest even dimension covering every p_k / q_k mentioned (at least 2).
int infer_dim(std::string_view text);

std::string to_string(const SympVector& v);
std::string to_dsl(const Term& t);
/// [{"word": [[re, im, coords...], ...], "coeff": [re, im]}, ...] with rational strings.
nlohmann::json to_json(const Term& t);
Term term_from_json(const nlohmann::json& j);

}  // namespace resolvent
