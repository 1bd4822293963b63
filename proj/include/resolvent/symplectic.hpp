#pragma once

// Exact linear algebra on the standard symplectic space (X, sigma).
//
// Coordinates are ordered (p_1, q_1, ..., p_k, q_k) with
// sigma(p_i, q_j) = delta_ij and sigma(p_i, p_j) = sigma(q_i, q_j) = 0.
// Everything here is exact; there is no floating point in this module.

#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "resolvent/rational.hpp"

namespace resolvent {

class SympVector;

/// The ambient space; only its (even) dimension matters.
class SympSpace {
public:
    explicit SympSpace(int dim);

    int dim() const { return dim_; }
    int modes() const { return dim_ / 2; }

    SympVector zero() const;
    /// p_i, 1-based as in the expression language.
    SympVector p(int i) const;
    SympVector q(int i) const;
    /// Standard basis vector by coordinate index (0-based).
    SympVector unit(int coord) const;

    friend bool operator==(const SympSpace&, const SympSpace&) = default;

private:
    int dim_;
};

class SympVector {
public:
    SympVector() = default;
    explicit SympVector(std::vector<Rational> coords) : c_(std::move(coords)) {}
    static SympVector zeros(int dim) { return SympVector(std::vector<Rational>(dim, Rational(0))); }

    int dim() const { return static_cast<int>(c_.size()); }
    const Rational& operator[](int i) const { return c_[i]; }
    Rational& operator[](int i) { return c_[i]; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    /// Index of the first nonzero coordinate, or -1.
    int leading_index() const;

    SympVector& operator+=(const SympVector& o);
    SympVector& operator-=(const SympVector& o);
    SympVector& operator*=(const Rational& s);
    friend SympVector operator+(SympVector a, const SympVector& b) { return a += b; }
    friend SympVector operator-(SympVector a, const SympVector& b) { return a -= b; }
    friend SympVector operator*(const Rational& s, SympVector v) { return v *= s; }
    SympVector operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const SympVector&, const SympVector&) = default;
    /// Lexicographic on coordinates.
    friend bool operator<(const SympVector& a, const SympVector& b) { return a.c_ < b.c_; }

    std::vector<double> to_doubles() const;

private:
    std::vector<Rational> c_;
};

/// sigma(f, g) = sum_i f_{p_i} g_{q_i} - f_{q_i} g_{p_i}. Throws on dimension mismatch.
Rational sigma(const SympVector& f, const SympVector& g);

/// A linear subspace held in reduced row-echelon form, which makes
/// equality of subspaces equality of bases.
class Subspace {
public:
    static Subspace zero(int ambient);
    static Subspace whole(int ambient);
    static Subspace span(int ambient, std::span<const SympVector> vectors);
    static Subspace span(int ambient, std::initializer_list<SympVector> vectors) {
        return span(ambient, std::span<const SympVector>(vectors.begin(), vectors.size()));
    }

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    bool is_zero() const { return basis_.empty(); }
    const std::vector<SympVector>& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const SympVector& v) const;
    bool contains(const Subspace& other) const;
    /// Coefficients of v in the canonical basis. Throws if v is outside.
    std::vector<Rational> coordinates(const SympVector& v) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    Subspace(int ambient, std::vector<SympVector> basis, std::vector<int> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    int ambient_ = 0;
    std::vector<SympVector> basis_;
    std::vector<int> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);
/// S^perp = { f : sigma(f, S) = 0 }.
Subspace complement(const Subspace& s);
/// S intersected with S^perp.
Subspace radical(const Subspace& s);
bool is_nondegenerate(const Subspace& s);
bool is_isotropic(const Subspace& s);

/// Vectors w_1..w_k with sigma(z_i, w_j) = delta_ij and sigma(w_i, w_j) = 0,
/// paired with the canonical basis z_1..z_k of an isotropic Z. Each w_j is the
/// particular solution of its linear system with all free coordinates zero.
/// Throws std::invalid_argument if Z is not isotropic.
std::vector<SympVector> symplectic_dual_basis(const Subspace& z);
/// span of symplectic_dual_basis(z).
Subspace symplectic_completion(const Subspace& z);

/// Darboux basis (e_i, f_i), sigma(e_i, f_j) = delta_ij, of a nondegenerate
/// subspace, built by symplectic Gram-Schmidt from the canonical basis.
std::vector<std::pair<SympVector, SympVector>> symplectic_basis(const Subspace& s);

/// X = Q (+) N (+) Sperp relative to a regular subspace X_R, where
/// Q = X_T + Zt, X_T = radical(X_R), N = Q^perp cap X_R, Sperp = Q^perp cap X_R^perp.
struct Decomposition {
    Subspace regular;
    Subspace trivial;  // X_T
    Subspace Zt;
    Subspace Q;
    Subspace N;
    Subspace Sperp;
    std::vector<SympVector> trivial_basis;  // canonical basis of X_T
    std::vector<SympVector> dual_basis;     // sigma(trivial_basis[i], dual_basis[j]) = delta_ij
    std::vector<std::pair<SympVector, SympVector>> modes;  // Darboux basis of N
};

Decomposition decompose(const Subspace& regular);

/// Unique f = f_T + f_N with f_T in X_T and f_N in N. Throws std::invalid_argument
/// when f lies outside X_T + N.
std::pair<SympVector, SympVector> split(const SympVector& f, const Decomposition& d);

/// X_0 = X, X_1, ..., X_k where X_j drops the last j symplectic pairs.
std::vector<Subspace> standard_flag(int dim, int k);
inline std::vector<Subspace> standard_flag(int dim) { return standard_flag(dim, dim / 2); }

/// A real linear functional on a subspace, stored by its values on the
/// canonical basis.
class LinearFunctional {
public:
    LinearFunctional() = default;
    LinearFunctional(Subspace domain, std::vector<Rational> values);
    static LinearFunctional zero(const Subspace& domain);

    const Subspace& domain() const { return domain_; }
    const std::vector<Rational>& values() const { return values_; }
    /// Throws if v is outside the domain.
    Rational operator()(const SympVector& v) const;

    friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

private:
    Subspace domain_ = Subspace::zero(0);
    std::vector<Rational> values_;
};

// JSON: vectors and subspaces as arrays of rational strings, SympSpace as {"dim": d}.
nlohmann::json to_json(const SympVector& v);
nlohmann::json to_json(const Subspace& s);
nlohmann::json to_json(const SympSpace& s);
SympVector vector_from_json(const nlohmann::json& j);
Subspace subspace_from_json(int ambient, const nlohmann::json& j);

}  // namespace resolvent
