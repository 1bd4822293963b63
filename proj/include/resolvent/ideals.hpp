#pragma once

// Ideal structure checks: primitive-ideal membership and order, chains,
// principal ideals, maximal ideals and the commutator ideal.
//
// Membership is decided by evaluating in the representation whose kernel is
// the ideal: exactly for one-dimensional representations, and from the decay
// of compressed residuals across the truncation schedule otherwise.

#include <optional>
#include <string>
#include <vector>

#include "resolvent/algebra.hpp"
#include "resolvent/repr.hpp"
#include "resolvent/symplectic.hpp"

namespace resolvent {

using PrimLabel = IrrepLabel;

enum class VerdictStatus { InKernel, NotInKernel, Inconclusive };

std::string to_string(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::vector<double> residuals;
    std::string witness;  // describe() of the deciding representation
};

/// Verdict of t in a given representation (exact for scalar kinds).
Verdict membership(const Representation& rep, const Term& t, const NumericConfig& cfg);
Verdict kernel_membership(const PrimLabel& p, const Term& t, const NumericConfig& cfg);

/// Y >= Y', radical(Y) <= radical(Y') and phi' = phi on radical(Y).
bool label_leq(const PrimLabel& a, const PrimLabel& b);

/// Labels over the standard flag with zero functionals; increasing under label_leq.
std::vector<PrimLabel> build_chain(int dim);

/// Longest strictly increasing chain under label_leq.
int max_chain_length(const std::vector<PrimLabel>& labels);

/// Every coordinate subspace Y with phi taking each value in `phi_values` on
/// each canonical radical basis vector.
std::vector<PrimLabel> coordinate_label_universe(int dim, const std::vector<Rational>& phi_values);

struct ChainWitness {
    std::size_t index;  // compares chain[index] with chain[index + 1]
    SympVector f;
    Verdict lower;      // R(1, f) in chain[index + 1]: expected InKernel
    Verdict upper;      // R(1, f) in chain[index]: expected NotInKernel
    bool pass() const {
        return lower.status == VerdictStatus::InKernel && upper.status == VerdictStatus::NotInKernel;
    }
};

/// For consecutive chain labels, R(1, f) with f in X_n but not X_{n+1}.
std::vector<ChainWitness> chain_witnesses(const std::vector<PrimLabel>& chain, const NumericConfig& cfg);

// ---------------------------------------------------------------------------

struct PrincipalIdealSpec {
    Rational lambda;
    SympVector f;
    ComplexRational rho;

    /// Throws std::invalid_argument when rho is off the spectral circle.
    PrincipalIdealSpec(Rational l, SympVector v, ComplexRational r);
};

/// R(lambda, f) - rho 1.
Term principal_element(const PrincipalIdealSpec& s);

/// (i lambda - r)^{-1} for a real r.
ComplexRational circle_point(const Rational& lambda, const Rational& r);

/// (1 + i(mu - lambda) rho) R(mu, f) - rho 1 - (1 + i(lambda - mu) R(mu, f)) (R(lambda, f) - rho 1)
/// as an exact Term. Throws std::invalid_argument when 1 + i(mu - lambda) rho = 0.
Term principal_defect(const PrincipalIdealSpec& s, const Rational& mu);

struct PrincipalIdentityResult {
    /// Compressed residual of principal_defect in the given representation.
    double residual = 0;
    /// The defect cancels symbolically (always so when lambda = mu).
    bool defect_is_zero = false;
    /// R(mu, f) - rho / (1 + i(mu - lambda) rho) 1, evaluated exactly in the sharp-value state.
    ComplexRational shifted_value;
};

/// Throws std::invalid_argument when 1 + i(mu - lambda) rho = 0.
PrincipalIdentityResult principal_identity_check(const PrincipalIdealSpec& s, const Rational& mu,
                                                 const Representation& rep, int K0);

struct PrincipalSample {
    PrincipalIdealSpec spec;
    Rational mu;
};

/// Seeded (lambda, mu, rho) triples with rho = (i lambda - r)^{-1} on the circle
/// (or 0), lambda in {+-1, +-2}, mu in {+-1, +-2, +-3}, r in {-2, ..., 2} / {1, 2}.
std::vector<PrincipalSample> sample_principal_specs(int dim, int count, std::uint64_t seed);

/// Seeded groups of two or three specs in dimension 2 with lambda = +-1, f among
/// p1, q1, p1 +- q1 and rho = 0 or (i lambda - r)^{-1}, r in {-1, 0, 1}.
std::vector<std::vector<PrincipalIdealSpec>> sample_intersection_groups(int count, std::uint64_t seed);

/// Ordered product of the principal elements.
Term intersection_element(const std::vector<PrincipalIdealSpec>& specs);

/// True iff the character (Z, phi) sends t to exactly 0. Throws if Z is not isotropic.
bool maximal_ideal_membership(const Subspace& z, const LinearFunctional& phi, const Term& t);

// ---------------------------------------------------------------------------

struct CommutatorReport {
    std::size_t characters = 0;
    std::size_t commutators_checked = 0;
    std::size_t commutator_failures = 0;
    std::size_t products_checked = 0;  // R(l,f) R(m,g) with sigma(f,g) != 0
    std::size_t product_failures = 0;
    std::size_t equivalence_checked = 0;
    std::size_t equivalence_failures = 0;
    std::size_t equivalence_in_kernel = 0;  // cases where both sides were InKernel
    bool pass() const { return commutator_failures == 0 && product_failures == 0 && equivalence_failures == 0; }
};

/// Sample characters on every isotropic coordinate subspace of dimension dim,
/// each with phi in {0, 1} per basis vector.
std::vector<Representation> sample_characters(int dim);
/// Regular, labeled, sharp-value and character representations in dimension dim.
std::vector<Representation> sample_representations(int dim, int levels);

/// (a) characters kill commutators of generators; (b) characters kill
/// R(l,f) R(m,g) when sigma(f,g) != 0; (c) R(l,f) R(m,g)^2 R(l,f) and
/// R(l,f) R(m,g) are in the kernel of the same sampled representations.
CommutatorReport commutator_ideal_checks(int dim, const NumericConfig& cfg);

// ---------------------------------------------------------------------------

/// A linear map X -> X' given by its matrix on the standard bases.
class SymplecticMap {
public:
    static SymplecticMap identity(int dim);
    /// Sends pair k to pair perm[k].
    static SymplecticMap permute_pairs(const std::vector<int>& perm);
    /// p_k -> q_k, q_k -> -p_k on pair k (1-based), identity elsewhere.
    static SymplecticMap rotate_pair(int dim, int k);
    /// Throws std::invalid_argument on dimension mismatch.
    static SymplecticMap between(int dim, int dim2);

    int dim() const { return static_cast<int>(images_.size()); }
    SympVector operator()(const SympVector& f) const;
    bool preserves_form() const;
    Term operator()(const Term& t) const;

private:
    std::vector<SympVector> images_;  // image of each standard basis vector
};

}  // namespace resolvent
