#pragma once

// Concrete representations of the resolvent algebra.
//
// Regular and labeled representations act on a truncated Fock space of
// `levels` states per oscillator mode; characters (and sharp-value states,
// realized as characters) are one-dimensional and evaluate exactly.
//
// In a mode with Darboux pair (e, f) the field is realized as
//     Phi(a e + b f) = a Q + b P,   [Q, P] = i,
// so that [Phi(u), Phi(v)] = i sigma(u, v) on untruncated states.

#include <complex>
#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "resolvent/algebra.hpp"
#include "resolvent/symplectic.hpp"

namespace resolvent {

using Matrix = Eigen::MatrixXcd;
using cplx = std::complex<double>;

/// Truncation schedule and tolerances shared by every numerical check.
struct NumericConfig {
    std::vector<int> schedule{16, 32, 64};
    int K0 = 8;
    double tol_in = 1e-8;
    double tol_out = 0.1;
    /// Residuals below this are rounding noise; decay checks ignore changes under it.
    double noise_floor = 1e-12;

    static NumericConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// True when r is non-increasing up to the noise floor.
bool non_increasing(const std::vector<double>& r, double noise_floor);

struct OscillatorMatrices {
    std::vector<Matrix> Q;  // (a + a^dag)/sqrt 2 on mode i, identity elsewhere
    std::vector<Matrix> P;  // i (a^dag - a)/sqrt 2
};

/// Mode 0 is the most significant tensor factor. Throws if levels < 2.
OscillatorMatrices oscillator_matrices(int modes, int levels);

/// (Y, phi): regular subspace and a functional on radical(Y).
struct IrrepLabel {
    Subspace Y;
    LinearFunctional phi;

    /// Validates that phi lives exactly on radical(Y).
    IrrepLabel(Subspace y, LinearFunctional f);
    /// phi given by its values on the canonical basis of radical(Y).
    static IrrepLabel from_values(Subspace y, std::vector<Rational> values);
    static IrrepLabel regular(int dim);

    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

nlohmann::json to_json(const IrrepLabel& l);

/// One resolvent factor with an arbitrary (unnormalized) argument.
struct Factor {
    ComplexRational lambda;
    SympVector f;
};

struct RawMonomial {
    ComplexRational coeff;
    std::vector<Factor> word;
};

/// A linear combination of products of resolvents evaluated literally,
/// without normalization; used to test the relations themselves.
using RawTerm = std::vector<RawMonomial>;

RawTerm to_raw(const Term& t);

class SingularVector : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class RepKind { Regular, Labeled, Character, SharpValue };

class Representation {
public:
    static Representation regular(int dim, int levels);
    static Representation labeled(IrrepLabel label, int levels);
    /// Z must be isotropic.
    static Representation character(Subspace z, LinearFunctional phi);
    /// The state with R(lambda, f) sharp at rho, realized as the character on
    /// span{f} with phi(f) = r where rho = (i lambda - r)^{-1}; rho = 0 gives Z = {0}.
    static Representation sharp_value(const Rational& lambda, const SympVector& f, const ComplexRational& rho);

    RepKind kind() const { return kind_; }
    std::string describe() const;
    int ambient() const { return ambient_; }
    int levels() const { return levels_; }
    int modes() const;
    /// Hilbert-space dimension levels^modes (1 for scalar kinds).
    std::size_t dimension() const;
    bool is_scalar() const { return kind_ == RepKind::Character || kind_ == RepKind::SharpValue; }
    /// Same representation at a different truncation; scalar kinds are returned unchanged.
    Representation with_levels(int levels) const;

    /// Regular/Labeled only.
    const IrrepLabel& label() const;
    const Decomposition& decomposition() const;
    /// Character/SharpValue only.
    const Subspace& support() const { return z_; }
    const LinearFunctional& character_phi() const { return zphi_; }

    /// Phi(f) = sum a_i Q_i + b_i P_i + phi(f_T) 1. Throws SingularVector if
    /// no generator exists for f.
    Matrix generator_matrix(const SympVector& f) const;
    /// (i lambda - Phi(f))^{-1}; zero when f is singular for this representation.
    Matrix resolvent_matrix(const ComplexRational& lambda, const SympVector& f) const;
    /// Scalar kinds only.
    ComplexRational resolvent_exact(const ComplexRational& lambda, const SympVector& f) const;

    Matrix eval(const Term& t) const;
    Matrix eval(const RawTerm& t) const;
    /// Block <e_j|t|e_k> over the K0 lowest-excitation basis states.
    Matrix eval_compressed(const RawTerm& t, int K0) const;
    Matrix eval_compressed(const Term& t, int K0) const { return eval_compressed(to_raw(t), K0); }
    /// Scalar kinds only; exact.
    ComplexRational eval_exact(const Term& t) const;

    /// Indices of the K0 basis states with lowest total excitation (ties by index).
    std::vector<std::size_t> low_states(int K0) const;

private:
    Representation() = default;
    Matrix apply(const Factor& factor, const Matrix& block) const;
    Matrix apply(const std::vector<Factor>& word, Matrix block) const;

    RepKind kind_ = RepKind::Regular;
    int ambient_ = 0;
    int levels_ = 0;
    std::vector<IrrepLabel> label_;    // 0 or 1 entries
    std::vector<Decomposition> dec_;   // 0 or 1 entries
    Matrix q1_, p1_;                   // single-mode operators at this truncation
    Subspace z_ = Subspace::zero(0);
    LinearFunctional zphi_;
    // SharpValue provenance
    ComplexRational sharp_rho_;
    Rational sharp_lambda_;
    SympVector sharp_f_;
};

/// Largest |entry|.
double max_abs(const Matrix& m);

/// Row-major rows of [re, im] pairs.
nlohmann::json matrix_to_json(const Matrix& m);

// ---------------------------------------------------------------------------

enum class VectorClassTag { Regular, Trivial, Singular, Inconclusive };

struct VectorClass {
    VectorClassTag tag = VectorClassTag::Inconclusive;
    cplx scalar{0, 0};                   // for Trivial
    std::vector<double> norms;           // compressed max-norm of R per truncation
    std::vector<double> scalar_residuals;  // ||R - c 1|| per truncation
};

std::string to_string(VectorClassTag t);

/// Classifies f by the compressed image of R(lambda, f) across the schedule.
VectorClass classify_vector(const Representation& rep, const SympVector& f, const NumericConfig& cfg,
                            const Rational& lambda = 1);

struct ExtractedLabel {
    Subspace Y = Subspace::zero(0);
    /// phi on the canonical basis of radical(Y), read from trivial scalars.
    std::vector<double> phi;
    std::vector<SympVector> inconclusive;
};

/// Recovers (Y, phi) from a representation using probe vectors that span X.
ExtractedLabel extract_label(const Representation& rep, const std::vector<SympVector>& probes,
                             const NumericConfig& cfg, const Rational& lambda = 1);

// ---------------------------------------------------------------------------
// Defining relations as numerical residual checks.

enum class Relation { Resolvent, Involution, CCR, Homogeneity, Sum, Identity };

const std::vector<Relation>& all_relations();
std::string relation_name(Relation r);

struct RelationInstance {
    Relation relation;
    Rational lambda, mu, nu;
    SympVector f, g;
};

nlohmann::json to_json(const RelationInstance& inst);

/// Seeded instances: lambda, mu in {+-1, +-2, +-3} (lambda + mu != 0 for the sum
/// rule), nu in {+-1/2, +-2, 3}, coordinates of f, g in {0, +-1/4, +-1/3, +-1/2}.
std::vector<RelationInstance> sample_relation_instances(Relation r, int dim, int count, std::uint64_t seed);

/// Max |entry| of the compressed defect LHS - RHS in `rep`.
double relation_residual(const RelationInstance& inst, const Representation& rep, int K0);

}  // namespace resolvent
