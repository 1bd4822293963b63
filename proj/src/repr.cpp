#include "resolvent/repr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace resolvent {

using nlohmann::json;

NumericConfig NumericConfig::from_json(const json& j) {
    NumericConfig c;
    if (j.contains("schedule")) c.schedule = j.at("schedule").get<std::vector<int>>();
    if (j.contains("K0")) c.K0 = j.at("K0").get<int>();
    if (j.contains("tol_in")) c.tol_in = j.at("tol_in").get<double>();
    if (j.contains("tol_out")) c.tol_out = j.at("tol_out").get<double>();
    if (j.contains("noise_floor")) c.noise_floor = j.at("noise_floor").get<double>();
    if (c.schedule.empty()) throw std::invalid_argument("truncation schedule must not be empty");
    for (int n : c.schedule)
        if (n < 2) throw std::invalid_argument("truncation levels must be at least 2");
    if (c.K0 < 1) throw std::invalid_argument("K0 must be positive");
    return c;
}

json NumericConfig::to_json() const {
    return {{"schedule", schedule}, {"K0", K0}, {"tol_in", tol_in}, {"tol_out", tol_out}, {"noise_floor", noise_floor}};
}

bool non_increasing(const std::vector<double>& r, double noise_floor) {
    for (std::size_t k = 1; k < r.size(); ++k)
        if (r[k] > r[k - 1] && r[k] > noise_floor) return false;
    return true;
}

namespace {

const cplx I{0.0, 1.0};

void single_mode(int N, Matrix& q, Matrix& p) {
    Matrix a = Matrix::Zero(N, N);
    for (int k = 1; k < N; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
    Matrix ad = a.adjoint();
    q = (a + ad) / std::sqrt(2.0);
    p = I * (ad - a) / std::sqrt(2.0);
}

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int k = 0; k < e; ++k) r *= b;
    return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix embed(const Matrix& op, int mode, int modes, int N) {
    Matrix out = Matrix::Identity(1, 1);
    for (int k = 0; k < modes; ++k) out = kron(out, k == mode ? op : Matrix::Identity(N, N));
    return out;
}

// Applies U to tensor factor `mode` of every column of X (mode 0 most significant).
void apply_mode(Matrix& X, const Matrix& U, int mode, int modes, int N) {
    const Eigen::Index inner = static_cast<Eigen::Index>(ipow(N, modes - 1 - mode));
    const Eigen::Index outer = static_cast<Eigen::Index>(ipow(N, mode));
    const Matrix Ut = U.transpose();
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
        cplx* col = X.col(c).data();
        for (Eigen::Index o = 0; o < outer; ++o) {
            Eigen::Map<Matrix> slice(col + o * N * inner, inner, N);
            slice = (slice * Ut).eval();
        }
    }
}

ComplexRational i_times(const ComplexRational& z) { return {-z.im(), z.re()}; }

}  // namespace

OscillatorMatrices oscillator_matrices(int modes, int levels) {
    if (levels < 2) throw std::invalid_argument("need at least 2 levels per mode");
    if (modes < 0) throw std::invalid_argument("negative mode count");
    Matrix q, p;
    single_mode(levels, q, p);
    OscillatorMatrices out;
    for (int k = 0; k < modes; ++k) {
        out.Q.push_back(embed(q, k, modes, levels));
        out.P.push_back(embed(p, k, modes, levels));
    }
    return out;
}

// ---------------------------------------------------------------------------

IrrepLabel::IrrepLabel(Subspace y, LinearFunctional f) : Y(std::move(y)), phi(std::move(f)) {
    if (!(phi.domain() == radical(Y))) throw std::invalid_argument("label functional must live on radical(Y)");
}

IrrepLabel IrrepLabel::from_values(Subspace y, std::vector<Rational> values) {
    Subspace rad = radical(y);
    return IrrepLabel(std::move(y), LinearFunctional(rad, std::move(values)));
}

IrrepLabel IrrepLabel::regular(int dim) { return from_values(Subspace::whole(dim), {}); }

json to_json(const IrrepLabel& l) {
    json phi = json::array();
    for (const auto& v : l.phi.values()) phi.push_back(to_string(v));
    return {{"Y", to_json(l.Y)}, {"radical", to_json(l.phi.domain())}, {"phi", phi}};
}

RawTerm to_raw(const Term& t) {
    RawTerm out;
    for (const auto& [w, c] : t.monomials()) {
        RawMonomial m{c, {}};
        for (const auto& g : w) m.word.push_back({g.lambda, g.f});
        out.push_back(std::move(m));
    }
    return out;
}

// ---------------------------------------------------------------------------

Representation Representation::labeled(IrrepLabel label, int levels) {
    Representation r;
    r.kind_ = RepKind::Labeled;
    r.ambient_ = label.Y.ambient();
    r.dec_.push_back(decompose(label.Y));
    r.label_.push_back(std::move(label));
    r.levels_ = levels;
    if (levels < 2) throw std::invalid_argument("need at least 2 levels per mode");
    single_mode(levels, r.q1_, r.p1_);
    return r;
}

Representation Representation::regular(int dim, int levels) {
    Representation r = labeled(IrrepLabel::regular(dim), levels);
    r.kind_ = RepKind::Regular;
    return r;
}

Representation Representation::character(Subspace z, LinearFunctional phi) {
    if (!is_isotropic(z)) throw std::invalid_argument("character support must be isotropic");
    if (!(phi.domain() == z)) throw std::invalid_argument("character functional must live on its support");
    Representation r;
    r.kind_ = RepKind::Character;
    r.ambient_ = z.ambient();
    r.levels_ = 1;
    r.z_ = std::move(z);
    r.zphi_ = std::move(phi);
    return r;
}

Representation Representation::sharp_value(const Rational& lambda, const SympVector& f, const ComplexRational& rho) {
    if (!spec_contains(lambda, f, rho)) throw std::invalid_argument("rho is not in the spectrum of R(lambda, f)");
    const int d = f.dim();
    Representation r;
    if (rho.is_zero()) {
        Subspace z = Subspace::zero(d);
        r = character(z, LinearFunctional::zero(z));
    } else {
        // rho = (i lambda - phi(f))^{-1}
        ComplexRational phi_f = ComplexRational(0, lambda) - rho.inverse();
        if (!phi_f.is_real()) throw std::logic_error("spectral value off the circle");
        Subspace z = Subspace::span(d, {f});
        Rational lead = f[f.leading_index()];
        r = character(z, LinearFunctional(z, {phi_f.re() / lead}));
    }
    r.kind_ = RepKind::SharpValue;
    r.sharp_lambda_ = lambda;
    r.sharp_f_ = f;
    r.sharp_rho_ = rho;
    return r;
}

std::string Representation::describe() const {
    switch (kind_) {
        case RepKind::Regular:
            return "regular(dim=" + std::to_string(ambient_) + ", N=" + std::to_string(levels_) + ")";
        case RepKind::Labeled:
            return "labeled(Y=" + to_json(label().Y).dump() + ", phi=" + to_json(label()).at("phi").dump() +
                   ", N=" + std::to_string(levels_) + ")";
        case RepKind::Character:
            return "character(Z=" + to_json(z_).dump() + ")";
        case RepKind::SharpValue:
            return "sharp(R(" + to_string(sharp_lambda_) + "," + to_string(sharp_f_) + ")=" + to_string(sharp_rho_) + ")";
    }
    return "?";
}

int Representation::modes() const { return is_scalar() ? 0 : static_cast<int>(dec_.front().modes.size()); }

std::size_t Representation::dimension() const { return is_scalar() ? 1 : ipow(levels_, modes()); }

Representation Representation::with_levels(int levels) const {
    if (is_scalar() || levels == levels_) return *this;
    if (levels < 2) throw std::invalid_argument("need at least 2 levels per mode");
    Representation r = *this;
    r.levels_ = levels;
    single_mode(levels, r.q1_, r.p1_);
    return r;
}

const IrrepLabel& Representation::label() const {
    if (label_.empty()) throw std::logic_error("scalar representation has no irrep label");
    return label_.front();
}

const Decomposition& Representation::decomposition() const {
    if (dec_.empty()) throw std::logic_error("scalar representation has no decomposition");
    return dec_.front();
}

Matrix Representation::generator_matrix(const SympVector& f) const {
    if (is_scalar()) {
        if (!z_.contains(f)) throw SingularVector("no generator: f outside the character support");
        return Matrix::Constant(1, 1, cplx(to_double(zphi_(f)), 0));
    }
    const auto& lab = label();
    if (!lab.Y.contains(f)) throw SingularVector("no generator: f outside Y");
    const auto& dec = decomposition();
    auto [fT, fN] = split(f, dec);
    const int m = modes();
    const auto n = static_cast<Eigen::Index>(dimension());
    Matrix out = to_double(lab.phi(fT)) * Matrix::Identity(n, n);
    for (int k = 0; k < m; ++k) {
        double a = to_double(sigma(fN, dec.modes[k].second));
        double b = -to_double(sigma(fN, dec.modes[k].first));
        if (a == 0 && b == 0) continue;
        out += embed(a * q1_ + b * p1_, k, m, levels_);
    }
    return out;
}

Matrix Representation::apply(const Factor& fac, const Matrix& X) const {
    if (is_scalar()) return resolvent_exact(fac.lambda, fac.f).to_complex() * X;
    const auto& lab = label();
    if (!lab.Y.contains(fac.f)) return Matrix::Zero(X.rows(), X.cols());
    const auto& dec = decomposition();
    auto [fT, fN] = split(fac.f, dec);
    const double shift = to_double(lab.phi(fT));
    const cplx il = I * fac.lambda.to_complex();
    const int m = modes();
    const int N = levels_;

    std::vector<Eigen::VectorXd> evals(m);
    std::vector<Matrix> evecs(m);
    std::vector<bool> active(m, false);
    for (int k = 0; k < m; ++k) {
        double a = to_double(sigma(fN, dec.modes[k].second));
        double b = -to_double(sigma(fN, dec.modes[k].first));
        if (a == 0 && b == 0) continue;
        Eigen::SelfAdjointEigenSolver<Matrix> es(a * q1_ + b * p1_);
        if (es.info() != Eigen::Success) throw std::runtime_error("eigensolver failed");
        evals[k] = es.eigenvalues();
        evecs[k] = es.eigenvectors();
        active[k] = true;
    }

    const std::size_t n = dimension();
    Eigen::VectorXcd diag(static_cast<Eigen::Index>(n));
    double lo = INFINITY, hi = 0;
    std::vector<int> digit(m, 0);
    for (std::size_t idx = 0; idx < n; ++idx) {
        double e = 0;
        for (int k = 0; k < m; ++k)
            if (active[k]) e += evals[k][digit[k]];
        cplx den = il - shift - e;
        lo = std::min(lo, std::abs(den));
        hi = std::max(hi, std::abs(den));
        diag[static_cast<Eigen::Index>(idx)] = 1.0 / den;
        for (int k = m - 1; k >= 0; --k) {
            if (++digit[k] < N) break;
            digit[k] = 0;
        }
    }
    if (hi / lo > 1e12) throw std::runtime_error("resolvent is ill-conditioned at this truncation");

    Matrix Y = X;
    for (int k = 0; k < m; ++k)
        if (active[k]) apply_mode(Y, evecs[k].adjoint(), k, m, N);
    Y = diag.asDiagonal() * Y;
    for (int k = 0; k < m; ++k)
        if (active[k]) apply_mode(Y, evecs[k], k, m, N);
    return Y;
}

Matrix Representation::apply(const std::vector<Factor>& word, Matrix block) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) block = apply(*it, block);
    return block;
}

Matrix Representation::resolvent_matrix(const ComplexRational& lambda, const SympVector& f) const {
    const auto n = static_cast<Eigen::Index>(dimension());
    return apply(Factor{lambda, f}, Matrix::Identity(n, n));
}

ComplexRational Representation::resolvent_exact(const ComplexRational& lambda, const SympVector& f) const {
    if (!is_scalar()) throw std::logic_error("exact evaluation needs a one-dimensional representation");
    if (!z_.contains(f)) return 0;
    ComplexRational den = i_times(lambda) - ComplexRational(zphi_(f));
    return den.inverse();
}

Matrix Representation::eval(const RawTerm& t) const {
    const auto n = static_cast<Eigen::Index>(dimension());
    Matrix out = Matrix::Zero(n, n);
    for (const auto& m : t) out += m.coeff.to_complex() * apply(m.word, Matrix::Identity(n, n));
    return out;
}

Matrix Representation::eval(const Term& t) const { return eval(to_raw(t)); }

std::vector<std::size_t> Representation::low_states(int K0) const {
    const std::size_t n = dimension();
    const int m = modes();
    std::vector<std::pair<int, std::size_t>> keyed(n);
    for (std::size_t idx = 0; idx < n; ++idx) {
        int exc = 0;
        std::size_t rest = idx;
        for (int k = 0; k < m; ++k) {
            exc += static_cast<int>(rest % levels_);
            rest /= levels_;
        }
        keyed[idx] = {exc, idx};
    }
    std::size_t take = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(K0, 1)));
    std::partial_sort(keyed.begin(), keyed.begin() + static_cast<std::ptrdiff_t>(take), keyed.end());
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < take; ++k) out.push_back(keyed[k].second);
    return out;
}

Matrix Representation::eval_compressed(const RawTerm& t, int K0) const {
    auto idx = low_states(K0);
    const auto n = static_cast<Eigen::Index>(dimension());
    const auto K = static_cast<Eigen::Index>(idx.size());
    Matrix E = Matrix::Zero(n, K);
    for (Eigen::Index j = 0; j < K; ++j) E(static_cast<Eigen::Index>(idx[j]), j) = 1;
    Matrix out = Matrix::Zero(K, K);
    for (const auto& m : t) {
        Matrix Y = apply(m.word, E);
        const cplx c = m.coeff.to_complex();
        for (Eigen::Index r = 0; r < K; ++r) out.row(r) += c * Y.row(static_cast<Eigen::Index>(idx[r]));
    }
    return out;
}

ComplexRational Representation::eval_exact(const Term& t) const {
    ComplexRational out;
    for (const auto& [w, c] : t.monomials()) {
        ComplexRational v = c;
        for (const auto& g : w) {
            v *= resolvent_exact(g.lambda, g.f);
            if (v.is_zero()) break;
        }
        out += v;
    }
    return out;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---------------------------------------------------------------------------

std::string to_string(VectorClassTag t) {
    switch (t) {
        case VectorClassTag::Regular: return "regular";
        case VectorClassTag::Trivial: return "trivial";
        case VectorClassTag::Singular: return "singular";
        case VectorClassTag::Inconclusive: return "inconclusive";
    }
    return "?";
}

VectorClass classify_vector(const Representation& rep, const SympVector& f, const NumericConfig& cfg,
                            const Rational& lambda) {
    VectorClass out;
    if (rep.is_scalar()) {
        ComplexRational v = rep.resolvent_exact(lambda, f);
        out.norms.push_back(std::abs(v.to_complex()));
        out.scalar_residuals.push_back(0.0);
        if (v.is_zero()) {
            out.tag = VectorClassTag::Singular;
        } else {
            out.tag = VectorClassTag::Trivial;
            out.scalar = v.to_complex();
        }
        return out;
    }
    RawTerm t{{ComplexRational(1), {{ComplexRational(lambda), f}}}};
    for (int N : cfg.schedule) {
        Matrix B = rep.with_levels(N).eval_compressed(t, cfg.K0);
        cplx c = B.diagonal().mean();
        out.norms.push_back(max_abs(B));
        out.scalar_residuals.push_back(max_abs(B - c * Matrix::Identity(B.rows(), B.cols())));
        out.scalar = c;
    }
    auto below = [&](const std::vector<double>& r) { return non_increasing(r, cfg.noise_floor) && r.back() < cfg.tol_in; };
    auto above = [&](const std::vector<double>& r) {
        return std::all_of(r.begin(), r.end(), [&](double x) { return x > cfg.tol_out; });
    };
    if (below(out.norms))
        out.tag = VectorClassTag::Singular;
    else if (below(out.scalar_residuals))
        out.tag = VectorClassTag::Trivial;
    else if (above(out.scalar_residuals))
        out.tag = VectorClassTag::Regular;
    else
        out.tag = VectorClassTag::Inconclusive;
    if (out.tag != VectorClassTag::Trivial) out.scalar = 0;
    return out;
}

ExtractedLabel extract_label(const Representation& rep, const std::vector<SympVector>& probes,
                             const NumericConfig& cfg, const Rational& lambda) {
    if (probes.empty()) throw std::invalid_argument("no probe vectors");
    const int d = probes.front().dim();
    std::vector<SympVector> inside;
    std::vector<std::pair<SympVector, double>> trivial;
    ExtractedLabel out;
    const cplx il{0.0, to_double(lambda)};
    for (const auto& f : probes) {
        VectorClass c = classify_vector(rep, f, cfg, lambda);
        switch (c.tag) {
            case VectorClassTag::Singular: break;
            case VectorClassTag::Inconclusive: out.inconclusive.push_back(f); break;
            case VectorClassTag::Regular: inside.push_back(f); break;
            case VectorClassTag::Trivial:
                inside.push_back(f);
                // c = (i lambda - phi(f))^{-1}
                trivial.emplace_back(f, (il - 1.0 / c.scalar).real());
                break;
        }
    }
    out.Y = Subspace::span(d, inside);
    Subspace rad = radical(out.Y);
    out.phi.assign(rad.dim(), 0.0);
    if (rad.dim() == 0) return out;
    std::vector<std::pair<std::vector<Rational>, double>> rows;
    for (const auto& [f, v] : trivial)
        if (rad.contains(f)) rows.emplace_back(rad.coordinates(f), v);
    if (rows.empty()) return out;
    Eigen::MatrixXd A(static_cast<Eigen::Index>(rows.size()), rad.dim());
    Eigen::VectorXd b(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (int k = 0; k < rad.dim(); ++k) A(static_cast<Eigen::Index>(r), k) = to_double(rows[r].first[k]);
        b[static_cast<Eigen::Index>(r)] = rows[r].second;
    }
    Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
    for (int k = 0; k < rad.dim(); ++k) out.phi[k] = x[k];
    return out;
}

}  // namespace resolvent
