#include "resolvent/symplectic.hpp"

#include <stdexcept>
#include <string>

namespace resolvent {

namespace {

using Row = std::vector<Rational>;

struct Echelon {
    std::vector<Row> rows;
    std::vector<int> pivots;
};

// Reduced row-echelon form over the first `ncols` columns. Extra trailing
// columns (an augmented right-hand side) are carried along but never pivoted.
Echelon rref(std::vector<Row> rows, int ncols) {
    Echelon out;
    int r = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int sel = -1;
        for (int i = r; i < nrows; ++i)
            if (rows[i][c] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = Rational(1) / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational factor = rows[i][c];
            for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] -= factor * rows[r][k];
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

// Row w with w . f = sigma(f, b).
Row sigma_row(const SympVector& b) {
    Row w(b.dim());
    for (int i = 0; i + 1 < b.dim(); i += 2) {
        w[i] = b[i + 1];
        w[i + 1] = -b[i];
    }
    return w;
}

std::vector<SympVector> nullspace(const std::vector<Row>& rows, int ncols) {
    Echelon e = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<SympVector> out;
    for (int free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        SympVector v = SympVector::zeros(ncols);
        v[free] = 1;
        for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

void check_dim(int a, int b) {
    if (a != b)
        throw std::invalid_argument("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

// ---------------------------------------------------------------------------

SympSpace::SympSpace(int dim) : dim_(dim) {
    if (dim <= 0 || dim % 2 != 0)
        throw std::invalid_argument("symplectic dimension must be even and positive, got " + std::to_string(dim));
}

SympVector SympSpace::zero() const { return SympVector::zeros(dim_); }

SympVector SympSpace::p(int i) const {
    if (i < 1 || i > modes()) throw std::invalid_argument("p" + std::to_string(i) + " outside dimension");
    return unit(2 * (i - 1));
}

SympVector SympSpace::q(int i) const {
    if (i < 1 || i > modes()) throw std::invalid_argument("q" + std::to_string(i) + " outside dimension");
    return unit(2 * (i - 1) + 1);
}

SympVector SympSpace::unit(int coord) const {
    SympVector v = zero();
    v[coord] = 1;
    return v;
}

bool SympVector::is_zero() const { return leading_index() < 0; }

int SympVector::leading_index() const {
    for (int i = 0; i < dim(); ++i)
        if (c_[i] != 0) return i;
    return -1;
}

SympVector& SympVector::operator+=(const SympVector& o) {
    check_dim(dim(), o.dim());
    for (int i = 0; i < dim(); ++i) c_[i] += o.c_[i];
    return *this;
}

SympVector& SympVector::operator-=(const SympVector& o) {
    check_dim(dim(), o.dim());
    for (int i = 0; i < dim(); ++i) c_[i] -= o.c_[i];
    return *this;
}

SympVector& SympVector::operator*=(const Rational& s) {
    for (auto& x : c_) x *= s;
    return *this;
}

std::vector<double> SympVector::to_doubles() const {
    std::vector<double> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(to_double(x));
    return out;
}

Rational sigma(const SympVector& f, const SympVector& g) {
    check_dim(f.dim(), g.dim());
    Rational s = 0;
    for (int i = 0; i + 1 < f.dim(); i += 2) s += f[i] * g[i + 1] - f[i + 1] * g[i];
    return s;
}

// ---------------------------------------------------------------------------

Subspace Subspace::zero(int ambient) { return Subspace(ambient, {}, {}); }

Subspace Subspace::whole(int ambient) {
    std::vector<SympVector> basis;
    std::vector<int> pivots;
    for (int i = 0; i < ambient; ++i) {
        SympVector v = SympVector::zeros(ambient);
        v[i] = 1;
        basis.push_back(std::move(v));
        pivots.push_back(i);
    }
    return Subspace(ambient, std::move(basis), std::move(pivots));
}

Subspace Subspace::span(int ambient, std::span<const SympVector> vectors) {
    std::vector<Row> rows;
    for (const auto& v : vectors) {
        check_dim(ambient, v.dim());
        rows.push_back(v.coords());
    }
    Echelon e = rref(std::move(rows), ambient);
    std::vector<SympVector> basis;
    for (auto& r : e.rows) basis.emplace_back(std::move(r));
    return Subspace(ambient, std::move(basis), std::move(e.pivots));
}

std::vector<Rational> Subspace::coordinates(const SympVector& v) const {
    check_dim(ambient_, v.dim());
    std::vector<Rational> coeff;
    coeff.reserve(basis_.size());
    SympVector rest = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        coeff.push_back(v[pivots_[r]]);
        rest -= coeff.back() * basis_[r];
    }
    if (!rest.is_zero()) throw std::invalid_argument("vector outside subspace");
    return coeff;
}

bool Subspace::contains(const SympVector& v) const {
    check_dim(ambient_, v.dim());
    SympVector rest = v;
    for (std::size_t r = 0; r < basis_.size(); ++r) rest -= v[pivots_[r]] * basis_[r];
    return rest.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& b : other.basis())
        if (!contains(b)) return false;
    return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    check_dim(a.ambient(), b.ambient());
    std::vector<SympVector> all = a.basis();
    all.insert(all.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient(), all);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    // sigma is nondegenerate on X, so (S^perp)^perp = S.
    return complement(sum(complement(a), complement(b)));
}

Subspace complement(const Subspace& s) {
    if (s.is_zero()) return Subspace::whole(s.ambient());
    std::vector<Row> rows;
    for (const auto& b : s.basis()) rows.push_back(sigma_row(b));
    auto kernel = nullspace(rows, s.ambient());
    return Subspace::span(s.ambient(), kernel);
}

Subspace radical(const Subspace& s) { return intersection(s, complement(s)); }

bool is_nondegenerate(const Subspace& s) { return radical(s).is_zero(); }

bool is_isotropic(const Subspace& s) {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (sigma(b[i], b[j]) != 0) return false;
    return true;
}

std::vector<SympVector> symplectic_dual_basis(const Subspace& z) {
    if (!is_isotropic(z)) throw std::invalid_argument("symplectic completion needs an isotropic subspace");
    const int d = z.ambient();
    const auto& zb = z.basis();
    std::vector<SympVector> w;
    for (std::size_t j = 0; j < zb.size(); ++j) {
        // Unknown w; sigma(z_i, w) = -sigma(w, z_i) = delta_ij, sigma(w_l, w) = 0.
        std::vector<Row> rows;
        for (std::size_t i = 0; i < zb.size(); ++i) {
            Row r = sigma_row(zb[i]);
            for (auto& x : r) x = -x;
            r.push_back(i == j ? Rational(1) : Rational(0));
            rows.push_back(std::move(r));
        }
        for (const auto& prev : w) {
            Row r = sigma_row(prev);
            for (auto& x : r) x = -x;
            r.push_back(0);
            rows.push_back(std::move(r));
        }
        Echelon e = rref(std::move(rows), d);
        SympVector sol = SympVector::zeros(d);
        for (std::size_t r = 0; r < e.rows.size(); ++r) sol[e.pivots[r]] = e.rows[r][d];
        w.push_back(std::move(sol));
    }
    return w;
}

Subspace symplectic_completion(const Subspace& z) {
    auto w = symplectic_dual_basis(z);
    return Subspace::span(z.ambient(), w);
}

std::vector<std::pair<SympVector, SympVector>> symplectic_basis(const Subspace& s) {
    std::vector<SympVector> rest = s.basis();
    std::vector<std::pair<SympVector, SympVector>> out;
    while (!rest.empty()) {
        SympVector e = rest.front();
        std::size_t partner = 0;
        for (std::size_t k = 1; k < rest.size(); ++k)
            if (sigma(e, rest[k]) != 0) {
                partner = k;
                break;
            }
        if (partner == 0) throw std::invalid_argument("symplectic basis requested for a degenerate subspace");
        SympVector f = (Rational(1) / sigma(e, rest[partner])) * rest[partner];
        std::vector<SympVector> next;
        for (std::size_t k = 1; k < rest.size(); ++k) {
            if (k == partner) continue;
            const SympVector& u = rest[k];
            next.push_back(u - sigma(u, f) * e + sigma(u, e) * f);
        }
        out.emplace_back(std::move(e), std::move(f));
        rest = std::move(next);
    }
    return out;
}

Decomposition decompose(const Subspace& regular) {
    const int d = regular.ambient();
    Subspace trivial = radical(regular);
    auto dual = symplectic_dual_basis(trivial);
    Subspace zt = Subspace::span(d, dual);
    Subspace q = sum(trivial, zt);
    Subspace qperp = complement(q);
    Subspace n = intersection(qperp, regular);
    Subspace sperp = intersection(qperp, complement(regular));

    if (!is_nondegenerate(q) || !is_nondegenerate(n) || q.dim() + n.dim() + sperp.dim() != d ||
        n.dim() != regular.dim() - trivial.dim())
        throw std::logic_error("inconsistent decomposition of regular subspace");

    Decomposition out{regular, trivial, zt, q, n, sperp, trivial.basis(), std::move(dual), {}};
    out.modes = symplectic_basis(n);
    return out;
}

std::pair<SympVector, SympVector> split(const SympVector& f, const Decomposition& d) {
    SympVector ft = SympVector::zeros(f.dim());
    for (std::size_t i = 0; i < d.trivial_basis.size(); ++i) ft += sigma(f, d.dual_basis[i]) * d.trivial_basis[i];
    SympVector fn = f - ft;
    if (!d.N.contains(fn)) throw std::invalid_argument("vector lies outside X_T + N");
    return {std::move(ft), std::move(fn)};
}

std::vector<Subspace> standard_flag(int dim, int k) {
    SympSpace space(dim);
    if (k < 0 || k > space.modes()) throw std::invalid_argument("flag depth out of range");
    std::vector<Subspace> out;
    for (int j = 0; j <= k; ++j) {
        std::vector<SympVector> vs;
        for (int i = 1; i <= space.modes() - j; ++i) {
            vs.push_back(space.p(i));
            vs.push_back(space.q(i));
        }
        out.push_back(Subspace::span(dim, vs));
    }
    return out;
}

// ---------------------------------------------------------------------------

LinearFunctional::LinearFunctional(Subspace domain, std::vector<Rational> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != domain_.dim())
        throw std::invalid_argument("functional needs one value per basis vector of its domain (" +
                                    std::to_string(domain_.dim()) + "), got " + std::to_string(values_.size()));
}

LinearFunctional LinearFunctional::zero(const Subspace& domain) {
    return LinearFunctional(domain, std::vector<Rational>(domain.dim(), Rational(0)));
}

Rational LinearFunctional::operator()(const SympVector& v) const {
    auto c = domain_.coordinates(v);
    Rational s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s += c[i] * values_[i];
    return s;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const SympVector& v) {
    auto j = nlohmann::json::array();
    for (const auto& x : v.coords()) j.push_back(to_string(x));
    return j;
}

nlohmann::json to_json(const Subspace& s) {
    auto j = nlohmann::json::array();
    for (const auto& b : s.basis()) j.push_back(to_json(b));
    return j;
}

nlohmann::json to_json(const SympSpace& s) { return {{"dim", s.dim()}}; }

SympVector vector_from_json(const nlohmann::json& j) {
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(parse_rational(x.get<std::string>()));
    return SympVector(std::move(c));
}

Subspace subspace_from_json(int ambient, const nlohmann::json& j) {
    std::vector<SympVector> vs;
    for (const auto& row : j) vs.push_back(vector_from_json(row));
    return Subspace::span(ambient, vs);
}

}  // namespace resolvent
