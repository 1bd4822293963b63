#include "resolvent/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace resolvent {

bool generator_less(const Generator& a, const Generator& b) {
    if (a.f != b.f) return a.f < b.f;
    return lex_less(a.lambda, b.lambda);
}

bool operator==(const Generator& a, const Generator& b) { return a.f == b.f && a.lambda == b.lambda; }

bool WordLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (generator_less(a[i], b[i])) return true;
        if (generator_less(b[i], a[i])) return false;
    }
    return false;
}

NormalizedGenerator normalize_generator(const ComplexRational& lambda, const SympVector& f) {
    if (lambda.re() == 0) throw std::invalid_argument("resolvent parameter must have nonzero real part");
    int lead = f.leading_index();
    if (lead < 0) {
        // R(lambda, 0) = -(i / lambda) 1
        return {-(ComplexRational::i() / lambda), std::nullopt};
    }
    // nu R(nu lambda, nu f) = R(lambda, f) with nu = 1 / f_lead.
    Rational nu = Rational(1) / f[lead];
    return {ComplexRational(nu), Generator{lambda * ComplexRational(nu), nu * f}};
}

// ---------------------------------------------------------------------------

Term Term::scalar(const ComplexRational& c) {
    Term t;
    t.add({}, c);
    return t;
}

Term Term::resolvent(const ComplexRational& lambda, const SympVector& f) {
    auto n = normalize_generator(lambda, f);
    Term t;
    if (n.generator)
        t.add({*n.generator}, n.factor);
    else
        t.add({}, n.factor);
    return t;
}

Term Term::monomial(const ComplexRational& c, Word w) {
    Term t;
    t.add(w, c);
    return t;
}

std::size_t Term::degree() const {
    std::size_t d = 0;
    for (const auto& [w, c] : terms_) d = std::max(d, w.size());
    return d;
}

std::optional<ComplexRational> Term::as_scalar() const {
    if (terms_.empty()) return ComplexRational(0);
    if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
    return std::nullopt;
}

void Term::add(const Word& w, const ComplexRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Term& Term::operator+=(const Term& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Term& Term::operator-=(const Term& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

Term& Term::operator*=(const ComplexRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

Term operator*(const Term& a, const Term& b) {
    Term out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

bool operator==(const Term& a, const Term& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (WordLess{}(ia->first, ib->first) || WordLess{}(ib->first, ia->first)) return false;
        if (!(ia->second == ib->second)) return false;
    }
    return true;
}

Term adjoint(const Term& t) {
    Term out;
    for (const auto& [w, c] : t.monomials()) {
        Word r(w.rbegin(), w.rend());
        for (auto& g : r) g.lambda = -g.lambda.conj();
        out.add(r, c.conj());
    }
    return out;
}

Term commutator(const Term& a, const Term& b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

bool spec_contains(const Rational& lambda, const SympVector& f, const ComplexRational& rho) {
    if (lambda == 0) throw std::invalid_argument("lambda must be nonzero");
    if (f.is_zero()) throw std::invalid_argument("spectral circle needs f != 0");
    if (rho.is_zero()) return true;
    // conj(rho) - rho = -2 i Im(rho) must equal 2 i lambda |rho|^2.
    return -rho.im() == lambda * rho.norm2();
}

ComplexRational character_value(const Rational& mu, const Rational& phi_g) {
    return (ComplexRational(-phi_g, mu)).inverse();
}

std::vector<SympVector> singular_probes(const Subspace& regular) {
    const int d = regular.ambient();
    SympSpace space(d);
    std::vector<SympVector> extension;
    Subspace current = regular;
    for (int k = 0; k < d; ++k) {
        SympVector e = space.unit(k);
        if (current.contains(e)) continue;
        extension.push_back(e);
        current = sum(current, Subspace::span(d, {e}));
    }
    std::vector<SympVector> out;
    for (const auto& c : extension) {
        out.push_back(c);
        for (const auto& y : regular.basis()) out.push_back(c + y);
    }
    return out;
}

std::vector<Term> primitive_generators(const Subspace& regular, const LinearFunctional& phi,
                                       const Rational& lambda, const Rational& mu) {
    Subspace rad = radical(regular);
    if (!(phi.domain() == rad)) throw std::invalid_argument("functional must be defined on radical(X_R)");
    std::vector<Term> out;
    for (const auto& s : singular_probes(regular)) out.push_back(Term::resolvent(lambda, s));
    for (std::size_t k = 0; k < rad.basis().size(); ++k) {
        const SympVector& g = rad.basis()[k];
        ComplexRational chi = character_value(mu, phi.values()[k]);
        out.push_back(Term::resolvent(mu, g) - Term::scalar(chi));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const SympVector& v) {
    std::string out;
    for (int k = 0; k < v.dim(); ++k) {
        const Rational& c = v[k];
        if (c == 0) continue;
        std::string name = std::string(k % 2 == 0 ? "p" : "q") + std::to_string(k / 2 + 1);
        Rational mag = c < 0 ? Rational(-c) : c;
        if (!out.empty())
            out += c < 0 ? "-" : "+";
        else if (c < 0)
            out += "-";
        if (mag != 1) out += to_string(mag) + "*";
        out += name;
    }
    return out.empty() ? "0" : out;
}

namespace {

std::string coeff_string(const ComplexRational& c) {
    if (c.im() == 0) return "(" + to_string(c.re()) + ")";
    if (c.re() == 0) return "(" + to_string(c.im()) + ")*i";
    return "(" + to_string(c) + ")";
}

std::string lambda_string(const ComplexRational& l) {
    if (l.is_real()) return to_string(l.re());
    return "(" + to_string(l) + ")";
}

}  // namespace

std::string to_dsl(const Term& t) {
    if (t.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : t.monomials()) {
        if (!out.empty()) out += " + ";
        out += coeff_string(c) + "*";
        if (w.empty()) {
            out += "1";
            continue;
        }
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (k) out += "*";
            out += "R(" + lambda_string(w[k].lambda) + "," + to_string(w[k].f) + ")";
        }
    }
    return out;
}

nlohmann::json to_json(const Term& t) {
    auto arr = nlohmann::json::array();
    for (const auto& [w, c] : t.monomials()) {
        auto word = nlohmann::json::array();
        for (const auto& g : w) {
            auto gen = nlohmann::json::array({to_string(g.lambda.re()), to_string(g.lambda.im())});
            for (const auto& x : g.f.coords()) gen.push_back(to_string(x));
            word.push_back(std::move(gen));
        }
        arr.push_back({{"word", std::move(word)}, {"coeff", {to_string(c.re()), to_string(c.im())}}});
    }
    return arr;
}

Term term_from_json(const nlohmann::json& j) {
    Term out;
    for (const auto& m : j) {
        const auto& cj = m.at("coeff");
        Term mono = Term::scalar(
            ComplexRational(parse_rational(cj.at(0).get<std::string>()), parse_rational(cj.at(1).get<std::string>())));
        for (const auto& g : m.at("word")) {
            ComplexRational lambda(parse_rational(g.at(0).get<std::string>()), parse_rational(g.at(1).get<std::string>()));
            std::vector<Rational> coords;
            for (std::size_t k = 2; k < g.size(); ++k) coords.push_back(parse_rational(g.at(k).get<std::string>()));
            mono = mono * Term::resolvent(lambda, SympVector(std::move(coords)));
        }
        out += mono;
    }
    return out;
}

}  // namespace resolvent
