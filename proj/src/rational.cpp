#include "resolvent/rational.hpp"

#include <cctype>

namespace resolvent {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    boost::multiprecision::cpp_int n{std::string(num)};
    boost::multiprecision::cpp_int d{std::string(den)};
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) { return r.str(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

ComplexRational ComplexRational::inverse() const {
    Rational n = norm2();
    if (n == 0) throw std::domain_error("inverse of zero complex rational");
    return {re_ / n, -im_ / n};
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) { return *this *= o.inverse(); }

bool lex_less(const ComplexRational& a, const ComplexRational& b) {
    if (a.re() != b.re()) return a.re() < b.re();
    return a.im() < b.im();
}

std::string to_string(const ComplexRational& z) {
    if (z.im() == 0) return to_string(z.re());
    std::string im = to_string(z.im()) + "*i";
    if (z.re() == 0) return im;
    if (z.im() < 0) return to_string(z.re()) + im;
    return to_string(z.re()) + "+" + im;
}

}  // namespace resolvent
