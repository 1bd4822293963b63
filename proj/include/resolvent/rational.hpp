#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace resolvent {

/// Arbitrary-precision exact rational.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/4", "+2". Throws std::invalid_argument on malformed text.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// Gaussian rational re + im*i. All arithmetic is exact.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    ComplexRational(long long re) : re_(re), im_(0) {}

    static ComplexRational i() { return {0, 1}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    ComplexRational conj() const { return {re_, -im_}; }
    /// |z|^2
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    /// Throws std::domain_error on zero.
    ComplexRational inverse() const;

    ComplexRational operator-() const { return {-re_, -im_}; }
    ComplexRational& operator+=(const ComplexRational& o);
    ComplexRational& operator-=(const ComplexRational& o);
    ComplexRational& operator*=(const ComplexRational& o);
    ComplexRational& operator/=(const ComplexRational& o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    std::complex<double> to_complex() const { return {to_double(re_), to_double(im_)}; }

private:
    Rational re_{0};
    Rational im_{0};
};

/// Lexicographic on (re, im); used only for deterministic container ordering.
bool lex_less(const ComplexRational& a, const ComplexRational& b);

/// "3/2", "-1/2*i", "1-2*i" (no surrounding parentheses).
std::string to_string(const ComplexRational& z);

}  // namespace resolvent
