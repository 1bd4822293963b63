// Recursive-descent parser for the resolvent expression language.
//
//   expr    := ['+'|'-'] product (('+'|'-') product)*
//   product := factor ('*' factor)*
//   factor  := rational | 'i' | '-' factor | '(' expr ')'
//            | 'adj' '(' expr ')' | 'R' '(' signed-rational ',' vector ')'
//   vector  := ['+'|'-'] vterm (('+'|'-') vterm)*
//   vterm   := rational ['*'] basis | basis | '0'
//   basis   := ('p'|'q') index

#include <algorithm>
#include <cctype>

#include "resolvent/algebra.hpp"

namespace resolvent {

namespace {

class Parser {
public:
    Parser(std::string_view text, int dim) : s_(text), dim_(dim) {}

    Term parse_all() {
        Term t = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return t;
    }

    SympVector vector_all() {
        SympVector v = vector();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_word(std::string_view w) {
        skip_ws();
        if (s_.substr(pos_, w.size()) != w) return false;
        std::size_t end = pos_ + w.size();
        return end >= s_.size() || !std::isalnum(static_cast<unsigned char>(s_[end]));
    }

    bool at_digit() {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(s_.substr(start, pos_ - start));
    }

    Rational unsigned_rational() {
        std::string num = digits();
        if (peek() == '/') {
            ++pos_;
            std::size_t at = pos_;
            std::string den = digits();
            if (Rational(parse_rational(den)) == 0) {
                pos_ = at;
                fail("zero denominator");
            }
            return parse_rational(num + "/" + den);
        }
        return parse_rational(num);
    }

    Rational signed_rational() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        Rational r = unsigned_rational();
        return neg ? Rational(-r) : r;
    }

    Term expr() {
        Term t;
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        t = product();
        if (neg) t = -t;
        for (;;) {
            if (accept('+'))
                t += product();
            else if (accept('-'))
                t -= product();
            else
                break;
        }
        return t;
    }

    Term product() {
        Term t = factor();
        while (accept('*')) t = t * factor();
        return t;
    }

    Term factor() {
        char c = peek();
        if (c == '\0') fail("unexpected end of input");
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '(') {
            ++pos_;
            Term t = expr();
            expect(')');
            return t;
        }
        if (at_digit()) return Term::scalar(unsigned_rational());
        if (at_word("adj")) {
            pos_ += 3;
            expect('(');
            Term t = expr();
            expect(')');
            return adjoint(t);
        }
        if (at_word("i")) {
            ++pos_;
            return Term::scalar(ComplexRational::i());
        }
        if (at_word("R")) {
            ++pos_;
            expect('(');
            std::size_t at = pos_;
            Rational lambda = signed_rational();
            if (lambda == 0) {
                pos_ = at;
                fail("resolvent parameter must be nonzero");
            }
            expect(',');
            SympVector f = vector();
            expect(')');
            return Term::resolvent(lambda, f);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    SympVector vector() {
        if (dim_ <= 0) fail("vector requires a positive dimension");
        SympVector v = SympVector::zeros(dim_);
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        vterm(v, neg ? Rational(-1) : Rational(1));
        for (;;) {
            if (accept('+'))
                vterm(v, Rational(1));
            else if (accept('-'))
                vterm(v, Rational(-1));
            else
                break;
        }
        return v;
    }

    void vterm(SympVector& v, const Rational& sign) {
        Rational coeff = 1;
        if (at_digit()) {
            coeff = unsigned_rational();
            accept('*');
            char c = peek();
            if (c != 'p' && c != 'q') {
                if (coeff != 0) fail("bare nonzero number in a vector");
                return;
            }
        }
        basis(v, sign * coeff);
    }

    void basis(SympVector& v, const Rational& coeff) {
        char c = peek();
        if (c != 'p' && c != 'q') fail("expected p<k> or q<k>");
        ++pos_;
        std::size_t at = pos_;
        if (!(pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))) fail("expected index after basis symbol");
        int k = std::stoi(digits());
        if (k < 1 || 2 * k > dim_) {
            pos_ = at;
            fail("basis index " + std::to_string(k) + " exceeds dimension " + std::to_string(dim_));
        }
        v[2 * (k - 1) + (c == 'q' ? 1 : 0)] += coeff;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int dim_;
};

}  // namespace

Term parse_term(std::string_view text, int dim) { return Parser(text, dim).parse_all(); }

SympVector parse_vector(std::string_view text, int dim) { return Parser(text, dim).vector_all(); }

ComplexRational parse_scalar(std::string_view text) {
    // Any well-formed scalar expression has no generators, so dimension is irrelevant.
    Term t = Parser(text, 2).parse_all();
    auto s = t.as_scalar();
    if (!s) throw ParseError(0, "expected a scalar expression");
    return *s;
}

int infer_dim(std::string_view text) {
    int max_index = 1;
    for (std::size_t k = 0; k < text.size(); ++k) {
        char c = text[k];
        if (c != 'p' && c != 'q') continue;
        if (k > 0 && std::isalpha(static_cast<unsigned char>(text[k - 1]))) continue;
        std::size_t j = k + 1;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        if (j == k + 1) continue;
        max_index = std::max(max_index, std::stoi(std::string(text.substr(k + 1, j - k - 1))));
    }
    return 2 * max_index;
}

}  // namespace resolvent
