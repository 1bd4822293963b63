#include <random>

#include <doctest.h>

#include "resolvent/algebra.hpp"

using namespace resolvent;

namespace {

const ComplexRational I = ComplexRational::i();

Term R(const ComplexRational& l, const SympVector& f) { return Term::resolvent(l, f); }

}  // namespace

TEST_CASE("complex rationals") {
    ComplexRational a(1, 2), b(Rational(1, 2), -3);
    CHECK(a * a.inverse() == ComplexRational(1));
    CHECK((a + b) - b == a);
    CHECK(a.conj() == ComplexRational(1, -2));
    CHECK(a.norm2() == 5);
    CHECK_THROWS_AS(ComplexRational(0).inverse(), std::domain_error);
    CHECK(to_string(ComplexRational(1, -2)) == "1-2*i");
    CHECK(to_string(ComplexRational(0, Rational(-1, 2))) == "-1/2*i");
    CHECK(to_string(ComplexRational(3)) == "3");
    CHECK(parse_rational("-3/4") == Rational(-3, 4));
    CHECK_THROWS(parse_rational("3/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("normalize_generator") {
    SympSpace x(2);
    // nu R(nu l, nu f) = R(l, f) with nu = 1/2 gives R(1, 2 p1) = (1/2) R(1/2, p1).
    auto n = normalize_generator(1, 2 * x.p(1));
    CHECK(n.factor == ComplexRational(Rational(1, 2)));
    REQUIRE(n.generator);
    CHECK(n.generator->lambda == ComplexRational(Rational(1, 2)));
    CHECK(n.generator->f == x.p(1));

    auto id = normalize_generator(1, x.p(1));
    CHECK(id.factor == ComplexRational(1));
    CHECK(id.generator->f == x.p(1));
    CHECK(id.generator->lambda == ComplexRational(1));

    auto zero = normalize_generator(3, x.zero());
    CHECK_FALSE(zero.generator);
    CHECK(zero.factor == ComplexRational(0, Rational(-1, 3)));

    // negative leading coordinate flips the sign of lambda
    auto neg = normalize_generator(2, -x.p(1) + x.q(1));
    CHECK(neg.factor == ComplexRational(-1));
    CHECK(neg.generator->lambda == ComplexRational(-2));
    CHECK(neg.generator->f == x.p(1) - x.q(1));

    // idempotent
    auto again = normalize_generator(neg.generator->lambda, neg.generator->f);
    CHECK(again.factor == ComplexRational(1));
    CHECK(*again.generator == *neg.generator);

    CHECK_THROWS(normalize_generator(ComplexRational(0, 1), x.p(1)));
}

TEST_CASE("parser") {
    SympSpace x(2);
    CHECK(parse_term("R(1,p1)", 2) == R(1, x.p(1)));
    CHECK(parse_term("R(2,0)", 2) == Term::scalar(ComplexRational(0, Rational(-1, 2))));
    Term c = parse_term("R(1,p1)*R(-1,p1) - R(-1,p1)*R(1,p1)", 2);
    CHECK(c == commutator(R(1, x.p(1)), R(-1, x.p(1))));
    CHECK(c.size() == 2);
    CHECK(parse_term("R(1, 2p1 - 1/2*q1)", 2) == R(1, 2 * x.p(1) - Rational(1, 2) * x.q(1)));
    CHECK(parse_term("3 - 2*i", 2) == Term::scalar(ComplexRational(3, -2)));
    CHECK(parse_term("adj(i*R(1,q1))", 2) == Term::scalar(-I) * R(-1, x.q(1)));
    CHECK(parse_term("-(R(1,p1) + 1)", 2) == -(R(1, x.p(1)) + Term::identity()));
    CHECK(parse_term("R(1,0*p1 + q1)", 2) == R(1, x.q(1)));
    CHECK(parse_vector("p1 - q1", 2) == x.p(1) - x.q(1));
    CHECK(parse_vector("0", 2) == x.zero());
    CHECK(parse_scalar("1/2+3*i") == ComplexRational(Rational(1, 2), 3));
    CHECK(infer_dim("R(1,p1+q3)") == 6);
    CHECK(infer_dim("1") == 2);
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(parse_term("R(0,p1)", 2), ParseError);
    CHECK_THROWS_AS(parse_term("R(1,p2)", 2), ParseError);
    CHECK_THROWS_AS(parse_term("R(1,p1", 2), ParseError);
    CHECK_THROWS_AS(parse_term("R(1,3)", 2), ParseError);
    CHECK_THROWS_AS(parse_term("R(1,p1) +", 2), ParseError);
    CHECK_THROWS_AS(parse_term("R(1/0,p1)", 2), ParseError);
    CHECK_THROWS_AS(parse_term("Q(1,p1)", 2), ParseError);
    try {
        parse_term("R(1,p1) $", 2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 8);
    }
}

TEST_CASE("term algebra") {
    SympSpace x(2);
    Term a = R(1, x.p(1)), b = R(2, x.q(1));
    CHECK((a - a).is_zero());
    CHECK(commutator(a, a).is_zero());
    CHECK(commutator(Term::identity(), a).is_zero());
    CHECK_FALSE(commutator(a, b).is_zero());
    CHECK((a * b).degree() == 2);
    CHECK((Term::identity() * a) == a);
    CHECK(Term::identity().as_scalar() == ComplexRational(1));
    CHECK_FALSE(a.as_scalar());
    CHECK(Term().as_scalar() == ComplexRational(0));
}

TEST_CASE("adjoint is an antilinear involutive antihomomorphism") {
    SympSpace x(2);
    CHECK(adjoint(R(1, x.p(1))) == R(-1, x.p(1)));
    CHECK(adjoint(Term::scalar(I)) == Term::scalar(-I));
    std::vector<Term> samples{R(1, x.p(1)), R(-2, x.q(1)), Term::scalar(ComplexRational(1, 2)) * R(3, x.p(1) + x.q(1)),
                              parse_term("R(1,p1)*R(2,q1) - i*R(1,q1)", 2)};
    for (const auto& s : samples) {
        CHECK(adjoint(adjoint(s)) == s);
        for (const auto& t : samples) {
            CHECK(adjoint(s * t) == adjoint(t) * adjoint(s));
            CHECK(adjoint(s + t) == adjoint(s) + adjoint(t));
        }
        CHECK(adjoint(Term::scalar(I) * s) == Term::scalar(-I) * adjoint(s));
    }
    // complex lambda: R(l, f)^* = R(-conj(l), f)
    CHECK(adjoint(R(ComplexRational(1, 2), x.p(1))) == R(ComplexRational(-1, 2), x.p(1)));
}

TEST_CASE("spectral circle predicate") {
    SympSpace x(2);
    CHECK(spec_contains(1, x.p(1), ComplexRational(0, -1)));
    CHECK(spec_contains(1, x.p(1), 0));
    CHECK_FALSE(spec_contains(1, x.p(1), 1));
    CHECK_THROWS(spec_contains(0, x.p(1), 0));
    CHECK_THROWS(spec_contains(1, x.zero(), 0));
    // consistent with the involution: (l, rho) and (-l, conj rho)
    std::mt19937 rng(2);
    for (int k = 0; k < 100; ++k) {
        Rational l = static_cast<int>(rng() % 5) - 2;
        if (l == 0) continue;
        ComplexRational rho(Rational(static_cast<int>(rng() % 9) - 4, 1 + rng() % 4),
                            Rational(static_cast<int>(rng() % 9) - 4, 1 + rng() % 4));
        CHECK(spec_contains(l, x.p(1), rho) == spec_contains(-l, x.p(1), rho.conj()));
    }
}

TEST_CASE("character values and primitive generators") {
    SympSpace x(2);
    CHECK(character_value(1, 0) == ComplexRational(0, -1));
    // (2i - 3)^{-1} = (-3 - 2i)/13
    CHECK(character_value(2, 3) == ComplexRational(Rational(-3, 13), Rational(-2, 13)));

    CHECK(primitive_generators(Subspace::whole(2), LinearFunctional::zero(Subspace::zero(2)), 1, 1).empty());

    Subspace p1 = Subspace::span(2, {x.p(1)});
    auto gens = primitive_generators(p1, LinearFunctional(p1, {0}), 1, 1);
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == R(1, x.q(1)));
    CHECK(gens[1] == R(1, x.p(1) + x.q(1)));
    CHECK(gens[2] == R(1, x.p(1)) + Term::scalar(I));

    auto all = primitive_generators(Subspace::zero(2), LinearFunctional::zero(Subspace::zero(2)), 1, 1);
    REQUIRE(all.size() == 2);
    CHECK(all[0] == R(1, x.p(1)));
    CHECK(all[1] == R(1, x.q(1)));
    CHECK_THROWS(primitive_generators(p1, LinearFunctional::zero(Subspace::zero(2)), 1, 1));
}

TEST_CASE("DSL and JSON output") {
    SympSpace x(2);
    CHECK(to_dsl(parse_term("R(2,0)", 2)) == "(-1/2)*i*1");
    CHECK(to_dsl(Term()) == "0");
    CHECK(to_string(x.p(1) - Rational(1, 2) * x.q(1)) == "p1-1/2*q1");
    Term t = parse_term("(1+2*i)*R(1,p1)*R(-3,q1) - 1/2", 2);
    CHECK(parse_term(to_dsl(t), 2) == t);
    CHECK(term_from_json(to_json(t)) == t);
    auto j = to_json(R(1, x.p(1)));
    CHECK(j[0]["coeff"] == nlohmann::json::array({"1", "0"}));
    CHECK(j[0]["word"][0] == nlohmann::json::array({"1", "0", "1", "0"}));
}
