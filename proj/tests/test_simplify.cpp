// Rewriting tests. Relation-equality of input and output is checked by
// evaluating both in a truncated regular representation.

#include <vector>

#include <doctest.h>

#include "resolvent/algebra.hpp"
#include "resolvent/repr.hpp"

using namespace resolvent;

namespace {

const ComplexRational I = ComplexRational::i();

Term R(const ComplexRational& l, const SympVector& f) { return Term::resolvent(l, f); }

// Compressed difference of a and b in the regular representation.
double distance(const Term& a, const Term& b, int dim, int levels) {
    Representation rep = Representation::regular(dim, levels);
    return max_abs(rep.eval_compressed(a - b, 8));
}

}  // namespace

TEST_CASE("resolvent identity merges same-direction pairs") {
    SympSpace x(2);
    SimplifyResult r = simplify(R(1, x.p(1)) * R(2, x.p(1)));
    CHECK(r.canonical);
    // (i(2-1))^{-1} (R(1,p1) - R(2,p1))
    CHECK(r.term == Term::scalar(-I) * (R(1, x.p(1)) - R(2, x.p(1))));
    CHECK(distance(r.term, R(1, x.p(1)) * R(2, x.p(1)), 2, 32) < 1e-12);
}

TEST_CASE("commutator rewrites to the CCR correction") {
    SympSpace x(2);
    Term t = R(1, x.q(1)) * R(1, x.p(1)) - R(1, x.p(1)) * R(1, x.q(1));
    SimplifyResult r = simplify(t);
    CHECK(r.canonical);
    Term p = R(1, x.p(1)), q = R(1, x.q(1));
    CHECK(r.term == Term::scalar(-I * sigma(x.p(1), x.q(1))) * (p * q * q * p));
    // truncation error decays with the level count
    std::vector<double> d;
    for (int N : {16, 32, 64}) d.push_back(distance(r.term, t, 2, N));
    CHECK(d[1] < d[0]);
    CHECK(d[2] < d[1]);
    CHECK(d[2] < 1e-6);
}

TEST_CASE("trivial inputs") {
    CHECK(simplify(Term::identity()).term == Term::identity());
    CHECK(simplify(Term()).term.is_zero());
    SympSpace x(2);
    CHECK(simplify(R(1, x.p(1))).term == R(1, x.p(1)));
    CHECK(simplify(R(1, x.p(1))).steps == 0);
}

TEST_CASE("commuting generators are sorted") {
    SympSpace x(4);
    Term t = R(1, x.p(2)) * R(1, x.p(1));
    SimplifyResult r = simplify(t);
    CHECK(r.term == R(1, x.p(2)) * R(1, x.p(1)));
    CHECK(simplify(r.term).steps == 0);
    CHECK(distance(r.term, t, 4, 16) < 1e-12);
}

TEST_CASE("sum relation contracts commuting pairs") {
    SympSpace x(4);
    // R(l,f) R(m,g) = R(l+m, f+g) (R(l,f) + R(m,g)) for sigma(f,g) = 0
    Term f = R(1, x.p(1)), g = R(2, x.p(2)), s = R(3, x.p(1) + x.p(2));
    Term expanded = s * f + s * g;
    SimplifyResult r = simplify(expanded);
    CHECK(r.term == g * f);
    CHECK(distance(r.term, expanded, 4, 16) < 1e-10);
}

TEST_CASE("budget exhaustion is flagged") {
    SympSpace x(2);
    Term t = R(1, x.q(1)) * R(1, x.p(1)) * R(2, x.q(1)) * R(3, x.p(1));
    SimplifyResult r = simplify(t, {2, 8});
    CHECK_FALSE(r.canonical);
    CHECK(r.steps == 2);
    SimplifyResult full = simplify(t);
    CHECK(full.canonical);
}

TEST_CASE("simplification preserves relation-equality") {
    const char* inputs[] = {
        "R(1,q1)*R(1,p1)",
        "R(2,q1)*R(-1,p1)*R(1,q1)",
        "R(1,p1)*R(-2,p1)*R(3,p1)",
        "R(1,q1)*R(1,p1+q1) - R(1,p1+q1)*R(1,q1)",
        "adj(R(1,q1)*R(2,p1))",
        "R(1,1/2*p1)*R(2,p1)",
        "(1+i)*R(1,p1)*R(1,q1) + R(-1,q1)*R(2,p1)",
    };
    for (const char* s : inputs) {
        CAPTURE(s);
        Term t = parse_term(s, 2);
        SimplifyResult r = simplify(t);
        CHECK(r.canonical);
        double d = distance(r.term, t, 2, 64);
        CHECK(d < 1e-6);
    }
}

TEST_CASE("two-mode simplification") {
    const char* inputs[] = {
        "R(1,q2)*R(1,p1)*R(1,p2)",
        "R(1,p2)*R(2,q1)*R(1,p1)",
        "R(1,q1+q2)*R(1,p1)",
    };
    for (const char* s : inputs) {
        CAPTURE(s);
        Term t = parse_term(s, 4);
        SimplifyResult r = simplify(t);
        CHECK(distance(r.term, t, 4, 24) < 1e-5);
    }
}
