#include <doctest.h>

#include "pedalis/errors.hpp"
#include "pedalis/hompoly.hpp"

using namespace pedalis;

namespace {

HomPoly4 P(const char* s) { return parse_poly(s, Space::Point); }
HomPoly4 D(const char* s) { return parse_poly(s, Space::Dual); }

}  // namespace

// Expected polynomials below were expanded symbolically (sympy, direct
// substitution and division) and frozen as text.

TEST_SUITE("hompoly") {

TEST_CASE("canonical text round trip") {
    const HomPoly4 p = P("3/2*x0^2*x1 - x3^3 + 2*x1*x2*x3");
    const std::string s = to_string(p);
    CHECK(s == "3/2*x0^2*x1^1 + 2*x1^1*x2^1*x3^1 - 1*x3^3");
    CHECK(parse_poly(s) == p);
    CHECK(to_string(parse_poly(s)) == s);
    CHECK(p.degree() == 3);
    CHECK(p.space() == Space::Point);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(parse_poly("x0 + x1^2"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 + (x1"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 + u1"), ParseError);
    CHECK_THROWS_AS(parse_poly("x4"), ParseError);
    CHECK_THROWS_AS(parse_poly("x0 ** 2"), ParseError);
}

TEST_CASE("decimal constants are exact") {
    CHECK(P("0.25*x0") == P("1/4*x0"));
    CHECK(P("(x0 + x1)^2") == P("x0^2 + 2*x0*x1 + x1^2"));
}

TEST_CASE("pedal pullback of a cubic") {
    const HomPoly4 f = D("3*u0^2*u1 - 1/2*u1*u2*u3 + 2*u3^3 - u0*u2^2");
    const HomPoly4 expected =
        P("-1/2*x0^3*x1*x2*x3 + 2*x0^3*x3^3 + x0^2*x1^2*x2^2 + x0^2*x2^4 + x0^2*x2^2*x3^2 + 3*x0*x1^5 "
          "+ 6*x0*x1^3*x2^2 + 6*x0*x1^3*x3^2 + 3*x0*x1*x2^4 + 6*x0*x1*x2^2*x3^2 + 3*x0*x1*x3^4");
    CHECK(pedal_pullback(f) == expected);
    const StripResult s = strip_exceptional(pedal_pullback(f));
    CHECK(s.r == 1);
    CHECK(s.k == 0);
    CHECK(s.reduced.degree() == 5);
}

TEST_CASE("pullbacks of a plane and its paraboloid") {
    // The plane z = 1 pulls back to the dual of x^2 + y^2 + 4z = 4 up to the
    // exceptional factors.
    const StripResult s = strip_exceptional(inverse_pedal_pullback(P("x3 - x0")));
    CHECK(equal_up_to_scale(s.reduced, D("u1^2 + u2^2 + u3^2 + u0*u3")));
    const DegreeReport r = degree_bookkeeping(D("u1^2 + u2^2 + u3^2 + u0*u3"));
    CHECK(r.n == 2);
    CHECK(r.r == 1);
    CHECK(r.k == 1);
    CHECK(r.degree == 1);
}

TEST_CASE("strip removes powers of x0 and the quadratic form") {
    const HomPoly4 core = P("x1 + 2*x3");
    const HomPoly4 q = HomPoly4::quadform(Space::Point);
    const HomPoly4 p = HomPoly4::variable(Space::Point, 0).pow(3) * q.pow(2) * core;
    const StripResult s = strip_exceptional(p);
    CHECK(s.r == 3);
    CHECK(s.k == 2);
    CHECK(s.reduced == core);
}

TEST_CASE("exact division and proportionality") {
    const HomPoly4 a = P("x0 + x1"), b = P("x2 - 3*x3");
    CHECK(exact_divide(a * b, a) == b);
    CHECK_FALSE(try_divide(a * b + P("x0^2"), a).has_value());
    CHECK_THROWS_AS(exact_divide(P("x0^2 + x1^2"), a), NotDivisible);
    const auto l = proportionality(Rational(-3, 4) * b, b);
    REQUIRE(l.has_value());
    CHECK(*l == Rational(-3, 4));
    CHECK_FALSE(equal_up_to_scale(a, b));
    CHECK(monic(Rational(5) * a) == a);
}

TEST_CASE("space tags are enforced") {
    CHECK_THROWS_AS(P("x0") + D("u0"), SpaceMismatch);
    CHECK_THROWS_AS(eval(P("x0 + x1"), HPlane(1, 0, 0, 0)), SpaceMismatch);
    CHECK(eval(P("x0 + x1"), HPoint(1, 2, 0, 0)) == 3.0);
    CHECK_THROWS_AS(pedal_pullback(P("x0")), SpaceMismatch);
}

TEST_CASE("two-sided offset of a sphere") {
    // Sphere with centre (1/2, 0, 0) and radius 1, offset by 1/2 on both
    // sides: the product of the radius 1/2 and radius 3/2 sphere duals.
    const HomPoly4 f = D("(u0 + 1/2*u1)^2 - (u1^2 + u2^2 + u3^2)");
    const HomPoly4 expected =
        D("u0^4 + 2*u0^3*u1 - u0^2*u1^2 - 5/2*u0^2*u2^2 - 5/2*u0^2*u3^2 - 2*u0*u1^3 - 5/2*u0*u1*u2^2 "
          "- 5/2*u0*u1*u3^2 + 1/2*u1^2*u2^2 + 1/2*u1^2*u3^2 + 9/16*u2^4 + 9/8*u2^2*u3^2 + 9/16*u3^4");
    CHECK(equal_up_to_scale(two_sided_offset(f, Rational(1, 2)), expected));
    CHECK(equal_up_to_scale(two_sided_offset(f, 0), f * f));
}

TEST_CASE("two-sided conchoid of a plane") {
    const HomPoly4 expected = P("x0^2*x1^2 + x0^2*x2^2 + 3/4*x0^2*x3^2 - 2*x0*x1^2*x3 - 2*x0*x2^2*x3 - 2*x0*x3^3 "
                                "+ x1^2*x3^2 + x2^2*x3^2 + x3^4");
    CHECK(equal_up_to_scale(two_sided_conchoid(P("x3 - x0"), Rational(1, 2)), expected));
}

TEST_CASE("compiled evaluation matches exact evaluation") {
    const HomPoly4 p = P("3/7*x0^2*x1^2 - x2^4 + 5*x0*x1*x2*x3");
    const CompiledPoly c = p.compile();
    const Vec4 t(0.3, -1.1, 0.7, 2.0);
    CHECK(c(t) == doctest::Approx(p.evaluate(t)).epsilon(1e-14));
    CHECK(normalized_residual(p, t) == doctest::Approx(c.normalized_residual(t)));
    CHECK(c.l1_norm() == doctest::Approx(3.0 / 7.0 + 1.0 + 5.0));
}

}
