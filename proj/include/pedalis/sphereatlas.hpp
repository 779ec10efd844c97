#pragma once

#include <array>
#include <utility>

#include "pedalis/hompoly.hpp"
#include "pedalis/surfkit.hpp"

namespace pedalis {

/// Four bivariate functions (a, b, c, d) feeding the universal unit-sphere
/// construction. Rationality is the caller's contract.
struct RationalQuadruple {
    ScalarChart a;
    ScalarChart b;
    ScalarChart c;
    ScalarChart d;
};

/// (A, B, C, D) = (2(ac+bd), 2(bc-ad), a^2+b^2-c^2-d^2, a^2+b^2+c^2+d^2).
/// A^2 + B^2 + C^2 = D^2 identically.
template <typename T>
std::array<T, 4> sphere_numerators(const T& a, const T& b, const T& c, const T& d) {
    return {T(2 * (a * c + b * d)), T(2 * (b * c - a * d)), T(a * a + b * b - c * c - d * d),
            T(a * a + b * b + c * c + d * d)};
}

/// Unit-vector chart (A, B, C) / D. Evaluation throws CommonZero where D
/// vanishes.
VectorChart universal_s2(const RationalQuadruple& q);

/// (cos u cos v, cos v sin u, sin v) with analytic partials; poles at
/// v = +-pi/2.
VectorChart trig_s2(const Domain& dom);

/// ((1 - t^2)/(1 + t^2), 2t/(1 + t^2)): cosine and sine of 2 atan(t).
std::pair<double, double> weierstrass(double t);
std::pair<Rational, Rational> weierstrass(const Rational& t);

}  // namespace pedalis
