#include "pedalis/sphereatlas.hpp"

#include <cmath>

#include "pedalis/errors.hpp"

namespace pedalis {

VectorChart universal_s2(const RationalQuadruple& q) {
    auto value = [q](double u, double v) -> Vec3 {
        const auto [A, B, C, D] = sphere_numerators(q.a(u, v), q.b(u, v), q.c(u, v), q.d(u, v));
        if (!(D > 1e-300)) throw CommonZero("a, b, c, d vanish simultaneously");
        return Vec3(A, B, C) / D;
    };
    return VectorChart(value, q.a.domain());
}

VectorChart trig_s2(const Domain& dom) {
    VectorChart chart(
        [](double u, double v) { return Vec3(std::cos(u) * std::cos(v), std::cos(v) * std::sin(u), std::sin(v)); },
        dom,
        [](double u, double v) { return Vec3(-std::sin(u) * std::cos(v), std::cos(v) * std::cos(u), 0.0); },
        [](double u, double v) { return Vec3(-std::cos(u) * std::sin(v), -std::sin(v) * std::sin(u), std::cos(v)); });
    return chart;
}

std::pair<double, double> weierstrass(double t) {
    const double den = 1.0 + t * t;
    return {(1.0 - t * t) / den, 2.0 * t / den};
}

std::pair<Rational, Rational> weierstrass(const Rational& t) {
    const Rational den = 1 + t * t;
    return {Rational((1 - t * t) / den), Rational(2 * t / den)};
}

}  // namespace pedalis
