#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "pedalis/errors.hpp"
#include "pedalis/ruledpedal.hpp"

using namespace pedalis;

namespace {

// Right helicoid c = (0,0,u), e = (cos u, sin u, 0): the axis is both the
// footpoint curve and the striction line, and n_s, n_2 are unit vectors.
RuledChart helicoid() {
    return {CurveChart([](double u) { return Vec3(0, 0, u); }, -2, 2),
            CurveChart([](double u) { return Vec3(std::cos(u), std::sin(u), 0); }, -2, 2)};
}

// Skew ruled surface with a generic directrix.
RuledChart skew() {
    return {CurveChart([](double u) { return Vec3(1 + 0.3 * u, u * u, 0.5 - u); }, -1, 1),
            CurveChart([](double u) { return Vec3(std::cos(u), 0.4, std::sin(u) + 0.2); }, -1, 1)};
}

// Envelope point of the planes x.g = g.g from the three envelope
// equations, differentiated numerically in the chart's own parameters.
Vec3 envelope_oracle(const RuledChart& r, double u, double v) {
    const double h = 1e-6;
    auto g = [&r](double a, double b) { return r.point(a, b); };
    const Vec3 p = g(u, v);
    const Vec3 gu = (g(u + h, v) - g(u - h, v)) / (2 * h);
    const Vec3 gv = (g(u, v + h) - g(u, v - h)) / (2 * h);
    Eigen::Matrix3d A;
    A.row(0) = p;
    A.row(1) = gu;
    A.row(2) = gv;
    return A.fullPivLu().solve(Vec3(p.dot(p), 2 * p.dot(gu), 2 * p.dot(gv)));
}

}  // namespace

TEST_SUITE("ruledpedal") {

TEST_CASE("footpoints, striction and pedal circles of the helicoid") {
    const RuledChart r = helicoid();
    CHECK((footpoint_curve(r)(0.7) - Vec3(0, 0, 0.7)).norm() < 1e-14);
    CHECK(std::abs(striction_parameter(r, 0.7)) < 1e-12);
    CHECK((striction_curve(r)(-1.2) - Vec3(0, 0, -1.2)).norm() < 1e-10);

    const PedalCircle c = pedal_circle(r, 1.0);
    CHECK((c.center - Vec3(0, 0, 0.5)).norm() < 1e-14);
    CHECK(c.radius == doctest::Approx(0.5));
    CHECK(std::abs(c.normal.dot(Vec3(std::cos(1.0), std::sin(1.0), 0))) == doctest::Approx(1.0));
    for (double t : {0.0, 1.0, 2.5}) {
        const Vec3 x = c.point(t);
        // Thales: O, D and x span a right angle at x.
        CHECK(std::abs(x.dot(x - Vec3(0, 0, 1))) < 1e-14);
        CHECK(std::abs(x.dot(c.normal)) < 1e-14);
    }
    CHECK_THROWS_AS(pedal_circle(r, 0.0), LineThroughOrigin);
}

TEST_CASE("striction of a skew surface minimises the distance between neighbouring rulings") {
    const RuledChart r = skew();
    const double u = 0.3, vs = striction_parameter(r, u);
    // |f_u x e| is minimal along the ruling exactly where it is orthogonal to e' x e.
    const Vec3 e = r.direction(u), de = r.direction.derivative(u);
    const Vec3 fu = r.directrix.derivative(u) + vs * de;
    CHECK(std::abs(fu.cross(e).dot(de.cross(e))) < 1e-7);
}

TEST_CASE("cylinders are rejected") {
    const RuledChart cyl{CurveChart([](double u) { return Vec3(std::cos(u), std::sin(u), 0); }, -1, 1),
                         CurveChart([](double) { return Vec3(0, 0, 1); }, -1, 1)};
    CHECK_THROWS_AS(striction_parameter(cyl, 0.2), CylindricalRuling);
    CHECK_THROWS_AS(rational_offset_ruled(cyl, 0.0), DevelopableSurface);
    const RuledChart zero{CurveChart([](double u) { return Vec3(u, 1, 0); }, -1, 1),
                          CurveChart([](double) { return Vec3(0, 0, 0); }, -1, 1)};
    CHECK_THROWS(footpoint_curve(zero)(0.0));
}

TEST_CASE("conic parameterization") {
    for (double t : {-2.0, 0.0, 0.4, 3.0}) {
        const Vec3 y = conic_point_param(2.0, 0.5, t);
        CHECK(2.0 * y[1] * y[1] + 0.5 * y[2] * y[2] == doctest::Approx(y[0] * y[0]));
    }
    const ConicFamily f = conic_family(helicoid());
    CHECK(f.a1(0.4) == doctest::Approx(1.0));
    CHECK(f.a2(0.4) == doctest::Approx(1.0));
}

TEST_CASE("rational norm of the offset normal") {
    const RuledChart r = skew();
    for (double u : {-0.8, 0.1, 0.9})
        for (double tau : {-0.9, 0.0, 0.5}) {
            const RuledOffsetSample s = ruled_offset_sample(r, u, tau);
            CHECK(s.conic[1] > 0.0);
            CHECK(std::abs(s.normal.norm() - s.norm) < 1e-9 * s.norm);
            // the normal is normal to the surface at that point
            const double v = s.conic[2] / s.conic[1];
            const Vec3 fu = r.directrix.derivative(u) + (striction_parameter(r, u) + v) * r.direction.derivative(u);
            CHECK(std::abs(s.normal.dot(r.direction(u))) < 1e-9);
            CHECK(std::abs(s.normal.dot(fu)) < 1e-6);
        }
    const DualSurface e = rational_offset_ruled(r, 0.25);
    CHECK(std::abs(e.normal(0.2, 0.3).norm() - 1.0) < 1e-12);
    const RuledOffsetSample s = ruled_offset_sample(r, 0.2, 0.3);
    CHECK(e.support(0.2, 0.3) == doctest::Approx(s.point.dot(s.normal) / s.norm + 0.25));
}

TEST_CASE("inverse pedal of a ruled surface is its envelope of alpha* planes") {
    const RuledChart r = skew();
    const CurveChart foot = footpoint_curve(r);
    for (double u : {-0.6, 0.2, 0.7})
        for (double v : {-1.0, 0.3, 1.5}) {
            // same point on the surface, written from the footpoint curve
            const Vec3 e = r.direction(u);
            const double w = v + r.directrix(u).dot(e) / e.dot(e);
            REQUIRE((foot(u) + w * e - r.point(u, v)).norm() < 1e-12);
            CHECK((inverse_pedal_ruled(r, u, w) - envelope_oracle(r, u, v)).norm() < 1e-6);
        }
}

TEST_CASE("inverse pedal of a circular cylinder has a parabola as meridian") {
    // radius b = 1: the meridian is (-1 + v^2, 0, 2v) up to a rotation about the axis
    const RuledChart cyl{CurveChart([](double u) { return Vec3(std::cos(u), std::sin(u), 0); }, -M_PI, M_PI),
                         CurveChart([](double) { return Vec3(0, 0, 1); }, -M_PI, M_PI)};
    for (double u : {0.0, 1.0, 2.5})
        for (double v : {-1.2, 0.0, 0.4, 2.0}) {
            const Vec3 x = inverse_pedal_ruled(cyl, u, v);
            CHECK(std::hypot(x[0], x[1]) == doctest::Approx(std::abs(-1 + v * v)).epsilon(1e-10));
            CHECK(x[2] == doctest::Approx(2 * v).epsilon(1e-10));
        }
}

TEST_CASE("parabolic cylinder of a line") {
    const ParabolicCylinder p = parabolic_cylinder_of_line(Vec3(0, 0, 1), Vec3(1, 0, 0));
    for (double v : {-1.5, 0.0, 0.8}) {
        const Vec3 x = p.cross_section(v);
        CHECK((x - Vec3(2 * v, 0, 1 - v * v)).norm() < 1e-14);
        // focus O, directrix plane z = 2
        CHECK(x.norm() == doctest::Approx(p.directrix_distance(v)));
    }
    CHECK(std::abs(p.ruling.normalized().dot(Vec3(0, 1, 0))) == doctest::Approx(1.0));
    // foot points off the perpendicular are projected first
    const ParabolicCylinder q = parabolic_cylinder_of_line(Vec3(3, 0, 1), Vec3(1, 0, 0));
    CHECK((q.vertex - Vec3(0, 0, 1)).norm() < 1e-14);
    CHECK_THROWS_AS(parabolic_cylinder_of_line(Vec3(3, 0, 0), Vec3(1, 0, 0)), LineThroughOrigin);
}

TEST_CASE("rational norm reparameterization of the polar chart") {
    const RuledChart r = skew();
    const CurveChart foot = footpoint_curve(r);
    for (double u : {-0.5, 0.4})
        for (double tau : {-0.7, 0.0, 0.9}) {
            const auto [v, w] = norm_reparam_values(r, u, tau);
            CHECK(std::abs((foot(u) + v * r.direction(u)).norm() - w) < 1e-12 * std::max(1.0, w));
        }
    const PolarSurface g = polar_norm_reparam(r);
    CHECK(std::abs(g.direction(0.1, 0.2).norm() - 1.0) < 1e-12);
}

}
