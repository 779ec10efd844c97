#include <doctest.h>

#include <cmath>
#include <sstream>

#include "pedalis/errors.hpp"
#include "pedalis/gallery.hpp"
#include "pedalis/kernels.hpp"
#include "pedalis/sphereatlas.hpp"
#include "pedalis/surfkit.hpp"

using namespace pedalis;

namespace {

const Domain kSphereDom{-M_PI, M_PI, -1.4, 1.4};

ScalarChart constant(double c, const Domain& dom) {
    return ScalarChart([c](double, double) { return c; }, dom, [](double, double) { return 0.0; },
                       [](double, double) { return 0.0; });
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("grid sampling is deterministic and matches the serial twin") {
    const Domain dom{0, 1, -1, 1};
    const Grid grid{7, 5};
    const HomChart chart = [](double u, double v) -> std::optional<Vec4> {
        if (u > 0.9) return std::nullopt;
        return Vec4(1, u, v, u * v);
    };
    const auto par = sample_grid(chart, dom, grid);
    const auto ser = sample_grid_serial(chart, dom, grid);
    REQUIRE(par.size() == 35);
    for (std::size_t i = 0; i < par.size(); ++i) {
        REQUIRE(par[i].has_value() == ser[i].has_value());
        if (par[i]) CHECK(*par[i] == *ser[i]);
    }
    // index i * nv + j
    CHECK((*par[1 * 5 + 4])[2] == 1.0);
    CHECK(!par[6 * 5].has_value());
}

TEST_CASE("summaries") {
    const ResidualReport r = summarize({1.0, std::nullopt, 3.0});
    CHECK(r.max == 3.0);
    CHECK(r.mean == 2.0);
    CHECK(r.samples == 2);
    CHECK(r.skipped == 1);
    CHECK_THROWS_AS(summarize({std::nullopt}), EmptyGrid);
    const auto a = measure_batch([](std::size_t i) -> std::optional<double> { return double(i % 7); }, 1000);
    CHECK(a == measure_batch_serial([](std::size_t i) -> std::optional<double> { return double(i % 7); }, 1000));
}

}

TEST_SUITE("sphereatlas") {

TEST_CASE("sphere numerators satisfy A^2 + B^2 + C^2 = D^2 exactly") {
    const Rational a(2, 3), b(-5, 7), c(1, 2), d(3);
    const auto n = sphere_numerators(a, b, c, d);
    CHECK(n[0] * n[0] + n[1] * n[1] + n[2] * n[2] == n[3] * n[3]);
}

TEST_CASE("universal chart is unit length and hits its common zero") {
    const Domain dom{-2, 2, -2, 2};
    const RationalQuadruple q{ScalarChart([](double u, double) { return u; }, dom),
                              ScalarChart([](double, double v) { return v; }, dom),
                              ScalarChart([](double u, double v) { return 1.0 + u * v; }, dom),
                              ScalarChart([](double, double) { return 0.5; }, dom)};
    const VectorChart s = universal_s2(q);
    for (double u : {-1.5, 0.2, 1.9})
        for (double v : {-0.7, 0.0, 1.3}) CHECK(std::abs(s(u, v).norm() - 1.0) < 1e-14);
    const RationalQuadruple zero{constant(0, dom), constant(0, dom), constant(0, dom), constant(0, dom)};
    CHECK_THROWS_AS(universal_s2(zero)(0.0, 0.0), CommonZero);
}

TEST_CASE("weierstrass substitution") {
    const auto [c, s] = weierstrass(Rational(1, 2));
    CHECK(c == Rational(3, 5));
    CHECK(s == Rational(4, 5));
    const auto [cd, sd] = weierstrass(std::tan(0.35));
    CHECK(cd == doctest::Approx(std::cos(0.7)));
    CHECK(sd == doctest::Approx(std::sin(0.7)));
}

TEST_CASE("trigonometric chart and its partials") {
    const VectorChart s = trig_s2(kSphereDom);
    CHECK((s(0, 0) - Vec3(1, 0, 0)).norm() < 1e-15);
    CHECK((s(0, M_PI / 2) - Vec3(0, 0, 1)).norm() < 1e-15);
    REQUIRE(s.has_analytic_partials());
    const double u = 0.4, v = -0.3, h = 1e-6;
    CHECK((s.du(u, v) - (s(u + h, v) - s(u - h, v)) / (2 * h)).norm() < 1e-8);
    CHECK((s.dv(u, v) - (s(u, v + h) - s(u, v - h)) / (2 * h)).norm() < 1e-8);
}

}

TEST_SUITE("surfkit") {

TEST_CASE("envelope of the tangent planes of a sphere") {
    // n.x = n.m + R touches the sphere with centre m and radius R at m + R n.
    const Vec3 m(0.5, -0.2, 1.0);
    const VectorChart n = trig_s2(kSphereDom);
    const ScalarChart e([n, m](double u, double v) { return n(u, v).dot(m) + 2.0; }, kSphereDom);
    const DualSurface f = phi(n, e);
    for (double u : {-2.0, 0.1, 3.0})
        for (double v : {-1.0, 0.5}) CHECK((envelope_solve(f, u, v) - (m + 2.0 * n(u, v))).norm() < 1e-7);
    // offsets grow the radius
    CHECK((envelope_solve(offset_map(f, 0.5), 0.3, 0.2) - (m + 2.5 * n(0.3, 0.2))).norm() < 1e-7);
}

TEST_CASE("envelope at the vertex of the paraboloid") {
    // The planes of x^2 + y^2 + 4z = 4 in the trigonometric chart. The vertex
    // sits on the chart pole, where n_u vanishes and the solve is singular.
    const GalleryEntry& e = get_entry("plane-conchoid");
    const DualSurface f = phi(e.normal, e.support);
    CHECK_THROWS_AS(envelope_solve(f, 0.0, M_PI / 2), DegenerateEnvelope);
    const Vec3 x = envelope_solve(f, 0.0, M_PI / 2 - 1e-4);
    CHECK((x - Vec3(0, 0, 1)).norm() < 1e-3);
    CHECK(std::abs(x[0] * x[0] + x[1] * x[1] + 4 * x[2] - 4) < 1e-8);
}

TEST_CASE("sphere envelope point and a constant plane family") {
    const VectorChart n = trig_s2(kSphereDom);
    const ScalarChart e([n](double u, double v) { return n(u, v).dot(Vec3(2, 0, 0)) + 1.0; }, kSphereDom);
    CHECK((envelope_solve(phi(n, e), 0, 0) - Vec3(3, 0, 0)).norm() < 1e-9);
    const VectorChart up([](double, double) { return Vec3(0, 0, 1); }, kSphereDom);
    CHECK_THROWS_AS(envelope_solve(phi(up, constant(1.0, kSphereDom)), 0.2, 0.3), DegenerateEnvelope);
}

TEST_CASE("phi rejects non-unit normals") {
    const VectorChart raw([](double u, double v) { return Vec3(u, v, 2.0); }, kSphereDom);
    CHECK_THROWS_AS(phi(raw, constant(1.0, kSphereDom)), NonUnitNormal);
}

TEST_CASE("conchoid and pedal of a sphere through its polar chart") {
    // r s with s on S^2 and r = R gives the sphere of radius R around O.
    const PolarSurface g = gamma(trig_s2(kSphereDom), constant(1.5, kSphereDom));
    CHECK(std::abs(g.point(0.3, 0.4).norm() - 1.5) < 1e-14);
    CHECK(std::abs(conchoid_map(g, -0.5).point(0.3, 0.4).norm() - 1.0) < 1e-14);
    const PointSurface p = to_points(g);
    CHECK((p.point(1.0, 0.2) - g.point(1.0, 0.2)).norm() == 0.0);
}

TEST_CASE("tangent planes of a point chart") {
    const Domain dom{-1, 1, -1, 1};
    const PointSurface par{VectorChart([](double u, double v) { return Vec3(u, v, (u * u + v * v) / 2); }, dom)};
    const DualSurface t = tangent_planes(par);
    const Vec3 n = t.normal(0.5, -0.25);
    const Vec3 expected = Vec3(-0.5, 0.25, 1.0).normalized();
    CHECK((n - expected).norm() < 1e-8);
    CHECK(t.support(0.5, -0.25) == doctest::Approx(n.dot(par.point(0.5, -0.25))));
    CHECK((envelope_solve(t, 0.5, -0.25) - par.point(0.5, -0.25)).norm() < 1e-6);
}

TEST_CASE("commutation of offsets and conchoids on a sphere family") {
    const Vec3 m(0.5, 0, 0);
    const VectorChart n = trig_s2(kSphereDom);
    const ScalarChart e([n, m](double u, double v) { return n(u, v).dot(m) + 1.0; }, kSphereDom);
    for (double d : {-0.3, 0.0, 2.0}) {
        const CommutationReport a = commutation_check(n, e, d, Grid{20, 20});
        const CommutationReport b = commutation_check_serial(n, e, d, Grid{20, 20});
        CHECK(a.pedal_deviation < 1e-9);
        CHECK(a.inverse_deviation < 1e-9);
        CHECK(a.samples == b.samples);
        CHECK(a.pedal_deviation == b.pedal_deviation);
    }
}

TEST_CASE("mesh sampling and OBJ output") {
    const Domain dom{0, 1, 0, 1};
    const PointSurface sq{VectorChart([](double u, double v) { return Vec3(u, v, 0); }, dom)};
    const Mesh mesh = sample_mesh(sq, 3, 2);
    CHECK(mesh.vertices.size() == 6);
    CHECK(mesh.triangles.size() == 4);
    std::ostringstream os;
    write_obj(mesh, os);
    const std::string obj = os.str();
    CHECK(obj.rfind("v ", 0) == 0);
    CHECK(obj.find("f 1 ") != std::string::npos);
    CHECK(obj.find("f 0 ") == std::string::npos);
    CHECK_THROWS_AS(sample_mesh(sq, 1, 1), UsageError);

    PointSurface nowhere = sq;
    nowhere.chart.with_poles([](double, double) { return true; });
    CHECK_THROWS_AS(sample_mesh(nowhere, 4, 4), EmptyMesh);
    CHECK(sample_mesh_serial(sq, 5, 5).triangles == sample_mesh(sq, 5, 5).triangles);
}

}
