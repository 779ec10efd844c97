#include <doctest.h>

#include "pedalis/errors.hpp"
#include "pedalis/projmaps.hpp"

using namespace pedalis;

namespace {

// Foot of the perpendicular from O, straight from the definition: the
// point t*n on the plane n.x = e.
Vec3 foot_oracle(const Vec3& n, double e) { return (e / n.squaredNorm()) * n; }

bool close(const Vec4& a, const Vec4& b, double tol = 1e-12) { return (a - b).cwiseAbs().maxCoeff() <= tol; }

}  // namespace

TEST_SUITE("projmaps") {

TEST_CASE("affine foot-point examples") {
    CHECK((alpha_affine({Vec3(0, 0, 1), 1.0}) - Vec3(0, 0, 1)).norm() < 1e-15);
    CHECK((alpha_affine({Vec3(1, 1, 0), 2.0}) - Vec3(1, 1, 0)).norm() < 1e-15);
    CHECK(alpha_affine({Vec3(0, 3, 0), 0.0}).norm() == 0.0);
    const Vec3 n(0.3, -1.2, 2.0);
    CHECK((alpha_affine({n, -0.7}) - foot_oracle(n, -0.7)).norm() < 1e-15);
}

TEST_CASE("affine inverse foot-point") {
    const AffPlane e = alpha_star_affine(Vec3(0, 0, 2));
    CHECK(e.offset / e.normal.z() == doctest::Approx(2.0));
    CHECK(e.normal.head<2>().norm() == 0.0);
    const Vec3 p(1.5, -0.25, 0.75);
    CHECK((alpha_affine(alpha_star_affine(p)) - p).norm() < 1e-14);
}

TEST_CASE("foot-point from another centre") {
    CHECK((alpha_z({Vec3(0, 0, 1), 1.0}, Vec3(3, 4, 5)) - Vec3(3, 4, 1)).norm() < 1e-14);
    CHECK((alpha_z({Vec3(0, 0, 2), 2.0}, Vec3(0, 0, 0)) - Vec3(0, 0, 1)).norm() < 1e-14);
}

TEST_CASE("homogeneous forms") {
    CHECK(projective_distance(alpha_hom(HPlane(-1, 0, 0, 1)).x, Vec4(-1, 0, 0, -1)) < 1e-15);
    CHECK(projective_distance(inversion_sigma(HPoint(1, 2, 0, 0)).x, Vec4(4, 2, 0, 0)) < 1e-15);
    CHECK(projective_distance(alpha_star_hom(HPoint(1, 0, 0, 2)).u, Vec4(-4, 0, 0, 2)) < 1e-15);
    // Homogeneous and affine foot points agree.
    const AffPlane e(Vec3(1, -2, 0.5), 0.8);
    CHECK((alpha_hom(e.homogeneous()).dehomogenize() - alpha_affine(e)).norm() < 1e-14);
}

TEST_CASE("factorization through the polarity") {
    for (const Vec4& u : {Vec4(1, 2, 3, 4), Vec4(-0.5, 0.1, 0, 7), Vec4(2, -1, -1, 0.25)}) {
        CHECK(projective_distance(alpha_hom(HPlane(u)).x, inversion_sigma(polarity_pi(HPlane(u))).x) < 1e-14);
        CHECK(projective_distance(alpha_star_hom(HPoint(u)).u, polarity_pi_star(inversion_sigma(HPoint(u))).u) <
              1e-14);
    }
}

TEST_CASE("canonical form") {
    CHECK(close(canonical(Vec4(-2, 1, 0, 0)), Vec4(1, -0.5, 0, 0)));
    CHECK(close(canonical(Vec4(0, -3, 6, 0)), Vec4(0, 0.5, -1, 0)));
    CHECK(close(canonical(Vec4(0, 0, 0, 0)), Vec4(0, 0, 0, 0)));
    CHECK(projective_distance(Vec4(1, 2, 3, 4), Vec4(-2, -4, -6, -8)) < 1e-15);
    CHECK(projective_eq(HPoint(1, 1, 0, 0), HPoint(3, 3, 0, 0), 1e-12));
    CHECK_FALSE(projective_eq(HPoint(1, 1, 0, 0), HPoint(1, 2, 0, 0), 1e-12));
}

TEST_CASE("exceptional inputs") {
    CHECK_THROWS_AS(alpha_hom(HPlane(1, 0, 0, 0)), ExceptionalElement);
    CHECK_THROWS_AS(alpha_star_hom(HPoint(1, 0, 0, 0)), BasePoint);
    CHECK_THROWS_AS(alpha_star_affine(Vec3::Zero()), OriginPoint);
    CHECK_THROWS_AS(alpha_affine({Vec3::Zero(), 1.0}), ExceptionalPlane);
    CHECK_THROWS_AS(HPoint(0, 1, 0, 0).dehomogenize(), ExceptionalElement);
    CHECK_THROWS_AS(AffPlane::from_homogeneous(HPlane(1, 0, 0, 0)), ExceptionalElement);
}

}
