#pragma once

#include <Eigen/Core>

namespace pedalis {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;

/// Affine points of R^3 are plain 3-vectors.
using AffPoint = Vec3;

/// Threshold for detecting exceptional inputs, applied after max-abs
/// normalization.
inline constexpr double kExceptionalEps = 1e-12;

/// Point of P^3 in homogeneous coordinates (x0, x1, x2, x3); x0 = 0 is the
/// ideal plane.
struct HPoint {
    Vec4 x = Vec4(1.0, 0.0, 0.0, 0.0);

    HPoint() = default;
    explicit HPoint(const Vec4& coords) : x(coords) {}
    HPoint(double x0, double x1, double x2, double x3) : x(x0, x1, x2, x3) {}

    static HPoint from_affine(const AffPoint& p) { return {1.0, p.x(), p.y(), p.z()}; }

    /// Throws ExceptionalElement for ideal points.
    AffPoint dehomogenize() const;
};

/// Plane of P^3 (point of the dual space) with coordinates (u0, u1, u2, u3),
/// the zero set of u0*x0 + u1*x1 + u2*x2 + u3*x3.
struct HPlane {
    Vec4 u = Vec4(1.0, 0.0, 0.0, 0.0);

    HPlane() = default;
    explicit HPlane(const Vec4& coords) : u(coords) {}
    HPlane(double u0, double u1, double u2, double u3) : u(u0, u1, u2, u3) {}
};

/// Non-oriented affine plane n.x = e. (n, e) and (l*n, l*e) denote the
/// same plane.
struct AffPlane {
    Vec3 normal = Vec3(0.0, 0.0, 1.0);
    double offset = 0.0;

    AffPlane() = default;
    AffPlane(const Vec3& n, double e) : normal(n), offset(e) {}

    HPlane homogeneous() const { return {-offset, normal.x(), normal.y(), normal.z()}; }
    /// Throws ExceptionalElement for the ideal plane.
    static AffPlane from_homogeneous(const HPlane& plane);

    /// Signed distance of p from the plane, measured along the unit normal.
    double signed_distance(const AffPoint& p) const;
};

// Foot-point map and its inverse, affine form.

/// Foot of the perpendicular from O onto E: (e / |n|^2) n.
/// Planes through O map to O. Throws ExceptionalPlane when |n| < eps.
AffPoint alpha_affine(const AffPlane& plane);

/// Plane through P with normal OP: x.p = p.p. Throws OriginPoint at O.
AffPlane alpha_star_affine(const AffPoint& p);

/// Foot of the perpendicular from Z onto E.
AffPoint alpha_z(const AffPlane& plane, const AffPoint& z);

// Homogeneous forms.

/// (-(u1^2+u2^2+u3^2), u0 u1, u0 u2, u0 u3). Throws ExceptionalElement on
/// the exceptional set (the ideal plane, for real input).
HPoint alpha_hom(const HPlane& plane);

/// (-(x1^2+x2^2+x3^2), x0 x1, x0 x2, x0 x3). Throws BasePoint at O.
HPlane alpha_star_hom(const HPoint& point);

/// Inversion at the unit sphere: (x1^2+x2^2+x3^2, x0 x1, x0 x2, x0 x3).
HPoint inversion_sigma(const HPoint& point);

/// Polarity with respect to the unit sphere and its dual.
HPoint polarity_pi(const HPlane& plane);
HPlane polarity_pi_star(const HPoint& point);

// Projective comparison.

/// Scales so the max-abs component is 1 and the first nonzero component is
/// positive. The zero tuple is returned unchanged.
Vec4 canonical(const Vec4& coords);

/// Max componentwise distance between canonical forms.
double projective_distance(const Vec4& a, const Vec4& b);

bool projective_eq(const HPoint& a, const HPoint& b, double tol);
bool projective_eq(const HPlane& a, const HPlane& b, double tol);

}  // namespace pedalis
