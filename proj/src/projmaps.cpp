#include "pedalis/projmaps.hpp"

#include <cmath>

#include "pedalis/errors.hpp"

namespace pedalis {

namespace {

double max_abs(const Vec4& v) { return v.cwiseAbs().maxCoeff(); }

// Nonzero-tuple check shared by every homogeneous map.
Vec4 normalized_input(const Vec4& v, const char* what) {
    const double m = max_abs(v);
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw ExceptionalElement(std::string(what) + ": zero or non-finite tuple");
    }
    return v / m;
}

}  // namespace

AffPoint HPoint::dehomogenize() const {
    const double m = max_abs(x);
    if (!(m > 0.0) || std::abs(x[0]) < kExceptionalEps * m) {
        throw ExceptionalElement("point at infinity has no affine coordinates");
    }
    return x.tail<3>() / x[0];
}

AffPlane AffPlane::from_homogeneous(const HPlane& plane) {
    const Vec4 u = normalized_input(plane.u, "plane");
    if (u.tail<3>().norm() < kExceptionalEps) {
        throw ExceptionalElement("ideal plane has no affine equation");
    }
    return {u.tail<3>(), -u[0]};
}

double AffPlane::signed_distance(const AffPoint& p) const {
    const double len = normal.norm();
    return (normal.dot(p) - offset) / len;
}

AffPoint alpha_affine(const AffPlane& plane) {
    const double nn = plane.normal.squaredNorm();
    if (!(std::sqrt(nn) >= kExceptionalEps)) {
        throw ExceptionalPlane("normal vector vanishes");
    }
    if (!std::isfinite(plane.offset / std::sqrt(nn))) {
        throw ExceptionalPlane("non-finite plane offset");
    }
    return (plane.offset / nn) * plane.normal;
}

AffPlane alpha_star_affine(const AffPoint& p) {
    if (!(p.norm() >= kExceptionalEps)) {
        throw OriginPoint("the reference point O has no image plane");
    }
    return {p, p.squaredNorm()};
}

AffPoint alpha_z(const AffPlane& plane, const AffPoint& z) {
    const double nn = plane.normal.squaredNorm();
    if (!(std::sqrt(nn) >= kExceptionalEps)) {
        throw ExceptionalPlane("normal vector vanishes");
    }
    return z + ((plane.offset - z.dot(plane.normal)) / nn) * plane.normal;
}

HPoint alpha_hom(const HPlane& plane) {
    const Vec4 u = normalized_input(plane.u, "alpha");
    const Vec4 x(-u.tail<3>().squaredNorm(), u[0] * u[1], u[0] * u[2], u[0] * u[3]);
    if (max_abs(x) < kExceptionalEps) {
        throw ExceptionalElement("ideal plane");
    }
    return HPoint(x);
}

HPlane alpha_star_hom(const HPoint& point) {
    const Vec4 x = normalized_input(point.x, "alpha*");
    const Vec4 u(-x.tail<3>().squaredNorm(), x[0] * x[1], x[0] * x[2], x[0] * x[3]);
    if (max_abs(u) < kExceptionalEps) {
        throw BasePoint("origin");
    }
    return HPlane(u);
}

HPoint inversion_sigma(const HPoint& point) {
    const Vec4 x = normalized_input(point.x, "sigma");
    const Vec4 y(x.tail<3>().squaredNorm(), x[0] * x[1], x[0] * x[2], x[0] * x[3]);
    if (max_abs(y) < kExceptionalEps) {
        throw BasePoint("origin");
    }
    return HPoint(y);
}

HPoint polarity_pi(const HPlane& plane) {
    return {-plane.u[0], plane.u[1], plane.u[2], plane.u[3]};
}

HPlane polarity_pi_star(const HPoint& point) {
    return {-point.x[0], point.x[1], point.x[2], point.x[3]};
}

Vec4 canonical(const Vec4& coords) {
    const double m = max_abs(coords);
    if (!(m > 0.0)) return coords;
    Vec4 c = coords / m;
    for (int i = 0; i < 4; ++i) {
        // Components below the exceptional floor count as zero for the sign rule.
        if (std::abs(c[i]) > kExceptionalEps) {
            if (c[i] < 0.0) c = -c;
            break;
        }
    }
    return c;
}

double projective_distance(const Vec4& a, const Vec4& b) {
    const Vec4 ca = canonical(a);
    const Vec4 cb = canonical(b);
    // The sign rule is unstable when the leading component sits at the floor;
    // comparing against both orientations keeps the distance continuous.
    return std::min((ca - cb).cwiseAbs().maxCoeff(), (ca + cb).cwiseAbs().maxCoeff());
}

bool projective_eq(const HPoint& a, const HPoint& b, double tol) {
    return projective_distance(a.x, b.x) <= tol;
}

bool projective_eq(const HPlane& a, const HPlane& b, double tol) {
    return projective_distance(a.u, b.u) <= tol;
}

}  // namespace pedalis
