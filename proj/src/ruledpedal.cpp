#include "pedalis/ruledpedal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "pedalis/errors.hpp"

namespace pedalis {

namespace {

constexpr double kTiny = 1e-12;

Vec3 checked_direction(const RuledChart& r, double u) {
    const Vec3 e = r.direction(u);
    if (!(e.norm() > kTiny)) throw ZeroDirection("ruling direction vanishes");
    return e;
}

// Cross products of the ruled frame: n1 = c' x e, n2 = e' x e.
struct RuledFrame {
    Vec3 c, e, cd, ed, n1, n2;
};

RuledFrame frame_at(const RuledChart& r, double u) {
    RuledFrame f;
    f.c = r.directrix(u);
    f.e = checked_direction(r, u);
    f.cd = r.directrix.derivative(u);
    f.ed = r.direction.derivative(u);
    f.n1 = f.cd.cross(f.e);
    f.n2 = f.ed.cross(f.e);
    return f;
}

bool cylindrical(const RuledFrame& f) {
    return !(f.n2.norm() > kTiny * std::max(1.0, f.ed.norm() * f.e.norm()));
}

double striction_from_frame(const RuledFrame& f) {
    if (cylindrical(f)) throw CylindricalRuling("e' x e vanishes");
    return -f.n1.dot(f.n2) / f.n2.squaredNorm();
}

Vec3 footpoint_at(const RuledChart& r, double u) {
    const Vec3 c = r.directrix(u);
    const Vec3 e = checked_direction(r, u);
    return c - (c.dot(e) / e.squaredNorm()) * e;
}

Vec3 footpoint_derivative(const RuledChart& r, double u) {
    const Vec3 c = r.directrix(u);
    const Vec3 e = checked_direction(r, u);
    const Vec3 cd = r.directrix.derivative(u);
    const Vec3 ed = r.direction.derivative(u);
    const double ee = e.squaredNorm();
    const double k = c.dot(e) / ee;
    const double kd = ((cd.dot(e) + c.dot(ed)) * ee - c.dot(e) * 2.0 * e.dot(ed)) / (ee * ee);
    return cd - kd * e - k * ed;
}

void require_non_developable(const RuledChart& r) {
    constexpr int kProbe = 100;
    double max_det = 0.0;
    double scale = 0.0;
    for (int i = 0; i < kProbe; ++i) {
        const double u = r.u0() + (r.u1() - r.u0()) * (i + 0.5) / kProbe;
        const Vec3 cd = r.directrix.derivative(u);
        const Vec3 e = r.direction(u);
        const Vec3 ed = r.direction.derivative(u);
        max_det = std::max(max_det, std::abs(cd.dot(e.cross(ed))));
        scale = std::max(scale, std::cbrt(std::max(cd.norm(), 1e-300) * e.norm() * std::max(ed.norm(), 1e-300)));
    }
    if (!(max_det > 1e-10 * scale * scale * scale)) throw DevelopableSurface("det(c', e, e') vanishes on the probe");
}

// Generic direction for the circle frame; the second is used when e is
// nearly parallel to the first.
const Vec3 kSeedA = Vec3(1.0, 2.0, 3.0).normalized();
const Vec3 kSeedB = Vec3(3.0, -1.0, 2.0).normalized();

}  // namespace

PointSurface RuledChart::surface(double v0, double v1) const {
    const RuledChart self = *this;
    const Domain dom{u0(), u1(), v0, v1};
    return {VectorChart(
        [self](double u, double v) { return self.point(u, v); }, dom,
        [self](double u, double v) { return Vec3(self.directrix.derivative(u) + v * self.direction.derivative(u)); },
        [self](double u, double) { return self.direction(u); })};
}

Vec3 PedalCircle::point(double angle) const {
    return center + radius * (std::cos(angle) * axis_a + std::sin(angle) * axis_b);
}

Vec3 ParabolicCylinder::cross_section(double v) const {
    return (1.0 - v * v * line_direction.squaredNorm() / vertex.squaredNorm()) * vertex + 2.0 * v * line_direction;
}

double ParabolicCylinder::directrix_distance(double v) const {
    const double dn = vertex.norm();
    return 2.0 * dn - cross_section(v).dot(vertex) / dn;
}

CurveChart footpoint_curve(const RuledChart& r) {
    checked_direction(r, 0.5 * (r.u0() + r.u1()));
    return CurveChart([r](double u) { return footpoint_at(r, u); }, r.u0(), r.u1(),
                      [r](double u) { return footpoint_derivative(r, u); });
}

double striction_parameter(const RuledChart& r, double u) { return striction_from_frame(frame_at(r, u)); }

CurveChart striction_curve(const RuledChart& r) {
    constexpr int kProbe = 100;
    bool any = false;
    for (int i = 0; i < kProbe && !any; ++i) {
        const double u = r.u0() + (r.u1() - r.u0()) * (i + 0.5) / kProbe;
        any = !cylindrical(frame_at(r, u));
    }
    if (!any) throw CylindricalRuling("e' x e vanishes on the whole domain");
    return CurveChart(
        [r](double u) {
            const RuledFrame f = frame_at(r, u);
            return Vec3(f.c + striction_from_frame(f) * f.e);
        },
        r.u0(), r.u1());
}

PedalCircle pedal_circle(const RuledChart& r, double u) {
    const Vec3 d = footpoint_at(r, u);
    const Vec3 e = r.direction(u);
    if (!(d.norm() > kTiny * std::max(1.0, r.directrix(u).norm()))) {
        throw LineThroughOrigin("ruling passes through the origin");
    }
    PedalCircle c;
    c.center = 0.5 * d;
    c.radius = 0.5 * d.norm();
    c.normal = e.normalized();
    const Vec3 seed = std::abs(c.normal.dot(kSeedA)) < 0.9 ? kSeedA : kSeedB;
    c.axis_a = (seed - seed.dot(c.normal) * c.normal).normalized();
    c.axis_b = c.normal.cross(c.axis_a);
    return c;
}

ConicFamily conic_family(const RuledChart& r) {
    striction_curve(r);
    ConicFamily fam;
    fam.a1 = [r](double u) {
        const RuledFrame f = frame_at(r, u);
        return (f.n1 + striction_from_frame(f) * f.n2).squaredNorm();
    };
    fam.a2 = [r](double u) {
        const RuledFrame f = frame_at(r, u);
        if (cylindrical(f)) throw CylindricalRuling("e' x e vanishes");
        return f.n2.squaredNorm();
    };
    return fam;
}

Vec3 conic_point_param(double a1, double a2, double t) {
    return {std::sqrt(a1) * (a1 + a2 * t * t), a1 - a2 * t * t, 2.0 * a1 * t};
}

std::pair<double, double> pluecker_conic_closed_form(double u, double t) {
    const double c2 = std::cos(2.0 * u);
    return {2.0 * c2 * std::cos(t) / std::sin(t), 2.0 * c2 / std::sin(t)};
}

RuledOffsetSample ruled_offset_sample(const RuledChart& r, double u, double tau) {
    const RuledFrame f = frame_at(r, u);
    const double vs = striction_from_frame(f);
    const Vec3 ns = f.n1 + vs * f.n2;
    const double a1 = ns.squaredNorm();
    const double a2 = f.n2.squaredNorm();
    if (!(a1 > kTiny * kTiny)) throw DegenerateSystem("singular point on the striction curve");
    const double t = tau * std::sqrt(a1 / a2);
    RuledOffsetSample s;
    s.conic = conic_point_param(a1, a2, t);
    const double v = s.conic[2] / s.conic[1];
    s.point = f.c + (vs + v) * f.e;
    s.normal = ns + v * f.n2;
    s.norm = s.conic[0] / s.conic[1];
    return s;
}

DualSurface rational_offset_ruled(const RuledChart& r, double d, double tau_max) {
    require_non_developable(r);
    const Domain dom{r.u0(), r.u1(), -tau_max, tau_max};
    VectorChart n([r](double u, double tau) {
        const RuledOffsetSample s = ruled_offset_sample(r, u, tau);
        return Vec3(s.normal / s.norm);
    }, dom);
    ScalarChart e([r, d](double u, double tau) {
        const RuledOffsetSample s = ruled_offset_sample(r, u, tau);
        return s.point.dot(s.normal) / s.norm + d;
    }, dom);
    return {n, e};
}

PolarSurface polar_pedal_of_ruled(const RuledChart& r, double d, double tau_max) {
    const DualSurface f = rational_offset_ruled(r, d, tau_max);
    return {f.normal, f.support};
}

AffPoint inverse_pedal_ruled(const RuledChart& r, double u, double v) {
    const Vec3 d = footpoint_at(r, u);
    const Vec3 dd = footpoint_derivative(r, u);
    const Vec3 e = r.direction(u);
    const Vec3 ed = r.direction.derivative(u);
    const Vec3 g = d + v * e;
    if (!(g.norm() > kTiny)) throw OriginOnSurface("g(u,v) is the origin");

    Eigen::Matrix3d m;
    m.row(0) = g.transpose();
    m.row(1) = (dd + v * ed).transpose();
    m.row(2) = e.transpose();
    const Vec3 rhs(d.squaredNorm() + v * v * e.squaredNorm(), 2.0 * (d.dot(dd) + v * v * e.dot(ed)),
                   2.0 * v * e.squaredNorm());
    const Eigen::JacobiSVD<Eigen::Matrix3d> svd(m);
    const Vec3 sv = svd.singularValues();
    if (!(sv[2] > 0.0) || sv[0] / sv[2] > kMaxEnvelopeCondition) {
        throw DegenerateSystem("inverse pedal system is singular");
    }
    return m.fullPivLu().solve(rhs);
}

PointSurface inverse_pedal_ruled_surface(const RuledChart& r, double v0, double v1) {
    return {VectorChart([r](double u, double v) { return inverse_pedal_ruled(r, u, v); },
                        Domain{r.u0(), r.u1(), v0, v1})};
}

ParabolicCylinder parabolic_cylinder_of_line(const Vec3& foot, const Vec3& direction) {
    if (!(direction.norm() > kTiny)) throw ZeroDirection("line direction vanishes");
    const Vec3 d = foot - (foot.dot(direction) / direction.squaredNorm()) * direction;
    if (!(d.norm() > kTiny)) throw LineThroughOrigin("line passes through the origin");
    return {d, direction, d.cross(direction)};
}

std::pair<double, double> norm_reparam_values(const RuledChart& r, double u, double tau) {
    const Vec3 d = footpoint_at(r, u);
    const Vec3 e = r.direction(u);
    const double a1 = d.squaredNorm();
    const double a2 = e.squaredNorm();
    if (!(d.norm() > kTiny)) throw LineThroughOrigin("ruling passes through the origin");
    // Conic a1 y2^2 + a2 y1^2 = y0^2: swap the roles of y1 and y2.
    const Vec3 y = conic_point_param(a1, a2, tau * std::sqrt(a1 / a2));
    return {y[2] / y[1], y[0] / y[1]};
}

PolarSurface polar_norm_reparam(const RuledChart& r, double tau_max) {
    const Domain dom{r.u0(), r.u1(), -tau_max, tau_max};
    VectorChart s([r](double u, double tau) {
        const auto [v, w] = norm_reparam_values(r, u, tau);
        return Vec3((footpoint_at(r, u) + v * r.direction(u)) / w);
    }, dom);
    ScalarChart w([r](double u, double tau) { return norm_reparam_values(r, u, tau).second; }, dom);
    return {s, w};
}

}  // namespace pedalis
