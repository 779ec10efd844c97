#pragma once

#include <functional>

#include "pedalis/surfkit.hpp"

namespace pedalis {

/// Space curve u -> R^3 on [u0, u1] with optional analytic derivative
/// (central differences, h = 1e-6 * span, otherwise).
class CurveChart {
public:
    using Fn = std::function<Vec3(double)>;

    CurveChart() = default;
    CurveChart(Fn f, double u0, double u1, Fn df = {}) : f_(std::move(f)), df_(std::move(df)), u0_(u0), u1_(u1) {}

    Vec3 operator()(double u) const { return f_(u); }
    Vec3 derivative(double u) const {
        if (df_) return df_(u);
        const double h = 1e-6 * (u1_ - u0_);
        return (f_(u + h) - f_(u - h)) / (2.0 * h);
    }
    double u0() const { return u0_; }
    double u1() const { return u1_; }

private:
    Fn f_;
    Fn df_;
    double u0_ = 0.0;
    double u1_ = 1.0;
};

/// Ruled surface f(u,v) = c(u) + v e(u).
struct RuledChart {
    CurveChart directrix;
    CurveChart direction;

    Vec3 point(double u, double v) const { return directrix(u) + v * direction(u); }
    double u0() const { return directrix.u0(); }
    double u1() const { return directrix.u1(); }

    /// The ruled surface as a point chart over [u0,u1] x [v0,v1].
    PointSurface surface(double v0, double v1) const;
};

/// Family of conics a1(u) y1^2 + a2(u) y2^2 - y0^2 = 0.
struct ConicFamily {
    std::function<double(double)> a1;
    std::function<double(double)> a2;
};

struct PedalCircle {
    Vec3 center;
    double radius = 0.0;
    /// Unit normal of the carrier plane x.e(u) = 0.
    Vec3 normal;
    /// Orthonormal frame of the carrier plane.
    Vec3 axis_a;
    Vec3 axis_b;

    Vec3 point(double angle) const;
};

/// Cylinder enveloped by the planes alpha*(X), X on one line: cross-section
/// parabola with vertex d and focus O, rulings along a = d x e.
struct ParabolicCylinder {
    Vec3 vertex;
    Vec3 line_direction;
    Vec3 ruling;

    /// (1 - v^2 e^2 / d^2) d + 2 v e
    Vec3 cross_section(double v) const;
    Vec3 point(double v, double lambda) const { return cross_section(v) + lambda * ruling; }
    /// Distance of the cross-section point from the parabola's directrix
    /// line (the plane x.d = 2 d.d).
    double directrix_distance(double v) const;
};

/// d(u) = c - (c.e / e.e) e, the feet of O on the rulings.
CurveChart footpoint_curve(const RuledChart& r);

/// v_s(u) = -((c' x e).(e' x e)) / (e' x e)^2. Throws CylindricalRuling
/// where e' x e vanishes.
double striction_parameter(const RuledChart& r, double u);
/// Throws CylindricalRuling if the ruling is cylindrical on the whole probe.
CurveChart striction_curve(const RuledChart& r);

/// Circle with diameter O D(u) in the plane x.e(u) = 0. Throws
/// LineThroughOrigin when D(u) = O.
PedalCircle pedal_circle(const RuledChart& r, double u);

/// a1 = n_s^2, a2 = n_2^2 with n_s the normal along the striction curve and
/// n_2 = e' x e.
ConicFamily conic_family(const RuledChart& r);

/// Point (y0, y1, y2) of a1 y1^2 + a2 y2^2 = y0^2, projected from the seed
/// (sqrt(a1), 1, 0): (sqrt(a1)(a1 + a2 t^2), a1 - a2 t^2, 2 a1 t).
Vec3 conic_point_param(double a1, double a2, double t);

/// Plucker-conoid closed form of the same family: r = 2 cos 2u cos t / sin t,
/// w = 2 cos 2u / sin t.
std::pair<double, double> pluecker_conic_closed_form(double u, double t);

/// Everything computed at one sample of the rational-norm offset chart.
struct RuledOffsetSample {
    Vec3 point;   ///< f(u,t) = s(u) + (y2/y1) e(u)
    Vec3 normal;  ///< n = n_s + (y2/y1) n_2, not normalized
    Vec3 conic;   ///< (y0, y1, y2)
    double norm = 0.0;  ///< y0 / y1
};

/// Sample at (u, tau); tau in (-1, 1) scales t = tau sqrt(a1/a2) so that
/// y1 > 0 on the whole chart.
RuledOffsetSample ruled_offset_sample(const RuledChart& r, double u, double tau);

/// Tangent planes E_d(u,tau): x.n/|n| = f.n/|n| + d with |n| = y0/y1.
/// Throws DevelopableSurface if det(c', e, e') vanishes on a 100-point probe.
DualSurface rational_offset_ruled(const RuledChart& r, double d, double tau_max = 0.95);

/// Polar chart (f.n/|n| + d) n/|n| of the pedal conchoid family.
PolarSurface polar_pedal_of_ruled(const RuledChart& r, double d, double tau_max = 0.95);

/// Envelope point of the planes alpha*(g(u,v)) for g = d(u) + v e(u):
///   x.(d + v e) = d^2 + v^2 e^2
///   x.(d' + v e') = 2 (d.d' + v^2 e.e')
///   x.e = 2 v e^2
AffPoint inverse_pedal_ruled(const RuledChart& r, double u, double v);
PointSurface inverse_pedal_ruled_surface(const RuledChart& r, double v0, double v1);

ParabolicCylinder parabolic_cylinder_of_line(const Vec3& foot, const Vec3& direction);

/// Polar chart g(u,tau) = d(u) + v e(u) with |g| = w rational along each
/// conic |d|^2 y2^2 + |e|^2 y1^2 = y0^2; tau in (-1, 1).
PolarSurface polar_norm_reparam(const RuledChart& r, double tau_max = 0.95);

/// Signed parameter v and norm w of polar_norm_reparam at (u, tau).
std::pair<double, double> norm_reparam_values(const RuledChart& r, double u, double tau);

}  // namespace pedalis
