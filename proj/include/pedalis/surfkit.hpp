#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "pedalis/kernels.hpp"
#include "pedalis/projmaps.hpp"

namespace pedalis {

/// Smooth map (u,v) -> T on a parameter rectangle, with optional analytic
/// partials. Without them, central differences with step
/// 1e-6 * (domain span) are used.
template <typename T>
class Chart {
public:
    using Fn = std::function<T(double, double)>;
    using PolePredicate = std::function<bool(double, double)>;

    Chart() = default;
    Chart(Fn f, Domain dom, Fn du = {}, Fn dv = {})
        : f_(std::move(f)), du_(std::move(du)), dv_(std::move(dv)), dom_(dom) {}

    T operator()(double u, double v) const { return f_(u, v); }

    T du(double u, double v) const {
        if (du_) return du_(u, v);
        const double h = 1e-6 * dom_.u_span();
        return T((f_(u + h, v) - f_(u - h, v)) / (2.0 * h));
    }

    T dv(double u, double v) const {
        if (dv_) return dv_(u, v);
        const double h = 1e-6 * dom_.v_span();
        return T((f_(u, v + h) - f_(u, v - h)) / (2.0 * h));
    }

    bool has_analytic_partials() const { return static_cast<bool>(du_) && static_cast<bool>(dv_); }
    const Domain& domain() const { return dom_; }
    explicit operator bool() const { return static_cast<bool>(f_); }

    /// Marks parameters within the pole neighbourhood; samplers drop them.
    Chart& with_poles(PolePredicate p) {
        pole_ = std::move(p);
        return *this;
    }
    bool near_pole(double u, double v) const { return pole_ && pole_(u, v); }
    const PolePredicate& poles() const { return pole_; }

private:
    Fn f_;
    Fn du_;
    Fn dv_;
    Domain dom_;
    PolePredicate pole_;
};

using ScalarChart = Chart<double>;
using VectorChart = Chart<Vec3>;

/// Two-parameter family of planes n(u,v).x = e(u,v).
struct DualSurface {
    VectorChart normal;
    ScalarChart support;

    AffPlane plane(double u, double v) const { return {normal(u, v), support(u, v)}; }
    const Domain& domain() const { return normal.domain(); }
    bool near_pole(double u, double v) const { return normal.near_pole(u, v) || support.near_pole(u, v); }
};

/// Polar representation g = r(u,v) s(u,v) with |s| = 1.
struct PolarSurface {
    VectorChart direction;
    ScalarChart radius;

    AffPoint point(double u, double v) const { return radius(u, v) * direction(u, v); }
    const Domain& domain() const { return direction.domain(); }
    bool near_pole(double u, double v) const { return direction.near_pole(u, v) || radius.near_pole(u, v); }
};

/// Point-valued chart f(u,v).
struct PointSurface {
    VectorChart chart;

    AffPoint point(double u, double v) const { return chart(u, v); }
    const Domain& domain() const { return chart.domain(); }
    bool near_pole(double u, double v) const { return chart.near_pole(u, v); }
};

/// Tolerance on |n| = 1 for unit-vector charts.
inline constexpr double kUnitTolerance = 1e-9;
/// Envelope solves with a larger condition number are rejected.
inline constexpr double kMaxEnvelopeCondition = 1e12;

/// Tangent planes (n, e) with unit n. Throws NonUnitNormal when a probe
/// sample of n is not unit length.
DualSurface phi(VectorChart n, ScalarChart e);
/// Points r s with unit s.
PolarSurface gamma(VectorChart s, ScalarChart r);

DualSurface offset_map(const DualSurface& f, double d);
PolarSurface conchoid_map(const PolarSurface& g, double d);

PointSurface to_points(const PolarSurface& g);

/// Envelope point at (u,v): solves n.x = e, n_u.x = e_u, n_v.x = e_v.
/// Throws DegenerateEnvelope when the system is singular or too
/// ill-conditioned.
AffPoint envelope_solve(const DualSurface& f, double u, double v);

/// Envelope surface of the plane family.
PointSurface envelope_surface(const DualSurface& f);

/// Pedal surface: alpha applied to every plane of the family.
PointSurface dual_to_point(const DualSurface& f);
/// alpha* applied pointwise. For a polar chart this is phi(s, r).
DualSurface point_to_dual(const PointSurface& g);
DualSurface point_to_dual(const PolarSurface& g);

/// Tangent planes of a point chart: n = g_u x g_v normalized, e = g.n.
DualSurface tangent_planes(const PointSurface& g);

struct CommutationReport {
    /// max |alpha(o*_d(phi(n,e))) - c_d(alpha(phi(n,e)))| over the grid.
    double pedal_deviation = 0.0;
    /// max projective distance between alpha*(c_d(gamma(n,e))) and o*_d(phi(n,e)).
    double inverse_deviation = 0.0;
    std::size_t samples = 0;
};

/// Checks both commuting squares of the offset/conchoid correspondence
/// on a grid.
CommutationReport commutation_check(const VectorChart& n, const ScalarChart& e, double d, const Grid& grid);
CommutationReport commutation_check_serial(const VectorChart& n, const ScalarChart& e, double d, const Grid& grid);

struct Mesh {
    std::vector<Vec3> vertices;
    /// 0-based vertex indices.
    std::vector<std::array<std::size_t, 3>> triangles;
};

/// Grid-sampled mesh with each parameter quad split into two triangles.
/// Invalid samples (poles, exceptional inputs, non-finite values) are
/// dropped and faces touching them skipped. Throws EmptyMesh if nothing
/// survives, UsageError if nu or nv < 2.
Mesh sample_mesh(const PointSurface& s, int nu, int nv);
Mesh sample_mesh_serial(const PointSurface& s, int nu, int nv);

/// Wavefront OBJ: `v x y z` lines then `f a b c` with 1-based indices.
void write_obj(const Mesh& mesh, std::ostream& os);

/// Homogeneous point chart of a surface (x0 = 1), with poles dropped.
HomChart homogeneous_points(const PointSurface& s);
HomChart homogeneous_points(const PolarSurface& s);
/// Homogeneous plane chart R(-e, n).
HomChart homogeneous_planes(const DualSurface& s);

}  // namespace pedalis
