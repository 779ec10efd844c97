#include "pedalis/surfkit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "pedalis/errors.hpp"

namespace pedalis {

namespace {

void require_unit(const VectorChart& n, const char* what) {
    const Domain& dom = n.domain();
    constexpr int kProbe = 8;
    for (int i = 1; i <= kProbe; ++i) {
        for (int j = 1; j <= kProbe; ++j) {
            const double u = dom.u0 + dom.u_span() * i / (kProbe + 1);
            const double v = dom.v0 + dom.v_span() * j / (kProbe + 1);
            if (n.near_pole(u, v)) continue;
            Vec3 value;
            try {
                value = n(u, v);
            } catch (const GeometryError&) {
                continue;
            }
            if (!value.allFinite()) continue;
            if (std::abs(value.norm() - 1.0) > kUnitTolerance) {
                throw NonUnitNormal(std::string(what) + " chart has |n| = " + std::to_string(value.norm()));
            }
        }
    }
}

ScalarChart shifted(const ScalarChart& e, double d) {
    ScalarChart out(
        [e, d](double u, double v) { return e(u, v) + d; }, e.domain(),
        [e](double u, double v) { return e.du(u, v); }, [e](double u, double v) { return e.dv(u, v); });
    out.with_poles(e.poles());
    return out;
}

Chart<Vec3>::PolePredicate either(const Chart<Vec3>::PolePredicate& a, const Chart<Vec3>::PolePredicate& b) {
    if (!a) return b;
    if (!b) return a;
    return [a, b](double u, double v) { return a(u, v) || b(u, v); };
}

struct SecondPartials {
    Vec3 uu;
    Vec3 uv;
    Vec3 vv;
};

SecondPartials second_partials(const VectorChart& g, double u, double v) {
    const Domain& dom = g.domain();
    if (g.has_analytic_partials()) {
        const double hu = 1e-6 * dom.u_span();
        const double hv = 1e-6 * dom.v_span();
        return {(g.du(u + hu, v) - g.du(u - hu, v)) / (2 * hu), (g.du(u, v + hv) - g.du(u, v - hv)) / (2 * hv),
                (g.dv(u, v + hv) - g.dv(u, v - hv)) / (2 * hv)};
    }
    // Second-order stencils directly on g; a larger step balances roundoff.
    const double hu = 1e-4 * dom.u_span();
    const double hv = 1e-4 * dom.v_span();
    const Vec3 c = g(u, v);
    return {(g(u + hu, v) - 2 * c + g(u - hu, v)) / (hu * hu),
            (g(u + hu, v + hv) - g(u + hu, v - hv) - g(u - hu, v + hv) + g(u - hu, v - hv)) / (4 * hu * hv),
            (g(u, v + hv) - 2 * c + g(u, v - hv)) / (hv * hv)};
}

}  // namespace

DualSurface phi(VectorChart n, ScalarChart e) {
    require_unit(n, "normal");
    return {std::move(n), std::move(e)};
}

PolarSurface gamma(VectorChart s, ScalarChart r) {
    require_unit(s, "direction");
    return {std::move(s), std::move(r)};
}

DualSurface offset_map(const DualSurface& f, double d) { return {f.normal, shifted(f.support, d)}; }

PolarSurface conchoid_map(const PolarSurface& g, double d) { return {g.direction, shifted(g.radius, d)}; }

PointSurface to_points(const PolarSurface& g) {
    const VectorChart s = g.direction;
    const ScalarChart r = g.radius;
    VectorChart c([s, r](double u, double v) -> Vec3 { return r(u, v) * s(u, v); }, s.domain(),
                  [s, r](double u, double v) -> Vec3 { return r.du(u, v) * s(u, v) + r(u, v) * s.du(u, v); },
                  [s, r](double u, double v) -> Vec3 { return r.dv(u, v) * s(u, v) + r(u, v) * s.dv(u, v); });
    c.with_poles(either(s.poles(), r.poles()));
    return {c};
}

AffPoint envelope_solve(const DualSurface& f, double u, double v) {
    Eigen::Matrix3d m;
    m.row(0) = f.normal(u, v).transpose();
    m.row(1) = f.normal.du(u, v).transpose();
    m.row(2) = f.normal.dv(u, v).transpose();
    const Vec3 rhs(f.support(u, v), f.support.du(u, v), f.support.dv(u, v));
    if (!m.allFinite() || !rhs.allFinite()) throw DegenerateEnvelope("non-finite plane family data");

    const Eigen::JacobiSVD<Eigen::Matrix3d> svd(m);
    const Vec3 sv = svd.singularValues();
    if (!(sv[2] > 0.0) || sv[0] / sv[2] > kMaxEnvelopeCondition) {
        throw DegenerateEnvelope("plane family matrix (n, n_u, n_v) is singular");
    }
    return m.fullPivLu().solve(rhs);
}

PointSurface envelope_surface(const DualSurface& f) {
    VectorChart c([f](double u, double v) { return envelope_solve(f, u, v); }, f.domain());
    c.with_poles([f](double u, double v) { return f.near_pole(u, v); });
    return {c};
}

PointSurface dual_to_point(const DualSurface& f) {
    VectorChart c([f](double u, double v) { return alpha_affine(f.plane(u, v)); }, f.domain());
    c.with_poles([f](double u, double v) { return f.near_pole(u, v); });
    return {c};
}

DualSurface point_to_dual(const PointSurface& g) {
    const VectorChart p = g.chart;
    VectorChart n(
        [p](double u, double v) -> Vec3 {
            const Vec3 x = p(u, v);
            if (!(x.norm() >= kExceptionalEps)) throw OriginPoint("surface passes through O");
            return x;
        },
        p.domain(), [p](double u, double v) { return p.du(u, v); }, [p](double u, double v) { return p.dv(u, v); });
    ScalarChart e([p](double u, double v) { return p(u, v).squaredNorm(); }, p.domain(),
                  [p](double u, double v) { return 2.0 * p(u, v).dot(p.du(u, v)); },
                  [p](double u, double v) { return 2.0 * p(u, v).dot(p.dv(u, v)); });
    n.with_poles(p.poles());
    e.with_poles(p.poles());
    return {n, e};
}

DualSurface point_to_dual(const PolarSurface& g) {
    const ScalarChart r = g.radius;
    ScalarChart checked(
        [r](double u, double v) {
            const double value = r(u, v);
            if (!(std::abs(value) >= kExceptionalEps)) throw OriginPoint("polar radius vanishes");
            return value;
        },
        r.domain(), [r](double u, double v) { return r.du(u, v); }, [r](double u, double v) { return r.dv(u, v); });
    checked.with_poles(r.poles());
    return {g.direction, checked};
}

DualSurface tangent_planes(const PointSurface& g) {
    const VectorChart p = g.chart;
    auto unit_normal = [p](double u, double v) -> Vec3 {
        const Vec3 nn = p.du(u, v).cross(p.dv(u, v));
        const double len = nn.norm();
        if (!(len > 0.0)) throw DegenerateEnvelope("singular point of the chart");
        return nn / len;
    };
    // d/du of N/|N| with N = g_u x g_v: (N_u - n (n.N_u)) / |N|.
    auto normal_partial = [p, unit_normal](double u, double v, bool along_u) -> Vec3 {
        const Vec3 gu = p.du(u, v);
        const Vec3 gv = p.dv(u, v);
        const SecondPartials s = second_partials(p, u, v);
        const Vec3 nn = gu.cross(gv);
        const Vec3 dn = along_u ? Vec3(s.uu.cross(gv) + gu.cross(s.uv)) : Vec3(s.uv.cross(gv) + gu.cross(s.vv));
        const Vec3 n = unit_normal(u, v);
        return (dn - n * n.dot(dn)) / nn.norm();
    };
    VectorChart n(unit_normal, p.domain(),
                  [normal_partial](double u, double v) { return normal_partial(u, v, true); },
                  [normal_partial](double u, double v) { return normal_partial(u, v, false); });
    ScalarChart e([p, unit_normal](double u, double v) { return p(u, v).dot(unit_normal(u, v)); }, p.domain(),
                  [p, normal_partial](double u, double v) { return p(u, v).dot(normal_partial(u, v, true)); },
                  [p, normal_partial](double u, double v) { return p(u, v).dot(normal_partial(u, v, false)); });
    n.with_poles(p.poles());
    e.with_poles(p.poles());
    return {n, e};
}

// ---------------------------------------------------------------------------
// Commuting diagrams

namespace {

GridMeasure pedal_square(const VectorChart& n, const ScalarChart& e, double d) {
    return [n, e, d](double u, double v) -> std::optional<double> {
        if (n.near_pole(u, v) || e.near_pole(u, v)) return std::nullopt;
        const Vec3 nv = n(u, v);
        const double ev = e(u, v);
        // alpha after the offset map, in homogeneous form.
        const AffPoint top = alpha_hom(AffPlane(nv, ev + d).homogeneous()).dehomogenize();
        // conchoid map after alpha, via the polar decomposition along n.
        const AffPoint foot = alpha_affine(AffPlane(nv, ev));
        const double radius = foot.dot(nv);
        const AffPoint bottom = (radius + d) * nv;
        return (top - bottom).norm();
    };
}

GridMeasure inverse_square(const VectorChart& n, const ScalarChart& e, double d) {
    return [n, e, d](double u, double v) -> std::optional<double> {
        if (n.near_pole(u, v) || e.near_pole(u, v)) return std::nullopt;
        const Vec3 nv = n(u, v);
        const double ev = e(u, v);
        // alpha* after the conchoid map.
        const AffPoint conchoid_point = (ev + d) * nv;
        const HPlane left = alpha_star_hom(HPoint::from_affine(conchoid_point));
        // offset map after alpha* = phi.
        const AffPlane base = alpha_star_affine(ev * nv);
        const AffPlane shifted_plane(base.normal / ev, base.offset / ev + d);
        return projective_distance(left.u, shifted_plane.homogeneous().u);
    };
}

}  // namespace

CommutationReport commutation_check(const VectorChart& n, const ScalarChart& e, double d, const Grid& grid) {
    const ResidualReport a = summarize(measure_grid(pedal_square(n, e, d), n.domain(), grid));
    const ResidualReport b = summarize(measure_grid(inverse_square(n, e, d), n.domain(), grid));
    return {a.max, b.max, std::min(a.samples, b.samples)};
}

CommutationReport commutation_check_serial(const VectorChart& n, const ScalarChart& e, double d, const Grid& grid) {
    const ResidualReport a = summarize(measure_grid_serial(pedal_square(n, e, d), n.domain(), grid));
    const ResidualReport b = summarize(measure_grid_serial(inverse_square(n, e, d), n.domain(), grid));
    return {a.max, b.max, std::min(a.samples, b.samples)};
}

// ---------------------------------------------------------------------------
// Meshes

HomChart homogeneous_points(const PointSurface& s) {
    return [s](double u, double v) -> std::optional<Vec4> {
        if (s.near_pole(u, v)) return std::nullopt;
        const Vec3 p = s.point(u, v);
        return Vec4(1.0, p.x(), p.y(), p.z());
    };
}

HomChart homogeneous_points(const PolarSurface& s) {
    return [s](double u, double v) -> std::optional<Vec4> {
        if (s.near_pole(u, v)) return std::nullopt;
        const Vec3 p = s.point(u, v);
        return Vec4(1.0, p.x(), p.y(), p.z());
    };
}

HomChart homogeneous_planes(const DualSurface& s) {
    return [s](double u, double v) -> std::optional<Vec4> {
        if (s.near_pole(u, v)) return std::nullopt;
        return s.plane(u, v).homogeneous().u;
    };
}

namespace {

Mesh assemble(const std::vector<std::optional<Vec4>>& samples, int nu, int nv) {
    Mesh mesh;
    std::vector<std::size_t> index(samples.size(), 0);
    std::vector<bool> valid(samples.size(), false);
    for (std::size_t k = 0; k < samples.size(); ++k) {
        if (!samples[k]) continue;
        valid[k] = true;
        index[k] = mesh.vertices.size();
        mesh.vertices.push_back(samples[k]->tail<3>());
    }
    if (mesh.vertices.empty()) throw EmptyMesh("every sample of the grid is invalid");

    auto at = [nv](int i, int j) { return static_cast<std::size_t>(i) * static_cast<std::size_t>(nv) + j; };
    auto emit = [&](std::size_t a, std::size_t b, std::size_t c) {
        if (valid[a] && valid[b] && valid[c]) mesh.triangles.push_back({index[a], index[b], index[c]});
    };
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j + 1 < nv; ++j) {
            emit(at(i, j), at(i + 1, j), at(i + 1, j + 1));
            emit(at(i, j), at(i + 1, j + 1), at(i, j + 1));
        }
    }
    return mesh;
}

void check_grid(int nu, int nv) {
    if (nu < 2 || nv < 2) throw UsageError("mesh grids need at least 2x2 samples");
}

}  // namespace

Mesh sample_mesh(const PointSurface& s, int nu, int nv) {
    check_grid(nu, nv);
    return assemble(sample_grid(homogeneous_points(s), s.domain(), {nu, nv}), nu, nv);
}

Mesh sample_mesh_serial(const PointSurface& s, int nu, int nv) {
    check_grid(nu, nv);
    return assemble(sample_grid_serial(homogeneous_points(s), s.domain(), {nu, nv}), nu, nv);
}

void write_obj(const Mesh& mesh, std::ostream& os) {
    os << std::setprecision(17);
    for (const auto& v : mesh.vertices) os << "v " << v.x() << ' ' << v.y() << ' ' << v.z() << '\n';
    for (const auto& t : mesh.triangles) os << "f " << t[0] + 1 << ' ' << t[1] + 1 << ' ' << t[2] + 1 << '\n';
}

}  // namespace pedalis
