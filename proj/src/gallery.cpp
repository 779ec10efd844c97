#include "pedalis/gallery.hpp"

#include <cmath>
#include <numbers>

#include "pedalis/errors.hpp"
#include "pedalis/quadricpedal.hpp"
#include "pedalis/ruledpedal.hpp"
#include "pedalis/sphereatlas.hpp"

namespace pedalis {

namespace {

constexpr double kPi = std::numbers::pi;

std::string q(const Rational& r) { return "(" + r.get_str() + ")"; }

HomPoly4 P(const std::string& text) { return parse_poly(text, Space::Point); }
HomPoly4 D(const std::string& text) { return parse_poly(text, Space::Dual); }

std::string dkey(const std::string& base, const Rational& d) { return base + "[d=" + d.get_str() + "]"; }

/// Unit-vector/length split (g/|g|, |g|) of a point chart.
std::pair<VectorChart, ScalarChart> polar_split(const PointSurface& g) {
    const VectorChart p = g.chart;
    VectorChart n([p](double u, double v) {
        const Vec3 x = p(u, v);
        if (!(x.norm() >= kExceptionalEps)) throw OriginPoint("surface passes through O");
        return Vec3(x / x.norm());
    }, p.domain());
    ScalarChart e([p](double u, double v) { return p(u, v).norm(); }, p.domain());
    return {n, e};
}

// z = 1 as conchoid base, its inverse pedal x^2 + y^2 + 4z = 4.
GalleryEntry plane_conchoid() {
    GalleryEntry g;
    g.name = "plane-conchoid";
    g.summary = "plane z=1 and its conchoids; inverse pedal is the paraboloid x^2+y^2+4z=4 and its offsets";
    const Domain dom{-kPi, kPi, 0.2, 1.4};
    g.normal = trig_s2(dom);
    g.support = ScalarChart([](double, double v) { return 1.0 / std::sin(v); }, dom, [](double, double) { return 0.0; },
                            [](double, double v) { return -std::cos(v) / (std::sin(v) * std::sin(v)); });
    g.support.with_poles([](double, double v) { return std::abs(std::sin(v)) < 1e-9; });
    g.surface = to_points(gamma(g.normal, g.support));
    g.diagram_family = true;

    g.polynomials["G"] = P("x3 - x0");
    g.polynomials["F*"] = D("u1^2 + u2^2 + u3^2 + u0*u3");
    g.polynomials["F"] = P("x1^2 + x2^2 + 4*x0*x3 - 4*x0^2");
    g.checks.push_back({"G polar chart", Space::Point, point_chart(gamma(g.normal, g.support)), "G", dom});
    g.checks.push_back({"F* tangent planes", Space::Dual, plane_chart(phi(g.normal, g.support)), "F*", dom});
    g.checks.push_back({"F envelope", Space::Point, point_chart(envelope_surface(phi(g.normal, g.support))), "F", dom});
    g.pairs.push_back({"F*", "G"});
    g.degrees.push_back({"F*", {2, 1, 1, 1}});

    for (const Rational& d : {Rational(7, 10), Rational(1, 2)}) {
        const std::string gd = dkey("G_d", d), fd = dkey("F*_d", d);
        g.polynomials[gd] = P(q(d) + "^2*x0^2*x3^2 - (x1^2+x2^2+x3^2)*(x0-x3)^2");
        g.polynomials[fd] = D(q(d) + "^2*u3^2*(u1^2+u2^2+u3^2) - (u1^2+u2^2+u3^2+u0*u3)^2");
        g.checks.push_back({"G_d polar chart d=" + d.get_str(), Space::Point, point_chart(g.conchoid(d.get_d())), gd, dom});
        g.checks.push_back({"F_d tangent planes d=" + d.get_str(), Space::Dual, plane_chart(g.offset(d.get_d())), fd, dom});
        g.pairs.push_back({fd, gd});
    }
    return g;
}

// Sphere (x-m)^2 + y^2 + z^2 = R^2 with m = 1/2, R = 1.
GalleryEntry sphere_offset() {
    GalleryEntry g;
    g.name = "sphere-offset";
    g.summary = "sphere with center (1/2,0,0), radius 1; offsets are spheres, pedal conchoids are quartics";
    const Rational m(1, 2), R(1);
    const Domain dom{-kPi, kPi, -1.4, 1.4};
    const double md = m.get_d(), Rd = R.get_d();
    g.normal = trig_s2(dom);
    g.support = ScalarChart([md, Rd](double u, double v) { return md * std::cos(u) * std::cos(v) + Rd; }, dom,
                            [md](double u, double v) { return -md * std::sin(u) * std::cos(v); },
                            [md](double u, double v) { return -md * std::cos(u) * std::sin(v); });
    g.surface = envelope_surface(phi(g.normal, g.support));
    g.diagram_family = true;

    for (const Rational& d : {Rational(0), Rational(1, 2), Rational(2)}) {
        const Rational Rd2 = (R + d) * (R + d);
        const std::string fd = dkey("F*_d", d), gd = dkey("G_d", d), pd = dkey("F_d", d);
        g.polynomials[fd] = D(q(Rd2 - m * m) + "*u1^2 + " + q(Rd2) + "*(u2^2+u3^2) - 2*" + q(m) + "*u0*u1 - u0^2");
        g.polynomials[gd] = P("x0^2*(x1^2*" + q(Rd2 - m * m) + " + " + q(Rd2) + "*(x2^2+x3^2)) + 2*" + q(m) +
                              "*x0*x1*(x1^2+x2^2+x3^2) - (x1^2+x2^2+x3^2)^2");
        g.polynomials[pd] = P("(x1 - " + q(m) + "*x0)^2 + x2^2 + x3^2 - " + q(Rd2) + "*x0^2");
        g.checks.push_back({"F_d tangent planes d=" + d.get_str(), Space::Dual, plane_chart(g.offset(d.get_d())), fd, dom});
        g.checks.push_back({"G_d polar chart d=" + d.get_str(), Space::Point, point_chart(g.conchoid(d.get_d())), gd, dom});
        g.checks.push_back({"F_d envelope d=" + d.get_str(), Space::Point,
                            point_chart(envelope_surface(g.offset(d.get_d()))), pd, dom});
        g.pairs.push_back({fd, gd});
    }
    g.degrees.push_back({dkey("F*_d", 0), {2, 0, 0, 4}});
    return g;
}

// z = a u^2/2 + b v^2/2 + c with a = b = c = 1.
GalleryEntry paraboloid_offset() {
    GalleryEntry g;
    g.name = "paraboloid-offset";
    g.summary = "paraboloid z=(x^2+y^2)/2+1 in rational-norm parameters, its offsets and pedal cyclides";
    const Rational a(1), b(1), c(1);
    const Domain dom{-kPi, kPi, 0.3, 2.8};
    const auto [dual, polar] = paraboloid_offset_chart(a.get_d(), b.get_d(), c.get_d(), 0.0, dom);
    g.normal = dual.normal;
    g.support = dual.support;
    g.surface = envelope_surface(dual);
    g.diagram_family = true;

    g.polynomials["F*"] = D(q(-2 * a * b) + "*u0*u3 + " + q(b) + "*u1^2 + " + q(a) + "*u2^2 - " + q(2 * a * b * c) + "*u3^2");
    g.polynomials["F"] = P(q(a / 2) + "*x1^2 + " + q(b / 2) + "*x2^2 + " + q(c) + "*x0^2 - x0*x3");
    g.polynomials["G"] = P(q(2 * a * b) + "*x3*(x1^2+x2^2+x3^2) + x0*(" + q(b) + "*x1^2 + " + q(a) + "*x2^2 - " +
                           q(2 * a * b * c) + "*x3^2)");
    g.checks.push_back({"F* tangent planes", Space::Dual, plane_chart(dual), "F*", dom});
    g.checks.push_back({"F envelope", Space::Point, point_chart(g.surface), "F", dom});
    g.checks.push_back({"G polar chart", Space::Point, point_chart(polar), "G", dom});
    g.pairs.push_back({"F*", "G"});
    g.degrees.push_back({"F*", {2, 1, 0, 3}});

    const Rational d(1, 2);
    const std::string fd = dkey("F*_d", d), gd = dkey("G_d", d);
    g.polynomials[fd] = two_sided_offset(g.polynomials["F*"], d);
    g.polynomials[gd] = strip_exceptional(pedal_pullback(g.polynomials[fd])).reduced;
    g.checks.push_back({"F_d tangent planes d=1/2", Space::Dual, plane_chart(g.offset(d.get_d())), fd, dom});
    g.checks.push_back({"G_d polar chart d=1/2", Space::Point, point_chart(g.conchoid(d.get_d())), gd, dom});
    g.pairs.push_back({fd, gd});
    return g;
}

RuledChart pluecker_ruled(double u0, double u1) {
    CurveChart c([](double u) { return Vec3(0.0, 0.0, std::sin(2.0 * u)); }, u0, u1,
                 [](double u) { return Vec3(0.0, 0.0, 2.0 * std::cos(2.0 * u)); });
    CurveChart e([](double u) { return Vec3(std::cos(u), std::sin(u), 0.0); }, u0, u1,
                 [](double u) { return Vec3(-std::sin(u), std::cos(u), 0.0); });
    return {c, e};
}

Vec3 pluecker_conchoid_point(double u, double v, double d) {
    const double su = std::sin(u), cu = std::cos(u), sv = std::sin(v), cv = std::cos(v);
    const Vec3 a(2.0 * su * cv * cv * sv / cu, 2.0 * su * cv * sv * sv / cu, 2.0 * cv * sv);
    const double norm = 2.0 * cv * sv / cu;
    return a + d * a / norm;
}

GalleryEntry pluecker() {
    GalleryEntry g;
    g.name = "pluecker";
    g.summary = "Pluecker's conoid: offsets of class six, pedal quartic, conchoids of degree eight";
    const RuledChart r = pluecker_ruled(-0.7, 0.7);
    const DualSurface base = rational_offset_ruled(r, 0.0);
    g.normal = base.normal;
    g.support = base.support;
    const Domain fdom{-kPi, kPi, -2.0, 2.0};
    g.surface = {VectorChart([](double u, double rr) { return Vec3(rr * std::cos(u), rr * std::sin(u), std::sin(2.0 * u)); },
                             fdom)};

    g.polynomials["F"] = P("x3*(x1^2+x2^2) - 2*x0*x1*x2");
    g.polynomials["F*"] = D("u0*(u1^2+u2^2) - 2*u1*u2*u3");
    g.polynomials["G"] = P("2*x0*x1*x2*x3 + (x1^2+x2^2)*(x1^2+x2^2+x3^2)");
    g.polynomials["A"] = g.polynomials["F"];
    g.polynomials["B*"] = D("u0*u3*(u1^2+u2^2) + 2*u1*u2*(u1^2+u2^2+u3^2)");

    const Domain tdom{-kPi, kPi, -kPi, kPi};
    const Domain adom{-1.3, 1.3, 0.15, 1.4};
    g.checks.push_back({"F chart f(r,u)", Space::Point, point_chart(g.surface), "F", fdom});
    g.checks.push_back({"F* planes E(r,u)", Space::Dual,
                        [](double u, double rr) -> std::optional<Vec4> {
                            const double c2 = std::cos(2.0 * u);
                            return Vec4(rr * std::sin(2.0 * u), -2.0 * std::sin(u) * c2, 2.0 * std::cos(u) * c2, -rr);
                        },
                        "F*", fdom});
    g.checks.push_back({"G pedal of rational offset chart", Space::Point, point_chart(polar_pedal_of_ruled(r, 0.0)), "G",
                        base.domain()});
    g.checks.push_back({"A conchoid chart a(u,v)", Space::Point,
                        [](double u, double v) -> std::optional<Vec4> {
                            const Vec3 p = pluecker_conchoid_point(u, v, 0.0);
                            return Vec4(1.0, p.x(), p.y(), p.z());
                        },
                        "A", adom});
    g.checks.push_back({"B* planes alpha*(a)", Space::Dual,
                        inverse_pedal_chart([](double u, double v) -> std::optional<Vec4> {
                            const Vec3 p = pluecker_conchoid_point(u, v, 0.0);
                            return Vec4(1.0, p.x(), p.y(), p.z());
                        }),
                        "B*", adom});
    g.pairs.push_back({"F*", "G"});
    g.pairs.push_back({"B*", "A"});
    g.degrees.push_back({"F*", {3, 2, 0, 4}});
    g.degrees.push_back({"B*", {4, 3, 1, 3}});

    for (const Rational& d : {Rational(1, 2), Rational(1)}) {
        const std::string fd = dkey("F*_d", d), gd = dkey("G_d", d), ad = dkey("A_d", d), bd = dkey("B*_d", d);
        const std::string dd = q(d);
        g.polynomials[fd] = D(dd + "^2*(u1^2+u2^2)^2*(u1^2+u2^2+u3^2) - (u0*(u1^2+u2^2) - 2*u1*u2*u3)^2");
        g.polynomials[gd] = P(dd + "^2*x0^2*(x1^2+x2^2)^2*(x1^2+x2^2+x3^2) - (2*x0*x1*x2*x3 + (x1^2+x2^2)*(x1^2+x2^2+x3^2))^2");
        g.polynomials[ad] = P(dd + "^2*(x1^2+x2^2)^2*x0^2*x3^2 - (x1^2+x2^2+x3^2)*(x3*(x1^2+x2^2) - 2*x0*x1*x2)^2");
        g.polynomials[bd] = D(dd + "^2*u3^2*(u1^2+u2^2)^2*(u1^2+u2^2+u3^2) - (u0*u3*(u1^2+u2^2) + 2*u1*u2*(u1^2+u2^2+u3^2))^2");

        const double dv = d.get_d();
        const HomChart closed = [dv](double u, double t) -> std::optional<Vec4> {
            return Vec4(-std::cos(t) * std::sin(2.0 * u) - dv, -std::sin(u) * std::sin(t), std::cos(u) * std::sin(t),
                        std::cos(t));
        };
        const HomChart conchoid = [dv](double u, double v) -> std::optional<Vec4> {
            const Vec3 p = pluecker_conchoid_point(u, v, dv);
            return Vec4(1.0, p.x(), p.y(), p.z());
        };
        const std::string ds = " d=" + d.get_str();
        g.checks.push_back({"F*_d closed-form planes E_d(u,t)" + ds, Space::Dual, closed, fd, tdom});
        g.checks.push_back({"F*_d rational offset chart" + ds, Space::Dual, plane_chart(rational_offset_ruled(r, dv)), fd,
                            base.domain()});
        g.checks.push_back({"G_d pedal of closed form" + ds, Space::Point, pedal_chart(closed), gd, tdom});
        g.checks.push_back({"G_d polar pedal chart" + ds, Space::Point, point_chart(polar_pedal_of_ruled(r, dv)), gd,
                            base.domain()});
        g.checks.push_back({"A_d conchoid chart" + ds, Space::Point, conchoid, ad, adom});
        g.checks.push_back({"B*_d planes alpha*(a_d)" + ds, Space::Dual, inverse_pedal_chart(conchoid), bd, adom});
        g.pairs.push_back({fd, gd});
        g.pairs.push_back({bd, ad});
    }
    return g;
}

// Parabola (u, 0, a u^2/2 + c) with a = 1, c = 1.
GalleryEntry parabola() {
    GalleryEntry g;
    g.name = "parabola";
    g.summary = "parabola as singular dual quadric; pedal is a parabolic Darboux cyclide, offsets are pipe surfaces";
    const Rational a(1), c(1);
    const double ad = a.get_d(), cd = c.get_d();
    const Domain dom{-kPi, kPi, 0.2, kPi - 0.2};
    g.normal = VectorChart(
        [](double s, double t) { return Vec3(std::cos(s) * std::cos(t), std::sin(s) * std::cos(t), std::sin(t)); }, dom);
    g.support = ScalarChart([ad, cd](double s, double t) {
        const double cs = std::cos(s), ct = std::cos(t), st = std::sin(t);
        return -(cs * cs * ct * ct - 2.0 * ad * cd * st * st) / (2.0 * ad * st);
    }, dom);
    g.surface = {VectorChart([ad, cd](double u, double) { return Vec3(u, 0.0, 0.5 * ad * u * u + cd); }, {-2, 2, 0, 1})};

    g.polynomials["F*"] = D("u1^2 - 2*" + q(a) + "*u0*u3 - 2*" + q(a * c) + "*u3^2");
    g.polynomials["G"] = P("x0*(x1^2 - 2*" + q(a * c) + "*x3^2) + 2*" + q(a) + "*x3*(x1^2+x2^2+x3^2)");
    const Domain edom{-2.0, 2.0, -2.0, 2.0};
    const HomChart planes = [ad, cd](double u, double v) -> std::optional<Vec4> {
        return Vec4(-0.5 * ad * u * u + cd, ad * u, v, -1.0);
    };
    g.checks.push_back({"F* planes E(u,v)", Space::Dual, planes, "F*", edom});
    g.checks.push_back({"G pedal of E(u,v)", Space::Point, pedal_chart(planes), "G", edom});
    g.checks.push_back({"G polar chart", Space::Point, point_chart(gamma(g.normal, g.support)), "G", dom});
    g.pairs.push_back({"F*", "G"});
    g.degrees.push_back({"F*", {2, 1, 0, 3}});

    const Rational d(1, 2);
    const std::string fd = dkey("F*_d", d), gd = dkey("G_d", d);
    g.polynomials[fd] = D("-4*" + q(a * a * d * d) + "*u3^2*(u1^2+u2^2+u3^2) + (u1^2 - 2*" + q(a) + "*u0*u3 - 2*" +
                          q(a * c) + "*u3^2)^2");
    g.polynomials[gd] = P("-4*" + q(a * a * d * d) + "*x0^2*x3^2*(x1^2+x2^2+x3^2) + (x0*(x1^2 - 2*" + q(a * c) +
                          "*x3^2) + 2*" + q(a) + "*x3*(x1^2+x2^2+x3^2))^2");
    const double dv = d.get_d();
    const HomChart offset_planes = [ad, cd, dv](double s, double t) -> std::optional<Vec4> {
        const double cs = std::cos(s), ss = std::sin(s), ct = std::cos(t), st = std::sin(t);
        return Vec4((cs * cs * ct * ct - 2.0 * ad * cd * st * st) / (2.0 * ad * st) + dv, cs * ct, ss * ct, st);
    };
    g.checks.push_back({"F_d planes E_d(s,t) d=1/2", Space::Dual, offset_planes, fd, dom});
    g.checks.push_back({"G_d pedal of E_d d=1/2", Space::Point, pedal_chart(offset_planes), gd, dom});
    g.pairs.push_back({fd, gd});
    return g;
}

// Sphere with center (m,0,0), radius r, m = 2, r = 1: O outside.
GalleryEntry sphere_inverse_pedal() {
    GalleryEntry g;
    g.name = "sphere-inverse-pedal";
    g.summary = "sphere seen as points; inverse pedal is a quadric of revolution with focal point O";
    const Rational m(2), r(1);
    const double md = m.get_d(), rd = r.get_d();
    const Domain dom{-kPi, kPi, -1.4, 1.4};
    g.surface = {VectorChart(
        [md, rd](double u, double v) {
            return Vec3(md + rd * std::cos(u) * std::cos(v), rd * std::sin(u) * std::cos(v), rd * std::sin(v));
        },
        dom)};
    std::tie(g.normal, g.support) = polar_split(g.surface);

    g.polynomials["G"] = P("x1^2+x2^2+x3^2 - 2*" + q(m) + "*x0*x1 + " + q(m * m - r * r) + "*x0^2");
    g.polynomials["F*"] = D("u0^2 + 2*" + q(m) + "*u0*u1 + " + q(m * m - r * r) + "*(u1^2+u2^2+u3^2)");
    g.polynomials["F"] = sphere_inverse_pedal_affine(m, r).implicit;
    g.checks.push_back({"G sphere chart", Space::Point, point_chart(g.surface), "G", dom});
    g.checks.push_back({"F* planes alpha*(g)", Space::Dual, inverse_pedal_chart(point_chart(g.surface)), "F*", dom});
    g.checks.push_back({"F envelope of alpha*(g)", Space::Point, point_chart(envelope_surface(point_to_dual(g.surface))),
                        "F", dom});
    g.pairs.push_back({"F*", "G"});
    g.degrees.push_back({"F*", {2, 0, 1, 2}});
    return g;
}

// Cylinder x^2/a^2 + y^2/b^2 = 1 with a = 2, b = 1.
GalleryEntry quadratic_cylinder() {
    GalleryEntry g;
    g.name = "quadratic-cylinder";
    g.summary = "elliptic cylinder; sigma-image is a cyclide and the inverse pedal has a quartic dual";
    const Rational a(2), b(1);
    const double ad = a.get_d(), bd = b.get_d();
    const Domain dom{-kPi, kPi, -2.0, 2.0};
    g.surface = {VectorChart([ad, bd](double u, double v) { return Vec3(ad * std::cos(u), bd * std::sin(u), v); }, dom,
                             [ad, bd](double u, double) { return Vec3(-ad * std::sin(u), bd * std::cos(u), 0.0); },
                             [](double, double) { return Vec3(0.0, 0.0, 1.0); })};
    std::tie(g.normal, g.support) = polar_split(g.surface);

    const Rational ia = 1 / (a * a), ib = 1 / (b * b);
    g.polynomials["G"] = P(q(ia) + "*x1^2 + " + q(ib) + "*x2^2 - x0^2");
    g.polynomials["F*"] = D(q(ia) + "*u0^2*u1^2 + " + q(ib) + "*u0^2*u2^2 - (u1^2+u2^2+u3^2)^2");
    g.polynomials["sigma(G)"] = P(q(ia) + "*x0^2*x1^2 + " + q(ib) + "*x0^2*x2^2 - (x1^2+x2^2+x3^2)^2");
    g.checks.push_back({"G cylinder chart", Space::Point, point_chart(g.surface), "G", dom});
    g.checks.push_back({"F* planes alpha*(g)", Space::Dual, inverse_pedal_chart(point_chart(g.surface)), "F*", dom});
    g.checks.push_back({"sigma(G) inverted chart", Space::Point,
                        [s = g.surface](double u, double v) -> std::optional<Vec4> {
                            return inversion_sigma(HPoint::from_affine(s.point(u, v))).x;
                        },
                        "sigma(G)", dom});
    g.pairs.push_back({"F*", "G"});
    g.degrees.push_back({"F*", {4, 2, 2, 2}});

    const Rational d(1, 2);
    const std::string gd = dkey("G_d", d);
    g.polynomials[gd] = two_sided_conchoid(g.polynomials["G"], d);
    const double dv = d.get_d();
    const Domain tdom{-kPi, kPi, 0.1, 3.0};
    g.checks.push_back({"G_d rational polar chart d=1/2", Space::Point,
                        [ad, bd, dv](double u, double t) -> std::optional<Vec4> {
                            const double d1 = ad * std::cos(u), d2 = bd * std::sin(u);
                            const double dd = d1 * d1 + d2 * d2;
                            const double s = (1.0 + dd * t * t + 2.0 * dv * t) / (2.0 * t * (1.0 + dd * t * t));
                            return Vec4(1.0, s * 2.0 * t * d1, s * 2.0 * t * d2, s * (1.0 - dd * t * t));
                        },
                        gd, tdom});
    return g;
}

// Sphere family at R = 0: the bundle of planes through M = (m,0,0), m = 2.
GalleryEntry bundle() {
    GalleryEntry g;
    g.name = "bundle";
    g.summary = "bundle of planes through M=(2,0,0); pedal is the sphere with diameter OM";
    const Rational m(2);
    const double md = m.get_d();
    const Domain dom{-kPi, kPi, -1.4, 1.4};
    g.normal = trig_s2(dom);
    g.support = ScalarChart([md](double u, double v) { return md * std::cos(u) * std::cos(v); }, dom,
                            [md](double u, double v) { return -md * std::sin(u) * std::cos(v); },
                            [md](double u, double v) { return -md * std::cos(u) * std::sin(v); });
    g.surface = to_points(gamma(g.normal, g.support));

    g.polynomials["F*"] = D("u0 + " + q(m) + "*u1");
    g.polynomials["G"] = P("x1^2+x2^2+x3^2 - " + q(m) + "*x0*x1");
    g.checks.push_back({"F* planes through M", Space::Dual, plane_chart(phi(g.normal, g.support)), "F*", dom});
    g.checks.push_back({"G pedal points", Space::Point, point_chart(gamma(g.normal, g.support)), "G", dom});
    g.pairs.push_back({"F*", "G"});
    g.degrees.push_back({"F*", {1, 0, 0, 2}});
    return g;
}

const std::vector<GalleryEntry>& registry() {
    static const std::vector<GalleryEntry> entries = [] {
        std::vector<GalleryEntry> v;
        v.push_back(plane_conchoid());
        v.push_back(sphere_offset());
        v.push_back(paraboloid_offset());
        v.push_back(pluecker());
        v.push_back(parabola());
        v.push_back(sphere_inverse_pedal());
        v.push_back(quadratic_cylinder());
        v.push_back(bundle());
        return v;
    }();
    return entries;
}

}  // namespace

const HomPoly4& GalleryEntry::poly(const std::string& key) const {
    const auto it = polynomials.find(key);
    if (it == polynomials.end()) throw NotFound("polynomial '" + key + "' in entry " + name);
    return it->second;
}

std::vector<std::string> list_entries() {
    std::vector<std::string> names;
    for (const auto& e : registry()) names.push_back(e.name);
    return names;
}

const GalleryEntry& get_entry(const std::string& name) {
    for (const auto& e : registry())
        if (e.name == name) return e;
    throw NotFound("no gallery entry named '" + name + "'");
}

ResidualReport residual_report(const HomChart& chart, Space chart_space, const HomPoly4& poly, const Domain& dom,
                               const Grid& grid) {
    if (chart_space != poly.space()) throw SpaceMismatch("chart and polynomial live in different spaces");
    return residual_report(chart, poly.compile(), dom, grid);
}

HomChart point_chart(const PointSurface& s) { return homogeneous_points(s); }
HomChart point_chart(const PolarSurface& s) { return homogeneous_points(s); }
HomChart plane_chart(const DualSurface& s) { return homogeneous_planes(s); }

HomChart pedal_chart(const HomChart& planes) {
    return [planes](double u, double v) -> std::optional<Vec4> {
        const auto p = planes(u, v);
        if (!p) return std::nullopt;
        try {
            return alpha_hom(HPlane(*p)).x;
        } catch (const GeometryError&) {
            return std::nullopt;
        }
    };
}

HomChart inverse_pedal_chart(const HomChart& points) {
    return [points](double u, double v) -> std::optional<Vec4> {
        const auto p = points(u, v);
        if (!p) return std::nullopt;
        try {
            return alpha_star_hom(HPoint(*p)).u;
        } catch (const GeometryError&) {
            return std::nullopt;
        }
    };
}

}  // namespace pedalis
