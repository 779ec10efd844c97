#include "pedalis/quadricpedal.hpp"

#include <cmath>
#include <numbers>

#include "pedalis/errors.hpp"

namespace pedalis {

namespace {

HomPoly4 var(Space s, int i) { return HomPoly4::variable(s, i); }

Exponent unit_exponent(int i, int power) {
    Exponent e{0, 0, 0, 0};
    e[i] = power;
    return e;
}

Rational cyclide_scale(const HomPoly4& p, const Exponent& e) { return p.coefficient(e); }

}  // namespace

int exact_rank(RationalMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

QuadricForm::QuadricForm(Space space, const Matrix& a) : space_(space), a_(a) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (a_[i][j] != a_[j][i]) throw NotSymmetric("quadric matrix is not symmetric");
    RationalMatrix m(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = a_[i][j];
    rank_ = exact_rank(std::move(m));
}

QuadricForm QuadricForm::from_poly(const HomPoly4& p) {
    if (p.degree() != 2) throw DegreeMismatch("quadric polynomial must have degree 2");
    Matrix a;
    for (int i = 0; i < 4; ++i) {
        a[i][i] = p.coefficient(unit_exponent(i, 2));
        for (int j = i + 1; j < 4; ++j) {
            Exponent e = unit_exponent(i, 1);
            e[j] = 1;
            a[i][j] = p.coefficient(e) / 2;
            a[j][i] = a[i][j];
        }
    }
    return QuadricForm(p.space(), a);
}

HomPoly4 QuadricForm::to_poly() const {
    HomPoly4 p(space_, 2);
    for (int i = 0; i < 4; ++i) {
        p.add_term(unit_exponent(i, 2), a_[i][i]);
        for (int j = i + 1; j < 4; ++j) {
            Exponent e = unit_exponent(i, 1);
            e[j] = 1;
            p.add_term(e, 2 * a_[i][j]);
        }
    }
    return p;
}

QuadricForm QuadricForm::dual() const {
    if (rank_ < 4) throw RankTooLow("dual quadric needs a regular matrix");
    auto minor3 = [this](int skip_r, int skip_c) {
        std::array<std::array<Rational, 3>, 3> m;
        for (int i = 0, ri = 0; i < 4; ++i) {
            if (i == skip_r) continue;
            for (int j = 0, cj = 0; j < 4; ++j) {
                if (j == skip_c) continue;
                m[ri][cj++] = a_[i][j];
            }
            ++ri;
        }
        return Rational(m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]));
    };
    Matrix adj;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) adj[j][i] = ((i + j) % 2 ? -1 : 1) * minor3(i, j);
    return QuadricForm(opposite(space_), adj);
}

std::optional<CyclideCoefficients> cyclide_coefficients(const HomPoly4& p) {
    if (p.space() != Space::Point || p.degree() != 4) return std::nullopt;
    CyclideCoefficients c;
    c.a0 = cyclide_scale(p, {0, 4, 0, 0});
    for (int i = 0; i < 3; ++i) {
        Exponent ea{2, 0, 0, 0};
        ea[i + 1] = 2;
        Exponent eb{1, 0, 0, 0};
        eb[i + 1] = 3;
        c.a[i] = p.coefficient(ea);
        c.b[i] = -p.coefficient(eb);
    }
    const HomPoly4 x0 = var(Space::Point, 0);
    const HomPoly4 q = HomPoly4::quadform(Space::Point);
    HomPoly4 diag(Space::Point, 2);
    HomPoly4 lin(Space::Point, 1);
    for (int i = 0; i < 3; ++i) {
        diag += c.a[i] * var(Space::Point, i + 1).pow(2);
        lin += c.b[i] * var(Space::Point, i + 1);
    }
    HomPoly4 rebuilt = x0 * x0 * diag;
    rebuilt -= x0 * q * lin;
    rebuilt += c.a0 * q * q;
    if (!(rebuilt == p)) return std::nullopt;
    return c;
}

PentasphericalForm::PentasphericalForm(const Matrix& b) : b_(b) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (b_[i][j] != b_[j][i]) throw NotSymmetric("pentaspherical matrix is not symmetric");
}

int PentasphericalForm::rank() const {
    RationalMatrix m(5, std::vector<Rational>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m[i][j] = b_[i][j];
    return exact_rank(std::move(m));
}

double PentasphericalForm::evaluate(const std::array<double, 5>& y) const {
    double s = 0.0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) s += b_[i][j].get_d() * y[i] * y[j];
    return s;
}

StripResult pedal_of_quadric_report(const QuadricForm& q) {
    if (q.space() != Space::Dual) throw SpaceMismatch("pedal_of_quadric expects a dual quadric");
    if (q.rank() < 3) throw RankTooLow("rank " + std::to_string(q.rank()) + " < 3");
    return strip_exceptional(pedal_pullback(q.to_poly()));
}

HomPoly4 pedal_of_quadric(const QuadricForm& q) { return pedal_of_quadric_report(q).reduced; }

std::optional<std::pair<HomPoly4, HomPoly4>> focal_degeneracy_check(const Rational& a, const Rational& b,
                                                                    const Rational& c) {
    const HomPoly4 u0 = var(Space::Dual, 0);
    const HomPoly4 u3 = var(Space::Dual, 3);
    HomPoly4 dual = Rational(-4 * a * b) * u0 * u3;
    dual += b * var(Space::Dual, 1).pow(2);
    dual += a * var(Space::Dual, 2).pow(2);
    dual -= Rational(4 * a * b * c) * u3 * u3;
    // Only x0 is divided out: the full strip would also remove the sphere
    // factor we are looking for.
    const HomPoly4 g = exact_divide(pedal_pullback(dual), var(Space::Point, 0));

    const HomPoly4 q = HomPoly4::quadform(Space::Point);
    const HomPoly4 lin = Rational(4 * a) * var(Space::Point, 3) + var(Space::Point, 0);
    const auto quotient = try_divide(g, q * lin);
    if (!quotient || quotient->degree() != 0) return std::nullopt;
    // g = lambda * q * lin; fold the constant into the linear factor.
    const Rational lambda = quotient->coefficient({0, 0, 0, 0});
    return std::make_pair(q, lambda * lin);
}

std::pair<DualSurface, PolarSurface> paraboloid_offset_chart(double a, double b, double c, double d,
                                                             const Domain& dom) {
    const double pi = std::numbers::pi;
    if (std::floor(dom.v1 / pi) >= std::ceil(dom.v0 / pi)) {
        throw PoleInDomain("sin t vanishes inside the t range");
    }
    auto pole = [](double, double t) { return std::abs(std::sin(t)) < 1e-9; };
    VectorChart m(
        [](double s, double t) { return Vec3(std::cos(s) * std::cos(t), std::sin(s) * std::cos(t), std::sin(t)); },
        dom,
        [](double s, double t) { return Vec3(-std::sin(s) * std::cos(t), std::cos(s) * std::cos(t), 0.0); },
        [](double s, double t) { return Vec3(-std::cos(s) * std::sin(t), -std::sin(s) * std::sin(t), std::cos(t)); });
    m.with_poles(pole);
    ScalarChart e(
        [a, b, c, d](double s, double t) {
            const double cs = std::cos(s), ss = std::sin(s), ct = std::cos(t), st = std::sin(t);
            return -(b * cs * cs * ct * ct + a * ss * ss * ct * ct - 2.0 * a * b * c * st * st) / (2.0 * a * b * st) + d;
        },
        dom);
    e.with_poles(pole);
    return {DualSurface{m, e}, PolarSurface{m, e}};
}

PentasphericalForm pentaspherical_lift(const HomPoly4& g) {
    const auto c = cyclide_coefficients(g);
    if (!c) throw NotCyclideShape("polynomial is not x0^2 (a.x^2) - x0 |x|^2 (b.x) + a0 |x|^4");
    PentasphericalForm::Matrix m;
    for (auto& row : m)
        for (auto& v : row) v = 0;
    // s = y0 + y4
    m[0][0] += c->a0;
    m[4][4] += c->a0;
    m[0][4] += c->a0;
    m[4][0] += c->a0;
    for (int i = 1; i <= 3; ++i) {
        const Rational half = c->b[i - 1] / 2;
        m[0][i] -= half;
        m[i][0] -= half;
        m[4][i] -= half;
        m[i][4] -= half;
        m[i][i] += c->a[i - 1];
    }
    return PentasphericalForm(m);
}

HomPoly4 pedal_of_conic(const QuadricForm& q) {
    if (q.rank() != 3) throw RankMismatch("conic needs rank 3, got " + std::to_string(q.rank()));
    return pedal_of_quadric(q);
}

bool dupin_check(const QuadricForm& q) {
    if (q.rank() != 3) throw RankMismatch("conic needs rank 3, got " + std::to_string(q.rank()));
    const auto& A = q.matrix();
    auto m = [&A](int i, int j) -> const Rational& { return A[i + 1][j + 1]; };
    const Rational tr = m(0, 0) + m(1, 1) + m(2, 2);
    const Rational c2 = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                        m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    const Rational det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    // lambda^3 + b lambda^2 + c lambda + d
    const Rational b = -tr, c = c2, d = -det;
    const Rational disc = 18 * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * c * c * c - 27 * d * d;
    const bool double_zero = c == 0 && d == 0;
    return disc == 0 && !double_zero;
}

StripResult inverse_pedal_quadric_report(const QuadricForm& g) {
    if (g.space() != Space::Point) throw SpaceMismatch("inverse_pedal_quadric expects a point quadric");
    if (g.rank() == 1) {
        const auto& A = g.matrix();
        int i = 0;
        while (A[i][i] == 0) ++i;
        HomPoly4 plane(Space::Point, 1);
        for (int j = 0; j < 4; ++j) plane.add_term(unit_exponent(j, 1), A[i][j]);
        return strip_exceptional(inverse_pedal_pullback(plane));
    }
    if (g.rank() < 3) throw RankTooLow("rank 2 plane pairs are not handled");
    return strip_exceptional(inverse_pedal_pullback(g.to_poly()));
}

HomPoly4 inverse_pedal_quadric(const QuadricForm& g) { return inverse_pedal_quadric_report(g).reduced; }

SphereInversePedal sphere_inverse_pedal_affine(const Rational& m, const Rational& r) {
    SphereInversePedal out;
    out.a = m * m - r * r;
    if (out.a == 0) {
        out.type = SphereInversePedalType::DegeneratePoint;
        out.implicit = HomPoly4(Space::Point, 2);
        out.point = Vec3(2.0 * m.get_d(), 0.0, 0.0);
        return out;
    }
    out.type = out.a < 0 ? SphereInversePedalType::Ellipsoid : SphereInversePedalType::Hyperboloid2Sheets;
    const HomPoly4 x0 = var(Space::Point, 0);
    const HomPoly4 x1 = var(Space::Point, 1);
    HomPoly4 p = Rational(out.a * out.a) * x0 * x0;
    p -= Rational(2 * m * out.a) * x0 * x1;
    p += out.a * x1 * x1;
    p -= Rational(r * r) * (var(Space::Point, 2).pow(2) + var(Space::Point, 3).pow(2));
    out.implicit = p;
    return out;
}

const char* to_string(SphereInversePedalType t) {
    switch (t) {
        case SphereInversePedalType::Ellipsoid: return "ELLIPSOID";
        case SphereInversePedalType::Hyperboloid2Sheets: return "HYPERBOLOID_2SHEETS";
        case SphereInversePedalType::DegeneratePoint: return "DEGENERATE_POINT";
    }
    return "?";
}

PointSurface bisector_from_inverse_pedal(const PointSurface& g) {
    const VectorChart p = g.chart;
    VectorChart guarded(
        [p](double u, double v) -> Vec3 {
            const Vec3 x = p(u, v);
            if (!(x.norm() >= kExceptionalEps)) throw OriginOnSurface("G passes through O");
            return x;
        },
        p.domain(), [p](double u, double v) { return p.du(u, v); }, [p](double u, double v) { return p.dv(u, v); });
    guarded.with_poles(p.poles());
    const DualSurface planes = point_to_dual(PointSurface{guarded});
    VectorChart half([planes](double u, double v) { return Vec3(0.5 * envelope_solve(planes, u, v)); }, p.domain());
    half.with_poles(p.poles());
    return {half};
}

}  // namespace pedalis
