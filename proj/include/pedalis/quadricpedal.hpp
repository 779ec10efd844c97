#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "pedalis/hompoly.hpp"
#include "pedalis/surfkit.hpp"

namespace pedalis {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by exact Gaussian elimination.
int exact_rank(RationalMatrix m);

/// Symmetric quadratic form X^T A X (points) or U^T A U (planes).
class QuadricForm {
public:
    using Matrix = std::array<std::array<Rational, 4>, 4>;

    /// Throws NotSymmetric unless A = A^T.
    QuadricForm(Space space, const Matrix& a);
    /// Reads the matrix off a degree-2 polynomial; off-diagonal entries are
    /// half the mixed coefficients.
    static QuadricForm from_poly(const HomPoly4& p);

    Space space() const { return space_; }
    const Matrix& matrix() const { return a_; }
    int rank() const { return rank_; }
    HomPoly4 to_poly() const;
    /// Dual quadric adj(A) in the opposite space. Throws RankTooLow unless
    /// rank 4.
    QuadricForm dual() const;

private:
    Space space_;
    Matrix a_;
    int rank_ = 0;
};

/// Coefficients of the normalized cyclide shape
///   x0^2 (a1 x1^2 + a2 x2^2 + a3 x3^2) - x0 |x|^2 (b.x) + a0 |x|^4.
struct CyclideCoefficients {
    Rational a0;
    std::array<Rational, 3> a;
    std::array<Rational, 3> b;
};

/// Extracts the coefficients when p has exactly that shape.
std::optional<CyclideCoefficients> cyclide_coefficients(const HomPoly4& p);

/// Symmetric 5x5 form over pentaspherical coordinates (y0..y4).
class PentasphericalForm {
public:
    using Matrix = std::array<std::array<Rational, 5>, 5>;

    explicit PentasphericalForm(const Matrix& b);
    const Matrix& matrix() const { return b_; }
    int rank() const;
    double evaluate(const std::array<double, 5>& y) const;

private:
    Matrix b_;
};

/// strip(pedal_pullback(Q)) together with the stripped exponents.
StripResult pedal_of_quadric_report(const QuadricForm& q);
/// Pedal surface of a dual quadric of rank >= 3. Throws RankTooLow.
HomPoly4 pedal_of_quadric(const QuadricForm& q);

/// Pedal polynomial of the dual paraboloid of z = a x^2 + b y^2 + c,
///   -4ab u0 u3 + b u1^2 + a u2^2 - 4abc u3^2,
/// split as (x.x)(4a x3 + x0) when it factors that way.
std::optional<std::pair<HomPoly4, HomPoly4>> focal_degeneracy_check(const Rational& a, const Rational& b,
                                                                    const Rational& c);

/// Tangent planes of f(u,v) = (u, v, a u^2/2 + b v^2/2 + c) in the
/// rational-norm parameters (s,t):
///   m = (cos s cos t, sin s cos t, sin t),
///   e = -(b cos^2 s cos^2 t + a sin^2 s cos^2 t - 2abc sin^2 t) / (2ab sin t),
/// offset by d, and the polar chart (e + d) m. Throws PoleInDomain if the t
/// range reaches a zero of sin t.
std::pair<DualSurface, PolarSurface> paraboloid_offset_chart(double a, double b, double c, double d,
                                                             const Domain& dom);

/// a0 (y0+y4)^2 - (y0+y4)(b.y) + sum ai yi^2 for a cyclide of the
/// normalized shape. Throws NotCyclideShape otherwise.
PentasphericalForm pentaspherical_lift(const HomPoly4& g);

/// Pedal surface of a conic (dual quadric of rank 3). Throws RankMismatch.
HomPoly4 pedal_of_conic(const QuadricForm& q);

/// True when the polar image of a rank-3 dual quadric is a cone or
/// cylinder of revolution, i.e. the pedal surface is a Dupin cyclide. The
/// test is exact: the quadratic part has a repeated nonzero eigenvalue.
bool dupin_check(const QuadricForm& q);

/// strip(inverse_pedal_pullback(G)) with the stripped exponents. A double
/// plane (rank 1) is handled through its plane.
StripResult inverse_pedal_quadric_report(const QuadricForm& g);
/// Throws RankTooLow for rank 2.
HomPoly4 inverse_pedal_quadric(const QuadricForm& g);

enum class SphereInversePedalType { Ellipsoid, Hyperboloid2Sheets, DegeneratePoint };

struct SphereInversePedal {
    SphereInversePedalType type;
    /// a = m^2 - r^2
    Rational a;
    /// a^2 x0^2 - 2 m a x0 x1 + a x1^2 - r^2 (x2^2 + x3^2) = 0, the
    /// homogenized r^2 (y^2+z^2)/a^2 - x^2/a + 2 m x/a = 1. Zero for the
    /// degenerate case.
    HomPoly4 implicit;
    /// The single point (2m, 0, 0) of the degenerate case.
    std::optional<Vec3> point;
};

/// Inverse pedal of the sphere with center (m,0,0) and radius r.
SphereInversePedal sphere_inverse_pedal_affine(const Rational& m, const Rational& r);

const char* to_string(SphereInversePedalType t);

/// Envelope of alpha*(G) scaled by 1/2 about O: the points equidistant
/// from O and G. Throws OriginOnSurface per sample where G meets O.
PointSurface bisector_from_inverse_pedal(const PointSurface& g);

}  // namespace pedalis
