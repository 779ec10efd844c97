#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pedalis/projmaps.hpp"

namespace pedalis {

using Rational = mpq_class;

/// Which projective space a polynomial lives on: points (x0..x3) or planes
/// (u0..u3).
enum class Space { Point, Dual };

inline Space opposite(Space s) { return s == Space::Point ? Space::Dual : Space::Point; }
inline char variable_letter(Space s) { return s == Space::Point ? 'x' : 'u'; }

using Exponent = std::array<int, 4>;

/// Graded-lex order, descending. Homogeneous polynomials share a total
/// degree, so this reduces to lex with x0 > x1 > x2 > x3.
struct GradedLexDescending {
    bool operator()(const Exponent& a, const Exponent& b) const {
        const int da = a[0] + a[1] + a[2] + a[3];
        const int db = b[0] + b[1] + b[2] + b[3];
        if (da != db) return da > db;
        return a > b;
    }
};

class CompiledPoly;

/// Homogeneous polynomial in four variables with exact rational
/// coefficients. No zero coefficients are stored.
class HomPoly4 {
public:
    using TermMap = std::map<Exponent, Rational, GradedLexDescending>;

    HomPoly4() = default;
    /// The zero polynomial of the given degree.
    HomPoly4(Space space, int degree);

    static HomPoly4 constant(Space space, const Rational& c);
    static HomPoly4 variable(Space space, int index);
    /// x1^2 + x2^2 + x3^2 (or u1^2 + u2^2 + u3^2).
    static HomPoly4 quadform(Space space);
    static HomPoly4 monomial(Space space, const Exponent& e, const Rational& c = 1);

    Space space() const { return space_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    Rational coefficient(const Exponent& e) const;
    /// Adds c * monomial(e); throws DegreeMismatch if |e| != degree.
    void add_term(const Exponent& e, const Rational& c);

    /// Largest power of variable `index` over all terms.
    int max_power(int index) const;
    /// Smallest power of variable `index` over all terms (0 for the zero poly).
    int min_power(int index) const;

    HomPoly4 operator-() const;
    HomPoly4& operator+=(const HomPoly4& rhs);
    HomPoly4& operator-=(const HomPoly4& rhs);
    HomPoly4& operator*=(const Rational& s);

    HomPoly4 pow(unsigned exponent) const;

    /// Substitutes variable i by images[i]. Images must share space and
    /// degree; the result has degree degree() * images[0].degree().
    HomPoly4 substitute(const std::array<HomPoly4, 4>& images) const;

    /// Sum of |coefficients|.
    Rational l1_norm() const;

    /// Raw evaluation at a real 4-tuple (no space check).
    double evaluate(const Vec4& t) const;

    CompiledPoly compile() const;

    friend bool operator==(const HomPoly4& a, const HomPoly4& b) {
        return a.space_ == b.space_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

private:
    Space space_ = Space::Point;
    int degree_ = 0;
    TermMap terms_;
};

HomPoly4 operator+(HomPoly4 a, const HomPoly4& b);
HomPoly4 operator-(HomPoly4 a, const HomPoly4& b);
HomPoly4 operator*(const HomPoly4& a, const HomPoly4& b);
HomPoly4 operator*(HomPoly4 a, const Rational& s);
HomPoly4 operator*(const Rational& s, HomPoly4 a);

/// Double-precision snapshot of a polynomial for fast repeated evaluation.
class CompiledPoly {
public:
    CompiledPoly() = default;
    explicit CompiledPoly(const HomPoly4& p);

    int degree() const { return degree_; }
    Space space() const { return space_; }
    double l1_norm() const { return l1_; }
    double operator()(const Vec4& t) const;
    /// |P(T)| / (||coeffs||_1 * ||T||_inf^n).
    double normalized_residual(const Vec4& t) const;

private:
    struct Term {
        Exponent e;
        double c;
    };
    std::vector<Term> terms_;
    Space space_ = Space::Point;
    int degree_ = 0;
    double l1_ = 0.0;
};

/// Evaluation with a space check. Throws SpaceMismatch on a tag mismatch and
/// on the zero tuple.
double eval(const HomPoly4& p, const HPoint& point);
double eval(const HomPoly4& p, const HPlane& plane);

/// Scale-free residual |P(T)| / (||coeffs||_1 * ||T||_inf^deg).
double normalized_residual(const HomPoly4& p, const Vec4& t);

/// Exact quotient p / q. Throws NotDivisible when the remainder is nonzero.
HomPoly4 exact_divide(const HomPoly4& p, const HomPoly4& q);
std::optional<HomPoly4> try_divide(const HomPoly4& p, const HomPoly4& q);

/// lambda with a == lambda * b, if one exists.
std::optional<Rational> proportionality(const HomPoly4& a, const HomPoly4& b);
bool equal_up_to_scale(const HomPoly4& a, const HomPoly4& b);

/// Scales so the leading (graded-lex) coefficient is 1.
HomPoly4 monic(const HomPoly4& p);

/// Pullback of a dual polynomial under the foot-point map: substitutes
/// (u0, u1, u2, u3) <- (-(x1^2+x2^2+x3^2), x0 x1, x0 x2, x0 x3).
HomPoly4 pedal_pullback(const HomPoly4& fstar);

/// Pullback of a point polynomial under the inverse foot-point map:
/// (x0, .., x3) <- (-(u1^2+u2^2+u3^2), u0 u1, u0 u2, u0 u3).
HomPoly4 inverse_pedal_pullback(const HomPoly4& g);

/// original == var0^r * quadform^k * reduced, with r and k maximal.
struct StripResult {
    HomPoly4 reduced;
    int r = 0;
    int k = 0;
};

StripResult strip_exceptional(const HomPoly4& p);

struct DegreeReport {
    int n = 0;
    int r = 0;
    int k = 0;
    int degree = 0;
};

/// n = deg F*, (r, k) from stripping its pedal pullback; checks that the
/// stripped degree equals 2n - r - 2k.
DegreeReport degree_bookkeeping(const HomPoly4& fstar);

/// Dual polynomial of the two-sided offset F_d u F_-d of the dual surface
/// F* = 0: the product F*(u0 + d|u|, u) * F*(u0 - d|u|, u), expanded using
/// |u|^2 = u1^2 + u2^2 + u3^2.
HomPoly4 two_sided_offset(const HomPoly4& fstar, const Rational& d);

/// Point polynomial of the two-sided conchoid G_d u G_-d with respect to O,
/// built the same way from the radial substitution x -> x (|x| - d x0)/|x|.
HomPoly4 two_sided_conchoid(const HomPoly4& g, const Rational& d);

/// Canonical text form: terms in descending graded-lex order, each written
/// as `c*x0^a*x1^b...` with an explicit coefficient (integer or p/q) and
/// explicit exponents; variables with exponent 0 are omitted.
std::string to_string(const HomPoly4& p);

/// Parses an infix polynomial (+, -, *, ^, parentheses, rational or
/// decimal constants, variables x0..x3 or u0..u3). The result must be
/// homogeneous. Constant input takes `default_space`.
HomPoly4 parse_poly(std::string_view text, Space default_space = Space::Point);

}  // namespace pedalis
