#include "pedalis/hompoly.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "pedalis/errors.hpp"

namespace pedalis {

namespace {

int total(const Exponent& e) { return e[0] + e[1] + e[2] + e[3]; }

void require_same_space(const HomPoly4& a, const HomPoly4& b) {
    if (a.space() != b.space()) {
        throw SpaceMismatch("operands live on different spaces");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// HomPoly4

HomPoly4::HomPoly4(Space space, int degree) : space_(space), degree_(degree) {}

HomPoly4 HomPoly4::constant(Space space, const Rational& c) {
    HomPoly4 p(space, 0);
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

HomPoly4 HomPoly4::variable(Space space, int index) {
    Exponent e{0, 0, 0, 0};
    e.at(static_cast<std::size_t>(index)) = 1;
    return monomial(space, e);
}

HomPoly4 HomPoly4::quadform(Space space) {
    HomPoly4 p(space, 2);
    p.add_term({0, 2, 0, 0}, 1);
    p.add_term({0, 0, 2, 0}, 1);
    p.add_term({0, 0, 0, 2}, 1);
    return p;
}

HomPoly4 HomPoly4::monomial(Space space, const Exponent& e, const Rational& c) {
    HomPoly4 p(space, total(e));
    p.add_term(e, c);
    return p;
}

Rational HomPoly4::coefficient(const Exponent& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomPoly4::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    if (total(e) != degree_) {
        throw DegreeMismatch("term of degree " + std::to_string(total(e)) +
                             " added to polynomial of degree " + std::to_string(degree_));
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int HomPoly4::max_power(int index) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e.at(static_cast<std::size_t>(index)));
    return m;
}

int HomPoly4::min_power(int index) const {
    if (terms_.empty()) return 0;
    int m = degree_;
    for (const auto& [e, c] : terms_) m = std::min(m, e.at(static_cast<std::size_t>(index)));
    return m;
}

HomPoly4 HomPoly4::operator-() const {
    HomPoly4 out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

HomPoly4& HomPoly4::operator+=(const HomPoly4& rhs) {
    require_same_space(*this, rhs);
    if (rhs.is_zero()) return *this;
    if (is_zero()) degree_ = rhs.degree_;
    if (degree_ != rhs.degree_) {
        throw DegreeMismatch("sum of degree " + std::to_string(degree_) + " and " +
                             std::to_string(rhs.degree_) + " is not homogeneous");
    }
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

HomPoly4& HomPoly4::operator-=(const HomPoly4& rhs) { return *this += -rhs; }

HomPoly4& HomPoly4::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

HomPoly4 operator+(HomPoly4 a, const HomPoly4& b) { return a += b; }
HomPoly4 operator-(HomPoly4 a, const HomPoly4& b) { return a -= b; }
HomPoly4 operator*(HomPoly4 a, const Rational& s) { return a *= s; }
HomPoly4 operator*(const Rational& s, HomPoly4 a) { return a *= s; }

HomPoly4 operator*(const HomPoly4& a, const HomPoly4& b) {
    require_same_space(a, b);
    HomPoly4 out(a.space(), a.degree() + b.degree());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
        }
    }
    return out;
}

HomPoly4 HomPoly4::pow(unsigned exponent) const {
    HomPoly4 result = constant(space_, 1);
    HomPoly4 base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

HomPoly4 HomPoly4::substitute(const std::array<HomPoly4, 4>& images) const {
    const Space target = images[0].space();
    const int m = images[0].degree();
    for (const auto& img : images) {
        if (img.space() != target || (img.degree() != m && !img.is_zero())) {
            throw DegreeMismatch("substitution images must share space and degree");
        }
    }
    std::array<std::vector<HomPoly4>, 4> powers;
    for (std::size_t i = 0; i < 4; ++i) {
        powers[i].push_back(constant(target, 1));
        const int need = max_power(static_cast<int>(i));
        for (int p = 1; p <= need; ++p) powers[i].push_back(powers[i].back() * images[i]);
    }
    HomPoly4 out(target, degree_ * m);
    for (const auto& [e, c] : terms_) {
        HomPoly4 term = constant(target, c);
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] > 0) term = term * powers[i][static_cast<std::size_t>(e[i])];
        }
        out += term;
    }
    return out;
}

Rational HomPoly4::l1_norm() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += abs(c);
    return s;
}

double HomPoly4::evaluate(const Vec4& t) const {
    double s = 0.0;
    for (const auto& [e, c] : terms_) {
        double m = c.get_d();
        for (std::size_t i = 0; i < 4; ++i) m *= std::pow(t[static_cast<int>(i)], e[i]);
        s += m;
    }
    return s;
}

CompiledPoly HomPoly4::compile() const { return CompiledPoly(*this); }

// ---------------------------------------------------------------------------
// CompiledPoly

CompiledPoly::CompiledPoly(const HomPoly4& p) : space_(p.space()), degree_(p.degree()) {
    terms_.reserve(p.size());
    for (const auto& [e, c] : p.terms()) {
        terms_.push_back({e, c.get_d()});
        l1_ += std::abs(c.get_d());
    }
}

double CompiledPoly::operator()(const Vec4& t) const {
    // Power tables up to the degree; the polynomials here stay below ~16.
    std::array<std::array<double, 33>, 4> pw{};
    const int n = std::min(degree_, 32);
    for (int i = 0; i < 4; ++i) {
        pw[static_cast<std::size_t>(i)][0] = 1.0;
        for (int k = 1; k <= n; ++k) {
            pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                pw[static_cast<std::size_t>(i)][static_cast<std::size_t>(k - 1)] * t[i];
        }
    }
    double s = 0.0;
    for (const auto& term : terms_) {
        s += term.c * pw[0][static_cast<std::size_t>(term.e[0])] *
             pw[1][static_cast<std::size_t>(term.e[1])] * pw[2][static_cast<std::size_t>(term.e[2])] *
             pw[3][static_cast<std::size_t>(term.e[3])];
    }
    return s;
}

double CompiledPoly::normalized_residual(const Vec4& t) const {
    const double scale = t.cwiseAbs().maxCoeff();
    if (!(scale > 0.0) || !(l1_ > 0.0)) return std::abs((*this)(t));
    // Evaluate on the max-abs normalized tuple; same ratio, no overflow.
    return std::abs((*this)(t / scale)) / l1_;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

double checked_eval(const HomPoly4& p, const Vec4& t, Space expected) {
    if (p.space() != expected) {
        throw SpaceMismatch(expected == Space::Point ? "polynomial on dual space evaluated at a point"
                                                     : "polynomial on point space evaluated at a plane");
    }
    if (!(t.cwiseAbs().maxCoeff() > 0.0)) {
        throw SpaceMismatch("evaluation at the zero tuple");
    }
    return p.evaluate(t);
}

}  // namespace

double eval(const HomPoly4& p, const HPoint& point) { return checked_eval(p, point.x, Space::Point); }
double eval(const HomPoly4& p, const HPlane& plane) { return checked_eval(p, plane.u, Space::Dual); }

double normalized_residual(const HomPoly4& p, const Vec4& t) { return CompiledPoly(p).normalized_residual(t); }

// ---------------------------------------------------------------------------
// Division and comparison

std::optional<HomPoly4> try_divide(const HomPoly4& p, const HomPoly4& q) {
    require_same_space(p, q);
    if (q.is_zero()) throw NotDivisible("division by the zero polynomial");
    HomPoly4 quotient(p.space(), p.degree() - q.degree());
    if (p.is_zero()) return quotient;
    if (p.degree() < q.degree()) return std::nullopt;

    const auto& [lead_q, lead_qc] = *q.terms().begin();
    HomPoly4 rem = p;
    while (!rem.is_zero()) {
        const auto& [lead_r, lead_rc] = *rem.terms().begin();
        Exponent e{};
        for (std::size_t i = 0; i < 4; ++i) {
            e[i] = lead_r[i] - lead_q[i];
            if (e[i] < 0) return std::nullopt;
        }
        const Rational c = lead_rc / lead_qc;
        const HomPoly4 step = HomPoly4::monomial(p.space(), e, c);
        quotient += step;
        rem -= step * q;
    }
    return quotient;
}

HomPoly4 exact_divide(const HomPoly4& p, const HomPoly4& q) {
    auto out = try_divide(p, q);
    if (!out) throw NotDivisible(to_string(q) + " does not divide " + to_string(p));
    return *out;
}

std::optional<Rational> proportionality(const HomPoly4& a, const HomPoly4& b) {
    if (a.space() != b.space() || a.degree() != b.degree()) return std::nullopt;
    if (b.is_zero()) return a.is_zero() ? std::optional<Rational>(1) : std::nullopt;
    if (a.size() != b.size()) return std::nullopt;
    const Rational lambda = a.terms().begin()->second / b.terms().begin()->second;
    auto ia = a.terms().begin();
    for (auto ib = b.terms().begin(); ib != b.terms().end(); ++ib, ++ia) {
        if (ia->first != ib->first || ia->second != lambda * ib->second) return std::nullopt;
    }
    return lambda;
}

bool equal_up_to_scale(const HomPoly4& a, const HomPoly4& b) {
    auto l = proportionality(a, b);
    return l.has_value() && *l != 0;
}

HomPoly4 monic(const HomPoly4& p) {
    if (p.is_zero()) return p;
    return p * Rational(1 / p.terms().begin()->second);
}

// ---------------------------------------------------------------------------
// Pullbacks and stripping

namespace {

std::array<HomPoly4, 4> footpoint_images(Space target) {
    const HomPoly4 v0 = HomPoly4::variable(target, 0);
    return {-HomPoly4::quadform(target), v0 * HomPoly4::variable(target, 1),
            v0 * HomPoly4::variable(target, 2), v0 * HomPoly4::variable(target, 3)};
}

}  // namespace

HomPoly4 pedal_pullback(const HomPoly4& fstar) {
    if (fstar.space() != Space::Dual) throw SpaceMismatch("pedal pullback expects a dual polynomial");
    return fstar.substitute(footpoint_images(Space::Point));
}

HomPoly4 inverse_pedal_pullback(const HomPoly4& g) {
    if (g.space() != Space::Point) throw SpaceMismatch("inverse pedal pullback expects a point polynomial");
    return g.substitute(footpoint_images(Space::Dual));
}

StripResult strip_exceptional(const HomPoly4& p) {
    StripResult out;
    if (p.is_zero()) {
        out.reduced = p;
        return out;
    }
    // Powers of var0 divide iff every term carries them.
    out.r = p.min_power(0);
    HomPoly4 reduced(p.space(), p.degree() - out.r);
    for (const auto& [e, c] : p.terms()) reduced.add_term({e[0] - out.r, e[1], e[2], e[3]}, c);

    const HomPoly4 q = HomPoly4::quadform(p.space());
    while (reduced.degree() >= 2) {
        auto next = try_divide(reduced, q);
        if (!next) break;
        reduced = std::move(*next);
        ++out.k;
    }
    out.reduced = std::move(reduced);
    return out;
}

DegreeReport degree_bookkeeping(const HomPoly4& fstar) {
    DegreeReport rep;
    rep.n = fstar.degree();
    const StripResult s = strip_exceptional(pedal_pullback(fstar));
    rep.r = s.r;
    rep.k = s.k;
    rep.degree = s.reduced.degree();
    if (rep.degree != 2 * rep.n - rep.r - 2 * rep.k) {
        throw std::logic_error("degree rule violated: deg " + std::to_string(rep.degree) + " vs 2n-r-2k = " +
                               std::to_string(2 * rep.n - rep.r - 2 * rep.k));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Two-sided offset and conchoid polynomials.
//
// Elements of Q[vars][w] / (w^2 - quadform) are kept as A + w B with A of
// degree k and B of degree k - 1, w counted with degree 1.

namespace {

struct RootForm {
    HomPoly4 a;
    HomPoly4 b;
};

RootForm mul(const RootForm& x, const RootForm& y, const HomPoly4& q) {
    return {x.a * y.a + q * x.b * y.b, x.a * y.b + x.b * y.a};
}

HomPoly4 norm_of_substitution(const HomPoly4& poly, const std::array<RootForm, 4>& images) {
    const Space s = poly.space();
    const HomPoly4 q = HomPoly4::quadform(s);
    const int m = images[0].a.degree();
    std::array<std::vector<RootForm>, 4> powers;
    for (std::size_t i = 0; i < 4; ++i) {
        powers[i].push_back({HomPoly4::constant(s, 1), HomPoly4(s, -1)});
        for (int p = 1; p <= poly.max_power(static_cast<int>(i)); ++p) {
            powers[i].push_back(mul(powers[i].back(), images[i], q));
        }
    }
    RootForm sum{HomPoly4(s, poly.degree() * m), HomPoly4(s, poly.degree() * m - 1)};
    for (const auto& [e, c] : poly.terms()) {
        RootForm term{HomPoly4::constant(s, c), HomPoly4(s, -1)};
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] > 0) term = mul(term, powers[i][static_cast<std::size_t>(e[i])], q);
        }
        sum.a += term.a;
        sum.b += term.b;
    }
    // (A + wB)(A - wB) = A^2 - q B^2
    return sum.a * sum.a - q * sum.b * sum.b;
}

}  // namespace

HomPoly4 two_sided_offset(const HomPoly4& fstar, const Rational& d) {
    if (fstar.space() != Space::Dual) throw SpaceMismatch("offsets act on dual polynomials");
    const Space s = Space::Dual;
    std::array<RootForm, 4> images;
    images[0] = {HomPoly4::variable(s, 0), HomPoly4::constant(s, d)};
    for (int i = 1; i < 4; ++i) images[static_cast<std::size_t>(i)] = {HomPoly4::variable(s, i), HomPoly4(s, 0)};
    return norm_of_substitution(fstar, images);
}

HomPoly4 two_sided_conchoid(const HomPoly4& g, const Rational& d) {
    if (g.space() != Space::Point) throw SpaceMismatch("conchoids act on point polynomials");
    const Space s = Space::Point;
    const HomPoly4 x0 = HomPoly4::variable(s, 0);
    std::array<RootForm, 4> images;
    images[0] = {HomPoly4(s, 2), x0};
    for (int i = 1; i < 4; ++i) {
        const HomPoly4 xi = HomPoly4::variable(s, i);
        images[static_cast<std::size_t>(i)] = {Rational(-d) * (x0 * xi), xi};
    }
    return norm_of_substitution(g, images);
}

// ---------------------------------------------------------------------------
// Text form

std::string to_string(const HomPoly4& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const char letter = variable_letter(p.space());
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        os << Rational(abs(c)).get_str();
        for (std::size_t i = 0; i < 4; ++i) {
            if (e[i] > 0) os << '*' << letter << i << '^' << e[i];
        }
    }
    return os.str();
}

namespace {

using Sparse = std::map<Exponent, Rational>;

Sparse sparse_const(const Rational& c) {
    Sparse s;
    if (c != 0) s[{0, 0, 0, 0}] = c;
    return s;
}

void sparse_add(Sparse& a, const Sparse& b, const Rational& sign) {
    for (const auto& [e, c] : b) {
        Rational& slot = a[e];
        slot += sign * c;
        if (slot == 0) a.erase(e);
    }
}

Sparse sparse_mul(const Sparse& a, const Sparse& b) {
    Sparse out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            const Exponent e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            Rational& slot = out[e];
            slot += ca * cb;
            if (slot == 0) out.erase(e);
        }
    }
    return out;
}

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Sparse parse_all() {
        Sparse s = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        return s;
    }

    std::optional<char> letter() const { return letter_; }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char ch) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    Sparse expr() {
        Sparse acc = term();
        for (;;) {
            if (accept('+')) {
                sparse_add(acc, term(), 1);
            } else if (accept('-')) {
                sparse_add(acc, term(), -1);
            } else {
                return acc;
            }
        }
    }

    Sparse term() {
        Sparse acc = unary();
        for (;;) {
            if (accept('*')) {
                acc = sparse_mul(acc, unary());
            } else if (accept('/')) {
                const Sparse den = unary();
                if (den.size() != 1 || den.begin()->first != Exponent{0, 0, 0, 0}) {
                    fail("division is only allowed by nonzero constants");
                }
                acc = sparse_mul(acc, sparse_const(1 / den.begin()->second));
            } else {
                return acc;
            }
        }
    }

    Sparse unary() {
        if (accept('-')) {
            Sparse s = unary();
            for (auto& [e, c] : s) c = -c;
            return s;
        }
        if (accept('+')) return unary();
        return power();
    }

    Sparse power() {
        Sparse base = primary();
        if (accept('^')) {
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            const int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
            Sparse out = sparse_const(1);
            for (int i = 0; i < k; ++i) out = sparse_mul(out, base);
            return out;
        }
        return base;
    }

    Sparse primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Sparse s = expr();
            if (!accept(')')) fail("missing ')'");
            return s;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
        if (ch == 'x' || ch == 'u') {
            if (letter_ && *letter_ != ch) fail("point and dual variables mixed");
            letter_ = ch;
            ++pos_;
            if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '3') fail("expected variable index 0..3");
            Exponent e{0, 0, 0, 0};
            e[static_cast<std::size_t>(text_[pos_] - '0')] = 1;
            ++pos_;
            Sparse s;
            s[e] = 1;
            return s;
        }
        fail("unexpected character '" + std::string(1, ch) + "'");
    }

    Sparse number() {
        const std::size_t start = pos_;
        std::string digits;
        int frac_digits = 0;
        bool seen_dot = false;
        while (pos_ < text_.size()) {
            const char ch = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                digits.push_back(ch);
                if (seen_dot) ++frac_digits;
            } else if (ch == '.' && !seen_dot) {
                seen_dot = true;
            } else {
                break;
            }
            ++pos_;
        }
        if (digits.empty()) {
            pos_ = start;
            fail("malformed number");
        }
        mpz_class num(digits, 10);
        mpz_class den = 1;
        for (int i = 0; i < frac_digits; ++i) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return sparse_const(r);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::optional<char> letter_;
};

}  // namespace

HomPoly4 parse_poly(std::string_view text, Space default_space) {
    PolyParser parser(text);
    const Sparse s = parser.parse_all();
    const Space space = parser.letter() ? (*parser.letter() == 'x' ? Space::Point : Space::Dual) : default_space;
    if (s.empty()) return HomPoly4(space, 0);
    const int deg = total(s.begin()->first);
    HomPoly4 out(space, deg);
    for (const auto& [e, c] : s) {
        if (total(e) != deg) throw ParseError("polynomial is not homogeneous: \"" + std::string(text) + "\"");
        out.add_term(e, c);
    }
    return out;
}

}  // namespace pedalis
