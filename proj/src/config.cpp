#include "pedalis/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <vector>

#include "pedalis/errors.hpp"
#include "pedalis/ruledpedal.hpp"

namespace pedalis {

namespace {

class ExprParser {
public:
    explicit ExprParser(std::string_view s) : s_(s) {}

    ExprFn parse() {
        ExprFn e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ExprFn expr() {
        ExprFn lhs = term();
        for (;;) {
            if (eat('+')) {
                ExprFn rhs = term();
                lhs = [lhs, rhs](double u, double v) { return lhs(u, v) + rhs(u, v); };
            } else if (eat('-')) {
                ExprFn rhs = term();
                lhs = [lhs, rhs](double u, double v) { return lhs(u, v) - rhs(u, v); };
            } else {
                return lhs;
            }
        }
    }

    ExprFn term() {
        ExprFn lhs = unary();
        for (;;) {
            if (eat('*')) {
                ExprFn rhs = unary();
                lhs = [lhs, rhs](double u, double v) { return lhs(u, v) * rhs(u, v); };
            } else if (eat('/')) {
                ExprFn rhs = unary();
                lhs = [lhs, rhs](double u, double v) { return lhs(u, v) / rhs(u, v); };
            } else {
                return lhs;
            }
        }
    }

    ExprFn unary() {
        if (eat('-')) {
            ExprFn x = unary();
            return [x](double u, double v) { return -x(u, v); };
        }
        if (eat('+')) return unary();
        return power();
    }

    ExprFn power() {
        ExprFn base = primary();
        if (eat('^')) {
            ExprFn ex = unary();
            return [base, ex](double u, double v) { return std::pow(base(u, v), ex(u, v)); };
        }
        return base;
    }

    ExprFn primary() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprFn e = expr();
            if (!eat(')')) fail("missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            const std::string text(s_.substr(start, pos_ - start));
            double value = 0.0;
            try {
                std::size_t used = 0;
                value = std::stod(text, &used);
                if (used != text.size()) fail("bad number '" + text + "'");
            } catch (const std::logic_error&) {
                fail("bad number '" + text + "'");
            }
            return [value](double, double) { return value; };
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            const std::string name(s_.substr(start, pos_ - start));
            if (name == "u") return [](double u, double) { return u; };
            if (name == "v") return [](double, double v) { return v; };
            if (name == "pi") return [](double, double) { return std::numbers::pi; };
            double (*fn)(double) = nullptr;
            if (name == "sin") fn = [](double x) { return std::sin(x); };
            if (name == "cos") fn = [](double x) { return std::cos(x); };
            if (name == "sqrt") fn = [](double x) { return std::sqrt(x); };
            if (!fn) fail("unknown identifier '" + name + "'");
            if (!eat('(')) fail("expected '(' after " + name);
            ExprFn arg = expr();
            if (!eat(')')) fail("missing ')'");
            return [fn, arg](double u, double v) { return fn(arg(u, v)); };
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

std::pair<double, double> parse_range(const std::string& key, const std::string& value) {
    const auto parts = split(value, ',');
    if (parts.size() != 2) throw ParseError("domain '" + key + "' needs two comma-separated bounds");
    return {compile_expression(parts[0])(0.0, 0.0), compile_expression(parts[1])(0.0, 0.0)};
}

int parse_count(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const int n = std::stoi(value, &used);
        if (used == value.size()) return n;
    } catch (const std::logic_error&) {
    }
    throw ParseError("grid '" + key + "' must be an integer");
}

QuadricForm parse_quadric(const std::map<std::string, std::string>& f) {
    const auto it = f.find("matrix");
    if (it == f.end()) throw ParseError("quadric needs a 'matrix' key");
    const auto rows = split(it->second, ';');
    if (rows.size() != 4) throw ParseError("quadric matrix needs 4 rows");
    QuadricForm::Matrix m;
    for (int i = 0; i < 4; ++i) {
        std::istringstream is(rows[i]);
        std::string tok;
        int j = 0;
        while (is >> tok) {
            if (j >= 4) throw ParseError("quadric row " + std::to_string(i) + " has more than 4 entries");
            m[i][j++] = parse_rational(tok);
        }
        if (j != 4) throw ParseError("quadric row " + std::to_string(i) + " needs 4 entries");
    }
    Space space = Space::Point;
    if (const auto s = f.find("space"); s != f.end()) {
        if (s->second == "dual") space = Space::Dual;
        else if (s->second != "point") throw ParseError("quadric space must be point or dual");
    }
    return QuadricForm(space, m);
}

const std::string& field(const SurfaceConfig& cfg, const std::string& key) {
    const auto it = cfg.fields.find(key);
    if (it == cfg.fields.end()) throw ParseError("missing key '" + key + "' in [surface]");
    return it->second;
}

}  // namespace

ExprFn compile_expression(std::string_view text) { return ExprParser(text).parse(); }

Rational parse_rational(std::string_view text) {
    const HomPoly4 p = parse_poly(text, Space::Point);
    if (p.degree() > 0) throw ParseError("'" + std::string(text) + "' is not a constant");
    return p.coefficient({0, 0, 0, 0});
}

SurfaceConfig parse_config(std::string_view text) {
    SurfaceConfig cfg;
    std::string section;
    bool have_u = false, have_v = false, have_kind = false;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ParseError("line " + std::to_string(line_no) + ": bad section header");
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            if (section != "surface" && section != "domain" && section != "grid") {
                throw ParseError("line " + std::to_string(line_no) + ": unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos || section.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected key = value inside a section");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (section == "surface") {
            if (key == "kind") {
                have_kind = true;
                if (value == "point") cfg.kind = SurfaceKind::Point;
                else if (value == "dual") cfg.kind = SurfaceKind::Dual;
                else if (value == "polar") cfg.kind = SurfaceKind::Polar;
                else if (value == "ruled") cfg.kind = SurfaceKind::Ruled;
                else if (value == "quadric") cfg.kind = SurfaceKind::Quadric;
                else throw ParseError("unknown surface kind '" + value + "'");
            } else {
                cfg.fields[key] = value;
            }
        } else if (section == "domain") {
            const auto [a, b] = parse_range(key, value);
            if (key == "u") {
                cfg.domain.u0 = a, cfg.domain.u1 = b, have_u = true;
            } else if (key == "v") {
                cfg.domain.v0 = a, cfg.domain.v1 = b, have_v = true;
            } else {
                throw ParseError("unknown domain key '" + key + "'");
            }
        } else {
            if (key == "nu") cfg.grid.nu = parse_count(key, value);
            else if (key == "nv") cfg.grid.nv = parse_count(key, value);
            else throw ParseError("unknown grid key '" + key + "'");
        }
    }
    if (!have_kind) throw ParseError("[surface] needs a kind");
    if (cfg.kind == SurfaceKind::Quadric) {
        cfg.quadric = parse_quadric(cfg.fields);
        return cfg;
    }
    if (!have_u || !have_v) throw ParseError("[domain] needs u and v ranges");
    if (cfg.domain.empty()) throw UsageError("domain rectangle is empty");

    // Compile every chart key now so syntax errors surface at load time.
    static const std::map<SurfaceKind, std::vector<std::string>> keys = {
        {SurfaceKind::Point, {"x", "y", "z"}},
        {SurfaceKind::Dual, {"n1", "n2", "n3", "e"}},
        {SurfaceKind::Polar, {"s1", "s2", "s3", "r"}},
        {SurfaceKind::Ruled, {"c1", "c2", "c3", "e1", "e2", "e3"}},
    };
    for (const auto& k : keys.at(cfg.kind)) compile_expression(field(cfg, k));
    return cfg;
}

SurfaceConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw NotFound("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

SurfaceFamily build_family(const SurfaceConfig& cfg) {
    auto vec = [&cfg](const std::string& a, const std::string& b, const std::string& c) {
        const ExprFn fa = compile_expression(field(cfg, a));
        const ExprFn fb = compile_expression(field(cfg, b));
        const ExprFn fc = compile_expression(field(cfg, c));
        return VectorChart([fa, fb, fc](double u, double v) { return Vec3(fa(u, v), fb(u, v), fc(u, v)); }, cfg.domain);
    };
    SurfaceFamily fam;
    switch (cfg.kind) {
        case SurfaceKind::Point: {
            fam.surface = {vec("x", "y", "z")};
            const DualSurface planes = tangent_planes(fam.surface);
            fam.normal = planes.normal;
            fam.support = planes.support;
            return fam;
        }
        case SurfaceKind::Dual: {
            const VectorChart raw = vec("n1", "n2", "n3");
            const ExprFn e = compile_expression(field(cfg, "e"));
            fam.normal = VectorChart([raw](double u, double v) { return Vec3(raw(u, v).normalized()); }, cfg.domain);
            fam.support = ScalarChart([raw, e](double u, double v) { return e(u, v) / raw(u, v).norm(); }, cfg.domain);
            fam.surface = envelope_surface(phi(fam.normal, fam.support));
            return fam;
        }
        case SurfaceKind::Polar: {
            const VectorChart raw = vec("s1", "s2", "s3");
            const ExprFn r = compile_expression(field(cfg, "r"));
            fam.normal = VectorChart([raw](double u, double v) { return Vec3(raw(u, v).normalized()); }, cfg.domain);
            fam.support = ScalarChart(r, cfg.domain);
            fam.surface = to_points(gamma(fam.normal, fam.support));
            return fam;
        }
        case SurfaceKind::Ruled: {
            const VectorChart c = vec("c1", "c2", "c3");
            const VectorChart e = vec("e1", "e2", "e3");
            const RuledChart r{CurveChart([c](double u) { return c(u, 0.0); }, cfg.domain.u0, cfg.domain.u1),
                               CurveChart([e](double u) { return e(u, 0.0); }, cfg.domain.u0, cfg.domain.u1)};
            const DualSurface planes = rational_offset_ruled(r, 0.0);
            fam.normal = planes.normal;
            fam.support = planes.support;
            fam.surface = r.surface(cfg.domain.v0, cfg.domain.v1);
            return fam;
        }
        case SurfaceKind::Quadric:
            break;
    }
    throw UsageError("quadric configs have no chart; use them with `implicit`");
}

}  // namespace pedalis
