#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "pedalis/kernels.hpp"
#include "pedalis/quadricpedal.hpp"
#include "pedalis/surfkit.hpp"

namespace pedalis {

/// Compiled chart expression in (u, v). Grammar: numbers, u, v, pi,
/// sin/cos/sqrt(...), + - * / ^ and parentheses. Throws ParseError.
using ExprFn = std::function<double(double, double)>;
ExprFn compile_expression(std::string_view text);

/// Exact rational from an integer, p/q or decimal literal. Throws ParseError.
Rational parse_rational(std::string_view text);

enum class SurfaceKind { Point, Dual, Polar, Ruled, Quadric };

/// Parsed `[surface]` / `[domain]` / `[grid]` file.
///
///   [surface]
///   kind = point            # point | dual | polar | ruled | quadric
///   x = u
///   y = v
///   z = (u^2 + v^2)/2
///   [domain]
///   u = -1, 1
///   v = -1, 1
///   [grid]
///   nu = 40
///   nv = 40
///
/// Keys per kind: point x,y,z; dual n1,n2,n3,e; polar s1,s2,s3,r; ruled
/// c1,c2,c3,e1,e2,e3 (functions of u); quadric `matrix` (four rows split by
/// `;`) and `space` (point | dual).
struct SurfaceConfig {
    SurfaceKind kind = SurfaceKind::Point;
    std::map<std::string, std::string> fields;
    Domain domain;
    Grid grid{60, 60};
    std::optional<QuadricForm> quadric;
};

SurfaceConfig parse_config(std::string_view text);
/// Throws NotFound when the file cannot be read.
SurfaceConfig load_config(const std::string& path);

/// The (n, e) family of a configured surface with its declared chart.
/// Point and ruled surfaces contribute their tangent planes, dual surfaces
/// their normalized planes, polar surfaces (s/|s|, r). Throws UsageError for
/// quadrics, which have no chart.
struct SurfaceFamily {
    VectorChart normal;
    ScalarChart support;
    PointSurface surface;
};

SurfaceFamily build_family(const SurfaceConfig& cfg);

}  // namespace pedalis
