#pragma once

#include <map>
#include <string>
#include <vector>

#include "pedalis/hompoly.hpp"
#include "pedalis/kernels.hpp"
#include "pedalis/surfkit.hpp"

namespace pedalis {

/// A chart paired with the implicit polynomial its samples must satisfy.
struct ChartCheck {
    std::string label;
    Space space = Space::Point;
    HomChart chart;
    /// Key into GalleryEntry::polynomials.
    std::string poly;
    Domain domain;
};

/// strip(pullback) relation between a dual and a point polynomial, checked
/// exactly up to a rational scalar.
struct PullbackPair {
    std::string dual;
    std::string point;
    bool pedal = true;    ///< strip(pedal_pullback(dual)) ~ point
    bool inverse = true;  ///< strip(inverse_pedal_pullback(point)) ~ dual
};

struct DegreeExpectation {
    std::string dual;
    DegreeReport expected;
};

/// One worked example: charts, exact polynomials, pullback pairs and the
/// unit-normal family (n, e) generating its offsets F_d = phi(n, e + d) and
/// conchoids G_d = gamma(n, e + d).
struct GalleryEntry {
    std::string name;
    std::string summary;
    std::map<std::string, HomPoly4> polynomials;
    std::vector<ChartCheck> checks;
    std::vector<PullbackPair> pairs;
    std::vector<DegreeExpectation> degrees;

    VectorChart normal;
    ScalarChart support;
    /// The surface as declared by the example, for `self` meshes.
    PointSurface surface;
    /// Whether the entry belongs to the commuting-diagram families.
    bool diagram_family = false;

    const HomPoly4& poly(const std::string& key) const;
    DualSurface offset(double d) const { return offset_map(phi(normal, support), d); }
    PolarSurface conchoid(double d) const { return conchoid_map(gamma(normal, support), d); }
};

std::vector<std::string> list_entries();
/// Throws NotFound for unknown names.
const GalleryEntry& get_entry(const std::string& name);

/// Normalized residual of `poly` on the chart's grid samples. Throws
/// SpaceMismatch when the chart's space differs from the polynomial's and
/// EmptyGrid when no sample is valid.
ResidualReport residual_report(const HomChart& chart, Space chart_space, const HomPoly4& poly, const Domain& dom,
                               const Grid& grid);

// Homogeneous chart adapters.
HomChart point_chart(const PointSurface& s);
HomChart point_chart(const PolarSurface& s);
HomChart plane_chart(const DualSurface& s);
/// alpha applied to every plane of the family.
HomChart pedal_chart(const HomChart& planes);
/// alpha* applied to every point.
HomChart inverse_pedal_chart(const HomChart& points);

}  // namespace pedalis
