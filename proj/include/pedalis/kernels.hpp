#pragma once

// Data-parallel sampling kernels. Every kernel has an OpenMP version and a
// `_serial` reference twin with identical results; per-sample values are
// stored by index and reduced sequentially, so both are deterministic.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "pedalis/hompoly.hpp"

namespace pedalis {

/// Parameter rectangle [u0,u1] x [v0,v1].
struct Domain {
    double u0 = 0.0;
    double u1 = 1.0;
    double v0 = 0.0;
    double v1 = 1.0;

    double u_span() const { return u1 - u0; }
    double v_span() const { return v1 - v0; }
    bool empty() const { return !(u1 > u0) || !(v1 > v0); }
};

/// Sample counts per direction, endpoints included.
struct Grid {
    int nu = 2;
    int nv = 2;

    std::size_t count() const { return static_cast<std::size_t>(nu) * static_cast<std::size_t>(nv); }
    double u(const Domain& d, int i) const { return nu == 1 ? d.u0 : d.u0 + d.u_span() * i / (nu - 1); }
    double v(const Domain& d, int j) const { return nv == 1 ? d.v0 : d.v0 + d.v_span() * j / (nv - 1); }
};

/// Homogeneous tuple per parameter pair; nullopt marks an invalid sample.
using HomChart = std::function<std::optional<Vec4>(double, double)>;
/// Scalar measurement per parameter pair; nullopt marks a skipped sample.
using GridMeasure = std::function<std::optional<double>(double, double)>;
using BatchMeasure = std::function<std::optional<double>(std::size_t)>;

struct ResidualReport {
    double max = 0.0;
    double mean = 0.0;
    std::size_t samples = 0;
    std::size_t skipped = 0;
};

/// Samples indexed i * nv + j.
std::vector<std::optional<Vec4>> sample_grid(const HomChart& chart, const Domain& dom, const Grid& grid);
std::vector<std::optional<Vec4>> sample_grid_serial(const HomChart& chart, const Domain& dom, const Grid& grid);

std::vector<std::optional<double>> measure_grid(const GridMeasure& f, const Domain& dom, const Grid& grid);
std::vector<std::optional<double>> measure_grid_serial(const GridMeasure& f, const Domain& dom, const Grid& grid);

std::vector<std::optional<double>> measure_batch(const BatchMeasure& f, std::size_t n);
std::vector<std::optional<double>> measure_batch_serial(const BatchMeasure& f, std::size_t n);

/// Max/mean over the valid entries. Throws EmptyGrid if none is valid.
ResidualReport summarize(const std::vector<std::optional<double>>& values);

/// Normalized residual of `poly` over the chart's grid samples.
ResidualReport residual_report(const HomChart& chart, const CompiledPoly& poly, const Domain& dom, const Grid& grid);
ResidualReport residual_report_serial(const HomChart& chart, const CompiledPoly& poly, const Domain& dom,
                                      const Grid& grid);

/// Number of OpenMP threads the kernels will use (1 without OpenMP).
int kernel_threads();

}  // namespace pedalis
