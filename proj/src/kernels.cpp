#include "pedalis/kernels.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pedalis/errors.hpp"

namespace pedalis {

namespace {

// Exceptions must not escape an OpenMP region; geometric failures mark the
// sample invalid, anything else is rethrown after the loop.
template <typename T, typename Fn>
std::optional<T> guarded(const Fn& fn) {
    try {
        return fn();
    } catch (const GeometryError&) {
        return std::nullopt;
    }
}

std::optional<double> finite_or_null(std::optional<double> v) {
    if (v && !std::isfinite(*v)) return std::nullopt;
    return v;
}

std::optional<Vec4> finite_or_null(std::optional<Vec4> v) {
    if (v && !v->allFinite()) return std::nullopt;
    return v;
}

}  // namespace

std::vector<std::optional<Vec4>> sample_grid(const HomChart& chart, const Domain& dom, const Grid& grid) {
    std::vector<std::optional<Vec4>> out(grid.count());
    std::exception_ptr failure;
    const long n = static_cast<long>(grid.count());
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < n; ++idx) {
        const int i = static_cast<int>(idx / grid.nv);
        const int j = static_cast<int>(idx % grid.nv);
        try {
            out[static_cast<std::size_t>(idx)] =
                finite_or_null(guarded<Vec4>([&] { return chart(grid.u(dom, i), grid.v(dom, j)); }));
        } catch (...) {
#pragma omp critical(pedalis_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<std::optional<Vec4>> sample_grid_serial(const HomChart& chart, const Domain& dom, const Grid& grid) {
    std::vector<std::optional<Vec4>> out(grid.count());
    for (int i = 0; i < grid.nu; ++i) {
        for (int j = 0; j < grid.nv; ++j) {
            out[static_cast<std::size_t>(i) * static_cast<std::size_t>(grid.nv) + static_cast<std::size_t>(j)] =
                finite_or_null(guarded<Vec4>([&] { return chart(grid.u(dom, i), grid.v(dom, j)); }));
        }
    }
    return out;
}

std::vector<std::optional<double>> measure_grid(const GridMeasure& f, const Domain& dom, const Grid& grid) {
    std::vector<std::optional<double>> out(grid.count());
    std::exception_ptr failure;
    const long n = static_cast<long>(grid.count());
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < n; ++idx) {
        const int i = static_cast<int>(idx / grid.nv);
        const int j = static_cast<int>(idx % grid.nv);
        try {
            out[static_cast<std::size_t>(idx)] =
                finite_or_null(guarded<double>([&] { return f(grid.u(dom, i), grid.v(dom, j)); }));
        } catch (...) {
#pragma omp critical(pedalis_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<std::optional<double>> measure_grid_serial(const GridMeasure& f, const Domain& dom, const Grid& grid) {
    std::vector<std::optional<double>> out(grid.count());
    for (int i = 0; i < grid.nu; ++i) {
        for (int j = 0; j < grid.nv; ++j) {
            out[static_cast<std::size_t>(i) * static_cast<std::size_t>(grid.nv) + static_cast<std::size_t>(j)] =
                finite_or_null(guarded<double>([&] { return f(grid.u(dom, i), grid.v(dom, j)); }));
        }
    }
    return out;
}

std::vector<std::optional<double>> measure_batch(const BatchMeasure& f, std::size_t n) {
    std::vector<std::optional<double>> out(n);
    std::exception_ptr failure;
    const long count = static_cast<long>(n);
#pragma omp parallel for schedule(static)
    for (long idx = 0; idx < count; ++idx) {
        try {
            out[static_cast<std::size_t>(idx)] =
                finite_or_null(guarded<double>([&] { return f(static_cast<std::size_t>(idx)); }));
        } catch (...) {
#pragma omp critical(pedalis_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<std::optional<double>> measure_batch_serial(const BatchMeasure& f, std::size_t n) {
    std::vector<std::optional<double>> out(n);
    for (std::size_t idx = 0; idx < n; ++idx) out[idx] = finite_or_null(guarded<double>([&] { return f(idx); }));
    return out;
}

ResidualReport summarize(const std::vector<std::optional<double>>& values) {
    ResidualReport rep;
    double sum = 0.0;
    for (const auto& v : values) {
        if (!v) {
            ++rep.skipped;
            continue;
        }
        rep.max = std::max(rep.max, *v);
        sum += *v;
        ++rep.samples;
    }
    if (rep.samples == 0) throw EmptyGrid("no valid samples on the grid");
    rep.mean = sum / static_cast<double>(rep.samples);
    return rep;
}

ResidualReport residual_report(const HomChart& chart, const CompiledPoly& poly, const Domain& dom, const Grid& grid) {
    return summarize(measure_grid(
        [&](double u, double v) -> std::optional<double> {
            const auto t = chart(u, v);
            if (!t) return std::nullopt;
            return poly.normalized_residual(*t);
        },
        dom, grid));
}

ResidualReport residual_report_serial(const HomChart& chart, const CompiledPoly& poly, const Domain& dom,
                                      const Grid& grid) {
    return summarize(measure_grid_serial(
        [&](double u, double v) -> std::optional<double> {
            const auto t = chart(u, v);
            if (!t) return std::nullopt;
            return poly.normalized_residual(*t);
        },
        dom, grid));
}

int kernel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace pedalis
