#include <benchmark/benchmark.h>

#include "pedalis/gallery.hpp"
#include "pedalis/projmaps.hpp"
#include "pedalis/surfkit.hpp"
#include "pedalis/verify.hpp"

using namespace pedalis;

namespace {

const GalleryEntry& sphere() { return get_entry("sphere-offset"); }

void residual(benchmark::State& state, bool parallel) {
    const GalleryEntry& e = get_entry("pluecker");
    const ChartCheck& c = e.checks.front();
    const CompiledPoly p = e.poly(c.poly).compile();
    const Grid g{int(state.range(0)), int(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? residual_report(c.chart, p, c.domain, g)
                                          : residual_report_serial(c.chart, p, c.domain, g));
}

void commutation(benchmark::State& state, bool parallel) {
    const Grid g{int(state.range(0)), int(state.range(0))};
    for (auto _ : state)
        benchmark::DoNotOptimize(parallel ? commutation_check(sphere().normal, sphere().support, 0.5, g)
                                          : commutation_check_serial(sphere().normal, sphere().support, 0.5, g));
}

void mesh(benchmark::State& state, bool parallel) {
    const PointSurface s = envelope_surface(sphere().offset(0.5));
    const int n = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(parallel ? sample_mesh(s, n, n) : sample_mesh_serial(s, n, n));
}

void involution(benchmark::State& state, bool parallel) {
    const BatchMeasure f = [](std::size_t i) -> std::optional<double> {
        const HPlane u = random_plane(42, i);
        return projective_distance(alpha_star_hom(alpha_hom(u)).u, u.u);
    };
    const auto n = std::size_t(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(parallel ? measure_batch(f, n) : measure_batch_serial(f, n));
}

}  // namespace

BENCHMARK_CAPTURE(residual, parallel, true)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(residual, serial, false)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(commutation, parallel, true)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(commutation, serial, false)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(mesh, parallel, true)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(mesh, serial, false)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(involution, parallel, true)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(involution, serial, false)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
