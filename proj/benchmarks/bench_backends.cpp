/// Serial vs OpenMP backend comparison on the two parallel surfaces:
/// batched multipole time profiles (grid sweep) and the signed-lattice
/// running-maximum functional (row-parallel DP). The serial backend is the
/// reference implementation; the suite asserts bitwise equality elsewhere,
/// so the only question here is speed.
///
/// Run:  ./bench_backends [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "pseudoheat/backend.hpp"
#include "pseudoheat/hitting.hpp"
#include "pseudoheat/lattice.hpp"
#include "pseudoheat/params.hpp"
#include "pseudoheat/roots.hpp"

using namespace pseudoheat;

namespace {

Backend backend_of(const benchmark::State& state) {
    return state.range(0) == 0 ? Backend::serial : Backend::openmp;
}

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

/// Batched monopole time profile over a grid of starting offsets; each
/// offset is an independent oscillatory quadrature.
void bm_time_profile_grid(benchmark::State& state) {
    const auto rs = build_root_system(make_params(4, std::nullopt));
    std::vector<double> xi(64);
    for (size_t i = 0; i < xi.size(); ++i)
        xi[i] = -0.2 - 0.05 * static_cast<double>(i);
    const Backend b = backend_of(state);
    for (auto _ : state) {
        auto rows = time_profile_grid(rs, Crossing::upward, 0, 0.8, xi, b);
        benchmark::DoNotOptimize(rows.data());
    }
    label(state);
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(xi.size()));
}

/// Lattice DP for the joint (position, running max) Laplace functional;
/// the per-step correlation update is row-parallel.
void bm_expect_max(benchmark::State& state) {
    LatticeConfig cfg;
    cfg.points = 280;
    cfg.n = 5;
    const auto lat = build_lattice(make_params(4, std::nullopt), cfg);
    const Backend b = backend_of(state);
    for (auto _ : state) {
        auto v = expect_max_functional(lat, 1.0, 0.7, 0.05, 0.0, b);
        benchmark::DoNotOptimize(v);
    }
    label(state);
}

} // namespace

BENCHMARK(bm_time_profile_grid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_expect_max)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
