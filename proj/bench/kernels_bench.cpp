// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "polycert/kernels.hpp"
#include "polycert/parse.hpp"

using namespace polycert;

namespace {

Form dense_form(std::size_t n, Exponent d, int salt) {
    std::vector<Term> terms;
    int c = salt;
    for (const auto& w : simplex_points(n, d)) {
        c = (c * 37 + 11) % 19;
        terms.push_back({w, Rational(c - 9)});
    }
    return Form::from_terms(n, d, std::move(terms));
}

void convolution_args(benchmark::internal::Benchmark* b) {
    for (int n : {2, 3, 4}) {
        for (int d : {4, 8, 12}) b->Args({n, d});
    }
}

void BM_ConvolveReference(benchmark::State& state) {
    const auto f = dense_form(state.range(0), state.range(1), 1);
    const auto g = dense_form(state.range(0), state.range(1), 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_reference(f, g, {}));
}

void BM_ConvolveParallel(benchmark::State& state) {
    const auto f = dense_form(state.range(0), state.range(1), 1);
    const auto g = dense_form(state.range(0), state.range(1), 2);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::convolve_parallel(f, g, {}));
}

// Strictly positive form, so the scan visits every grid point.
const Form& scan_form() {
    static const Form q = parse_form("x1^2 + x2^2 + x3^2 + x4^2 - x1 x2 - x3 x4", 4);
    return q;
}

void BM_GridScanReference(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            kernels::first_nonpositive_grid_point_reference(scan_form(), static_cast<Exponent>(state.range(0)), true));
    }
}

void BM_GridScanParallel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            kernels::first_nonpositive_grid_point(scan_form(), static_cast<Exponent>(state.range(0)), true));
    }
}

}  // namespace

BENCHMARK(BM_ConvolveReference)->Apply(convolution_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ConvolveParallel)->Apply(convolution_args)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GridScanReference)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridScanParallel)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
