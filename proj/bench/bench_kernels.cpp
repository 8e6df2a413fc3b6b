#include <benchmark/benchmark.h>

#include "qent/complex_matrix.hpp"
#include "qent/rng.hpp"
#include "qent/tensor.hpp"

using namespace qent;

namespace {

CMat dense_square(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    CMat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = cplx(rng.gaussian(), rng.gaussian());
    return m;
}

}  // namespace

static void BM_matmul_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    CMat a = dense_square(n, 1), b = dense_square(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(matmul(a, b));
}
BENCHMARK(BM_matmul_parallel)->Arg(64)->Arg(256);

static void BM_matmul_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    CMat a = dense_square(n, 1), b = dense_square(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(serial::matmul(a, b));
}
BENCHMARK(BM_matmul_serial)->Arg(64)->Arg(256);

static void BM_kron_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    CMat a = dense_square(n, 3), b = dense_square(n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_kron_parallel)->Arg(16)->Arg(64);

static void BM_kron_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    CMat a = dense_square(n, 3), b = dense_square(n, 4);
    for (auto _ : state) benchmark::DoNotOptimize(serial::kron(a, b));
}
BENCHMARK(BM_kron_serial)->Arg(16)->Arg(64);

static void BM_partial_trace_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    CMat m = dense_square(n * n, 5);
    Dims dims{n, n};
    for (auto _ : state) benchmark::DoNotOptimize(partial_trace(m, dims, {0}));
}
BENCHMARK(BM_partial_trace_parallel)->Arg(16)->Arg(64);

static void BM_partial_trace_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    CMat m = dense_square(n * n, 5);
    Dims dims{n, n};
    for (auto _ : state) benchmark::DoNotOptimize(serial::partial_trace(m, dims, {0}));
}
BENCHMARK(BM_partial_trace_serial)->Arg(16)->Arg(64);

static void BM_partial_transpose_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    CMat m = dense_square(n * n, 6);
    Dims dims{n, n};
    for (auto _ : state) benchmark::DoNotOptimize(partial_transpose(m, dims, {1}));
}
BENCHMARK(BM_partial_transpose_parallel)->Arg(16)->Arg(64);

static void BM_partial_transpose_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    CMat m = dense_square(n * n, 6);
    Dims dims{n, n};
    for (auto _ : state) benchmark::DoNotOptimize(serial::partial_transpose(m, dims, {1}));
}
BENCHMARK(BM_partial_transpose_serial)->Arg(16)->Arg(64);

static void BM_realign_parallel(benchmark::State& state) {
    const std::size_t n = state.range(0);
    CMat m = dense_square(n * n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(realign(m, n, n));
}
BENCHMARK(BM_realign_parallel)->Arg(16)->Arg(64);

static void BM_realign_serial(benchmark::State& state) {
    const std::size_t n = state.range(0);
    CMat m = dense_square(n * n, 7);
    for (auto _ : state) benchmark::DoNotOptimize(serial::realign(m, n, n));
}
BENCHMARK(BM_realign_serial)->Arg(16)->Arg(64);

BENCHMARK_MAIN();
