// Benchmark of the exact elimination kernel: the serial reference against
// the OpenMP row-update path, on synthetic sparse matrices and on a real
// profile workload. Thread count comes from OMP_NUM_THREADS.
#include <benchmark/benchmark.h>

#include <random>

#include "polyhodge/dinv.hpp"
#include "polyhodge/linalg.hpp"
#include "polyhodge/zoo.hpp"

using namespace polyhodge;

namespace {

RatMatrix random_sparse(int rows, int cols, int per_row, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> col(0, cols - 1);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    RatMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < per_row; ++k) {
            int v = num(rng);
            if (v != 0) m.set(i, col(rng), frac(v, den(rng)));
        }
    return m;
}

void bench_rank(benchmark::State& state, Backend backend) {
    const int n = static_cast<int>(state.range(0));
    RatMatrix m = random_sparse(n, n + n / 4, 6, 12345);
    for (auto _ : state) {
        int r = rank(m, backend);
        benchmark::DoNotOptimize(r);
    }
}

void bench_profile(benchmark::State& state, Backend backend) {
    auto p = zoo("dp_cuboctahedron");
    for (auto _ : state) {
        auto prof = d_profile(p, backend);
        benchmark::DoNotOptimize(prof.dims.data());
    }
}

}  // namespace

BENCHMARK_CAPTURE(bench_rank, serial, Backend::Serial)->Arg(128)->Arg(256)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_rank, openmp, Backend::Parallel)->Arg(128)->Arg(256)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_profile, serial, Backend::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(bench_profile, openmp, Backend::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
