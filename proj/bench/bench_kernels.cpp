// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <numeric>

#include "arithgenus/brauer.hpp"
#include "arithgenus/kernels.hpp"
#include "arithgenus/length_spectrum.hpp"

using namespace arithgenus;

namespace {

constexpr long kBits = 256;

void BM_SineProductSerial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::sine_product_serial(state.range(0), kBits));
}

void BM_SineProductParallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(kernels::sine_product_parallel(state.range(0), kBits));
}

std::vector<kernels::ScanAxis> scan_axes(long places, long order) {
    std::vector<kernels::ScanAxis> axes;
    for (long i = 0; i < places; ++i) {
        kernels::ScanAxis a{order, {}};
        for (long k = 1; k < order; ++k) {
            if (std::gcd(k, order) == 1) a.numerators.push_back(k);
        }
        axes.push_back(a);
    }
    return axes;
}

void BM_GenusScanSerial(benchmark::State& state) {
    const auto axes = scan_axes(state.range(0), 7);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::zero_sum_tuples_serial(axes));
}

void BM_GenusScanParallel(benchmark::State& state) {
    const auto axes = scan_axes(state.range(0), 7);
    for (auto _ : state) benchmark::DoNotOptimize(kernels::zero_sum_tuples_parallel(axes));
}

void BM_SpectrumSerial(benchmark::State& state) {
    const auto q = class_from_quaternion(-1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_generators_serial(q, state.range(0), 128));
}

void BM_SpectrumParallel(benchmark::State& state) {
    const auto q = class_from_quaternion(-1, 3);
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_generators(q, state.range(0), 128));
}

}  // namespace

BENCHMARK(BM_SineProductSerial)->Arg(4 * 997)->Arg(4 * 9973)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SineProductParallel)->Arg(4 * 997)->Arg(4 * 9973)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GenusScanSerial)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GenusScanParallel)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SpectrumSerial)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumParallel)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
