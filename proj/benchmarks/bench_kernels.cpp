#include <benchmark/benchmark.h>

#include "moran/convolution.hpp"
#include "moran/digit_set.hpp"
#include "moran/fourier.hpp"
#include "moran/moran_ifs.hpp"
#include "moran/spectra.hpp"
#include "moran/spectrality.hpp"

using namespace moran;

namespace {

const ParamSeq& even_params() {
    static const ParamSeq params({}, {8}, {}, {2});
    return params;
}

void BM_MuHat(benchmark::State& state) {
    const int truncation = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(mu_hat(even_params(), 1.7, truncation));
}
BENCHMARK(BM_MuHat)->Arg(12)->Arg(24)->Arg(48);

void BM_FiniteConvolution(benchmark::State& state) {
    const std::size_t levels = static_cast<std::size_t>(state.range(0));
    const auto factors = original_factors(even_params(), levels);
    for (auto _ : state)
        benchmark::DoNotOptimize(finite_convolution(factors, levels));
}
BENCHMARK(BM_FiniteConvolution)->Arg(4)->Arg(6)->Arg(8);

void BM_LevelMeasure(benchmark::State& state) {
    const std::size_t depth = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(level_measure(even_params(), 1, depth));
}
BENCHMARK(BM_LevelMeasure)->Arg(4)->Arg(6);

void BM_MaskZeroExact(benchmark::State& state) {
    const DigitSet digits = DigitSet::from_values(
        {Rational(0), Rational(1), Rational(6), Rational(7), Rational(9)});
    const Rational t(1, 12);
    for (auto _ : state) benchmark::DoNotOptimize(mask_zero_exact(digits, t));
}
BENCHMARK(BM_MaskZeroExact);

void BM_Decide(benchmark::State& state) {
    const ParamSeq params({8, 8, 7}, {8, 12, 10, 6}, {}, {1});
    for (auto _ : state) benchmark::DoNotOptimize(decide(params));
}
BENCHMARK(BM_Decide);

void BM_BuildSpectrum(benchmark::State& state) {
    const std::size_t count = static_cast<std::size_t>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(build_spectrum(even_params(), count));
}
BENCHMARK(BM_BuildSpectrum)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
