// Serial reference kernel against the OpenMP kernel on the same inputs.
#include "ordhyp/families.hpp"
#include "ordhyp/incidence.hpp"
#include "ordhyp/random.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace ordhyp;

Configuration input(std::int64_t which)
{
    switch (which) {
    case 0: return trivial_example(14, 4);
    case 1: return trivial_example(12, 6);
    default: {
        std::mt19937_64 rng(17);
        return random_general_position(rng, 16, 3);
    }
    }
}

const char* name(std::int64_t which)
{
    switch (which) {
    case 0: return "trivial(14,4)";
    case 1: return "trivial(12,6)";
    default: return "random(16,3)";
    }
}

void BM_Serial(benchmark::State& state)
{
    const auto c = input(state.range(0));
    state.SetLabel(name(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(secant_profile_serial(c));
}

void BM_Parallel(benchmark::State& state)
{
    const auto c = input(state.range(0));
    ProfileOptions opt;
    opt.threads = static_cast<int>(state.range(1));
    state.SetLabel(std::string(name(state.range(0))) + " threads=" + std::to_string(state.range(1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(secant_profile(c, opt));
}

void BM_Numeric(benchmark::State& state)
{
    const auto c = prism_points(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(secant_profile_numeric(c, kDefaultEps, false, static_cast<int>(state.range(1))));
}

} // namespace

BENCHMARK(BM_Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{0, 1, 2}, {1, 2, 4}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Numeric)->ArgsProduct({{40, 80}, {1, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
