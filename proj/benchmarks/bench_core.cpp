#include <benchmark/benchmark.h>

#include <cmath>

#include "trustydice/estimator.hpp"
#include "trustydice/extractor.hpp"
#include "trustydice/harness.hpp"
#include "trustydice/lottery.hpp"
#include "trustydice/rng.hpp"
#include "trustydice/zkp/protocol.hpp"

using namespace trustydice;

namespace {

estimator::SampleBatch make_batch(int count, std::uint64_t seed) {
    Rng rng(seed);
    estimator::SampleBatch batch;
    batch.epsilon = 1.0;
    batch.inv_std_bounds.assign(static_cast<std::size_t>(count), 1.0);
    batch.values.resize(static_cast<std::size_t>(count));
    for (auto& v : batch.values) v = harness::gen_chebyshev_extremal(0.0, 2.0, rng);
    return batch;
}

void BM_Estimate(benchmark::State& state) {
    const auto batch = make_batch(static_cast<int>(state.range(0)), 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimator::estimate(batch, estimator::Mode::tight));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Estimate)->RangeMultiplier(4)->Range(60, 15360)->Complexity();

void BM_WeightedMedian(benchmark::State& state) {
    Rng rng(3);
    std::vector<double> points(static_cast<std::size_t>(state.range(0)));
    std::vector<double> weights(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        points[i] = rng.uniform01();
        weights[i] = 0.1 + rng.uniform01();
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimator::weighted_median(points, weights));
    }
}
BENCHMARK(BM_WeightedMedian)->Range(8, 4096);

void BM_ToeplitzEval(benchmark::State& state) {
    const auto family = extractor::HashFamily::toeplitz(8, 3);
    Rng rng(5);
    const std::uint64_t key = rng.below(1ull << family.t());
    std::uint32_t x = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(family.eval(key, x));
        x = (x + 1) & 0xff;
    }
}
BENCHMARK(BM_ToeplitzEval);

void BM_JointDistribution(benchmark::State& state) {
    Rng rng(11);
    std::vector<std::pair<std::uint32_t, double>> probs;
    const int support = static_cast<int>(state.range(0));
    for (int i = 0; i < support; ++i) {
        probs.emplace_back(static_cast<std::uint32_t>(i), 1.0 / support);
    }
    const auto source = extractor::make_source(8, std::move(probs));
    const auto family = extractor::HashFamily::toeplitz(8, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(extractor::joint_distribution(source, family, 50'000'000));
    }
}
BENCHMARK(BM_JointDistribution)->Arg(8)->Arg(64);

void BM_PowerOdds(benchmark::State& state) {
    lottery::Tally tally;
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) {
        tally.entries.emplace_back("c" + std::to_string(i),
                                   static_cast<std::uint64_t>(1 + i * 37 % 1000));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(lottery::power_odds(tally, 2));
    }
}
BENCHMARK(BM_PowerOdds)->Range(2, 512);

void BM_ColoringRound(benchmark::State& state) {
    const auto g = zkp::make_three_component(
        zkp::Graph::undirected(3, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}}));
    const auto coloring = zkp::balance_coloring(g, std::vector<int>{1, 2, 3});
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            zkp::run_coloring_protocol(g, coloring, 1, seed, seed + 1, zkp::CommitMode::hash));
        ++seed;
    }
}
BENCHMARK(BM_ColoringRound);

void BM_SimulatePair(benchmark::State& state) {
    const auto g = zkp::make_three_component(
        zkp::Graph::undirected(2, std::vector<std::pair<int, int>>{{0, 1}}));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            zkp::simulate_pair(g, static_cast<zkp::PairChoice>(seed % 3), seed));
        ++seed;
    }
}
BENCHMARK(BM_SimulatePair);

}  // namespace

BENCHMARK_MAIN();
