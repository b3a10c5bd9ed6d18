#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "riparian/analysis.hpp"
#include "riparian/basin.hpp"
#include "riparian/rules.hpp"

namespace {

using riparian::Rational;

template <class T>
riparian::Problem<T> random_problem(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<long> dist(0, 5000);
  std::vector<T> claims;
  T total{0};
  for (std::size_t i = 0; i < n; ++i) {
    claims.push_back(riparian::NumericTraits<T>::ratio(dist(rng), 100));
    total = total + claims.back();
  }
  if (!(T{0} < total)) claims.back() = T{1};
  return riparian::validate_problem(claims, T{0});
}

template <class T>
riparian::Problem<T> with_half_budget(const riparian::Problem<T>& p) {
  std::vector<T> claims(p.claims().begin(), p.claims().end());
  return riparian::validate_problem(std::move(claims), p.aggregate() / T{2});
}

void BM_GeometricFloat(benchmark::State& state) {
  const auto p = with_half_budget(random_problem<double>(static_cast<std::size_t>(state.range(0))));
  const riparian::GammaParam<double> gamma(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(riparian::geometric(p, gamma));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GeometricFloat)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_GeometricExact(benchmark::State& state) {
  const auto p = with_half_budget(random_problem<Rational>(static_cast<std::size_t>(state.range(0))));
  const riparian::GammaParam<Rational> gamma(Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(riparian::geometric(p, gamma));
}
BENCHMARK(BM_GeometricExact)->RangeMultiplier(4)->Range(4, 64);

void BM_BubbleFloat(benchmark::State& state) {
  const auto p = with_half_budget(random_problem<double>(static_cast<std::size_t>(state.range(0))));
  const riparian::GammaParam<double> gamma(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(riparian::geometric_bubble_oracle(p, gamma));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BubbleFloat)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_BasinBinaryTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<riparian::BasinNode<double>> nodes;
  std::vector<riparian::BasinEdge<double>> edges;
  double total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double claim = static_cast<double>(i % 7 + 1);
    total += claim;
    nodes.push_back({std::to_string(i), claim, std::nullopt});
    // Sources at the leaves, flowing towards node 0.
    if (i > 0) edges.push_back({std::to_string(i), std::to_string((i - 1) / 2), std::nullopt});
  }
  const auto g = riparian::validate_basin(std::move(nodes), std::move(edges), total / 2);
  const riparian::GammaParam<double> gamma(0.5);
  for (auto _ : state) benchmark::DoNotOptimize(riparian::basin_geometric(g, gamma));
}
BENCHMARK(BM_BasinBinaryTree)->RangeMultiplier(4)->Range(16, 4096);

void BM_ThresholdSearch(benchmark::State& state) {
  const auto p = with_half_budget(random_problem<double>(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(riparian::search_min_parameter(p, riparian::Family::Geometric, {1e-3, 1e-6}));
  }
}
BENCHMARK(BM_ThresholdSearch)->Arg(6)->Arg(64);

void BM_SweepArgmax(benchmark::State& state) {
  const auto p = with_half_budget(random_problem<double>(6));
  for (auto _ : state) benchmark::DoNotOptimize(riparian::argmax_gamma_per_agent(p));
}
BENCHMARK(BM_SweepArgmax);

}  // namespace

BENCHMARK_MAIN();
