#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "fcw/complex.hpp"
#include "fcw/invariants.hpp"
#include "fcw/persistence.hpp"

using namespace fcw;

namespace {

// A path graph with shuffled but admissible weights: every edge appears no
// earlier than its endpoints.
FilteredComplex path(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(0, 64);
  std::vector<Cell> cells{{"v0", 0, Exponent::neg_inf(), {}}};
  std::vector<Rational> vertex{Rational(0)};
  for (int i = 1; i <= n; ++i) {
    vertex.emplace_back(num(rng), 4);
    cells.push_back({"v" + std::to_string(i), 0, Exponent(vertex.back()), {}});
  }
  for (int i = 1; i <= n; ++i) {
    Rational w = std::max(vertex[i - 1], vertex[i]) + Rational(num(rng), 8);
    cells.push_back({"e" + std::to_string(i), 1, Exponent(w), {"v" + std::to_string(i - 1), "v" + std::to_string(i)}});
  }
  return FilteredComplex("v0", std::move(cells));
}

Barcode bars(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-16, 32);
  std::uniform_int_distribution<int> len(1, 16);
  std::vector<Bar> out;
  for (int i = 0; i < n; ++i) {
    Rational b(num(rng), 4);
    out.push_back({i % 2, Extended(b), Extended(Rational(b + Rational(len(rng), 4)))});
  }
  return Barcode(std::move(out));
}

}  // namespace

static void BM_BarcodePath(benchmark::State& state) {
  auto x = path(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(barcode(x));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BarcodePath)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_BarcodeGrid(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto x = product(path(n, 2), path(n, 3), ProductVariant::filtered);
  for (auto _ : state) benchmark::DoNotOptimize(barcode(x));
  state.counters["cells"] = static_cast<double>(x.cells().size());
}
BENCHMARK(BM_BarcodeGrid)->DenseRange(4, 16, 4);

static void BM_Bottleneck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = bars(n, 4);
  auto b = bars(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(bottleneck(a, b));
}
BENCHMARK(BM_Bottleneck)->RangeMultiplier(2)->Range(8, 128);

static void BM_SmashEuler(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto x = path(n, 6);
  auto y = path(n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(euler_polynomial(smash(x, y, ProductVariant::filtered)));
}
BENCHMARK(BM_SmashEuler)->RangeMultiplier(2)->Range(4, 32);

static void BM_EulerProduct(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto ex = euler_polynomial(path(n, 8));
  auto ey = euler_polynomial(path(n, 9));
  for (auto _ : state) benchmark::DoNotOptimize(ex * ey);
}
BENCHMARK(BM_EulerProduct)->RangeMultiplier(4)->Range(16, 1024);
BENCHMARK_MAIN();
