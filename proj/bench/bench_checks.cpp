// Serial reference vs OpenMP kernels for the membership checks.

#include "toricquiver/builtins.hpp"
#include "toricquiver/category.hpp"
#include "toricquiver/reference.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace toricquiver;

namespace {

FanData fan_for(int id) {
  switch (id) {
    case 0: return affine_space(8);
    case 1: return projective_space(4);
    default: return projective_space(5);
  }
}

/// Constant object of dimension d with u and v filled by small random entries,
/// so every check does real matrix work.
Representation noisy_object(const Fan& fan, std::size_t d, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> e(-2, 2);
  Representation rep = constant_object(fan, d);
  for (auto* maps : {&rep.u, &rep.v})
    for (auto& [key, m] : *maps)
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = e(rng);
  return rep;
}

void BM_serial(benchmark::State& state) {
  Fan fan = fan_for(static_cast<int>(state.range(0))).load();
  Representation rep = state.range(1) ? noisy_object(fan, 3, 1) : constant_object(fan, 3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::check_all(fan, rep));
}

void BM_parallel(benchmark::State& state) {
  Category cat(fan_for(static_cast<int>(state.range(0))).load());
  Representation rep = state.range(1) ? noisy_object(cat.fan(), 3, 1) : constant_object(cat.fan(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_all(cat, rep));
}

// args: fan (0 = C^8, 1 = P^4, 2 = P^5), object (0 = constant, 1 = noisy)
BENCHMARK(BM_serial)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
