// Stepping-kernel and decision-procedure benchmarks.

#include <benchmark/benchmark.h>

#include "casim/builtins.hpp"
#include "casim/decision.hpp"
#include "casim/engine.hpp"
#include "casim/rescaling.hpp"
#include "casim/signed_majority.hpp"
#include "casim/zigzag.hpp"

namespace {

using namespace casim;

std::vector<State> random_word(SplitMix64& rng, std::size_t len,
                               std::size_t states) {
  std::vector<State> w(len);
  for (auto& s : w) s = static_cast<State>(rng.below(states));
  return w;
}

void BM_Rule110TorusStep(benchmark::State& state) {
  const CARule r = rule110();
  SplitMix64 rng(1);
  PeriodicConfig c(random_word(rng, state.range(0), 2));
  for (auto _ : state) {
    c = step_periodic(r, c);
    benchmark::DoNotOptimize(c.cells().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Rule110TorusStep)->RangeMultiplier(4)->Range(1 << 8, 1 << 16);

void BM_ZigzagTorusStep(benchmark::State& state) {
  const CARule z = builtin_rule("zigzag:rule110");
  SplitMix64 rng(2);
  PeriodicConfig c(random_word(rng, state.range(0), z.state_count()));
  for (auto _ : state) {
    c = step_periodic(z, c);
    benchmark::DoNotOptimize(c.cells().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ZigzagTorusStep)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

void BM_SignedMajorityStep(benchmark::State& state) {
  const CARule f1 = signed_majority();
  SplitMix64 rng(3);
  const std::int64_t n = state.range(0);
  PeriodicConfig c(n, n, random_word(rng, n * n, 64));
  for (auto _ : state) {
    c = step_periodic(f1, c);
    benchmark::DoNotOptimize(c.cells().data());
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_SignedMajorityStep)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_RescaledStep(benchmark::State& state) {
  const CARule big = rescale(rule110(), {{2}, 2});
  SplitMix64 rng(4);
  PeriodicConfig c(random_word(rng, state.range(0), big.state_count()));
  for (auto _ : state) {
    c = step_periodic(big, c);
    benchmark::DoNotOptimize(c.cells().data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_RescaledStep)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

void BM_BiPeriodicStep(benchmark::State& state) {
  const CARule z = builtin_rule("zigzag:rule110");
  SplitMix64 rng(5);
  BiPeriodicConfig c(random_word(rng, 4, z.state_count()),
                     random_word(rng, state.range(0), z.state_count()),
                     random_word(rng, 4, z.state_count()), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(step_biperiodic(z, c));
  }
}
BENCHMARK(BM_BiPeriodicStep)->Arg(16)->Arg(256)->Arg(4096);

void BM_EvolveWindow(benchmark::State& state) {
  const CARule r = rule110();
  SplitMix64 rng(6);
  const std::int64_t t = state.range(0);
  const FinitePattern u(1, t, random_word(rng, 2 * t + 1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pred(r, t, u));
  }
}
BENCHMARK(BM_EvolveWindow)->Arg(64)->Arg(256)->Arg(1024);

void BM_CycleDetection(benchmark::State& state) {
  const CARule r = xor_rule();
  SplitMix64 rng(7);
  const PeriodicConfig c(random_word(rng, state.range(0), 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cycle_structure(r, c));
  }
}
BENCHMARK(BM_CycleDetection)->Arg(8)->Arg(12)->Arg(16);

void BM_UbpredZigzag(benchmark::State& state) {
  const CARule inner = rule110();
  const CARule z = zigzag(inner);
  SplitMix64 rng(8);
  const BiPeriodicConfig c(random_word(rng, 3, z.state_count()),
                           random_word(rng, 3, z.state_count()),
                           random_word(rng, 3, z.state_count()), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ubpred_zigzag(inner, c, ZigzagAlphabet::E));
  }
}
BENCHMARK(BM_UbpredZigzag);

}  // namespace

BENCHMARK_MAIN();
