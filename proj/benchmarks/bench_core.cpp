#include <benchmark/benchmark.h>

#include "padicvoa/axioms.hpp"
#include "padicvoa/character.hpp"
#include "padicvoa/combinatorics.hpp"
#include "padicvoa/kummer.hpp"
#include "padicvoa/modes.hpp"
#include "padicvoa/virasoro.hpp"

using namespace padicvoa;

// bernoulli() memoizes, so only the first iteration pays for the recurrence;
// u_state exercises it through the Kummer family instead.
static void BM_KummerState(benchmark::State& state) {
  const long p = state.range(0);
  const long a = state.range(1);
  for (auto _ : state) benchmark::DoNotOptimize(u_state(kummer_index(p, a), p));
}
BENCHMARK(BM_KummerState)->Args({5, 1})->Args({5, 2})->Args({7, 2});

static void BM_ModeActionCold(benchmark::State& state) {
  const HeisenbergState u = h_monomial({3, 2, 1});
  const auto basis = basis_states_up_to(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    clear_mode_cache();
    for (const auto& b : basis) benchmark::DoNotOptimize(mode_action(u, -1, b));
  }
}
BENCHMARK(BM_ModeActionCold)->Arg(4)->Arg(6)->Arg(8);

static void BM_ModeActionWarm(benchmark::State& state) {
  const HeisenbergState u = h_monomial({3, 2, 1});
  const auto basis = basis_states_up_to(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& b : basis) benchmark::DoNotOptimize(mode_action(u, -1, b));
  }
}
BENCHMARK(BM_ModeActionWarm)->Arg(4)->Arg(6)->Arg(8);

static void BM_NormalizedCharacter(benchmark::State& state) {
  const HeisenbergState v = v_state(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(normalized_character(v, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_NormalizedCharacter)->Args({1, 20})->Args({9, 20})->Unit(benchmark::kMillisecond);

static void BM_JacobiSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_sweep(static_cast<int>(state.range(0)), 2, 5));
}
BENCHMARK(BM_JacobiSweep)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_VirasoroBrackets(benchmark::State& state) {
  const VirasoroVoa voa{Rational(12)};
  const auto basis = VirasoroVoa::basis_states_up_to(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const auto& s : basis) {
      for (int m = -4; m <= 4; ++m) {
        for (int n = -4; n <= 4; ++n) benchmark::DoNotOptimize(vir_bracket_defect(voa, m, n, s, 5));
      }
    }
  }
}
BENCHMARK(BM_VirasoroBrackets)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
