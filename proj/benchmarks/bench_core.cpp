#include <benchmark/benchmark.h>

#include "cpe/diagnostics.hpp"
#include "cpe/initial_conditions.hpp"
#include "cpe/integrators.hpp"
#include "cpe/operators.hpp"
#include "cpe/tendencies.hpp"

using namespace cpe;

namespace {

State random_state(int n) {
  InitialSpec s;
  s.family = "smooth-random";
  s.seed = 3;
  return make_initial(Grid(n, n, n), PhysParams(), s);
}

void BM_Derivative(benchmark::State& st) {
  const State s = random_state(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(ddx(s.sigma));
}
BENCHMARK(BM_Derivative)->Arg(16)->Arg(32)->Arg(48);

void BM_DealiasedProduct(benchmark::State& st) {
  const State s = random_state(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(multiply_dealiased(s.sigma, s.v[0]));
}
BENCHMARK(BM_DealiasedProduct)->Arg(16)->Arg(32)->Arg(48);

void BM_Diagnose(benchmark::State& st) {
  const State s = random_state(static_cast<int>(st.range(0)));
  const PhysParams prm;
  for (auto _ : st) benchmark::DoNotOptimize(diagnose(s, prm));
}
BENCHMARK(BM_Diagnose)->Arg(16)->Arg(32);

void BM_Tendency(benchmark::State& st) {
  const State s = random_state(static_cast<int>(st.range(0)));
  const PhysParams prm = PhysParams().with_epsilon(1e-3);
  for (auto _ : st) benchmark::DoNotOptimize(regularized_tendency(s, prm));
}
BENCHMARK(BM_Tendency)->Arg(16)->Arg(32)->Arg(48);

void BM_Rk4Step(benchmark::State& st) {
  const State s = random_state(static_cast<int>(st.range(0)));
  const PhysParams prm;
  RunOptions o;
  o.dt = stable_dt(s, prm);
  o.T_final = o.dt;
  o.monitor_energy = false;
  for (auto _ : st) benchmark::DoNotOptimize(advance(s, prm, o));
}
BENCHMARK(BM_Rk4Step)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
