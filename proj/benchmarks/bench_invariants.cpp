#include "wittkit/hermitian.hpp"
#include "wittkit/lambda_ops.hpp"
#include "wittkit/randomgen.hpp"

#include <benchmark/benchmark.h>

using namespace wittkit;

namespace {

DiagForm sample_form(int dim) {
  TrialRng rng(99);
  return random_form(rng, GenConfig::defaults(), dim);
}

void BM_hilbert_symbol(benchmark::State& state) {
  Rat a(-30), b(77, 5);
  Place v = Place::finite(Int(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hilbert_symbol(a, b, v));
  }
}
BENCHMARK(BM_hilbert_symbol);

void BM_witt_profile(benchmark::State& state) {
  DiagForm q = sample_form(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(witt_profile(q));
  }
}
BENCHMARK(BM_witt_profile)->Arg(4)->Arg(8);

void BM_gw_equal(benchmark::State& state) {
  DiagForm q = sample_form(6);
  GWClass x = GWClass::of_form(perp(q, hyperbolic_plane()));
  GWClass y = GWClass::of_form(perp(q, DiagForm({Rat(7), Rat(-7)})));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gw_equal(x, y));
  }
}
BENCHMARK(BM_gw_equal);

void BM_prd(benchmark::State& state) {
  DiagForm q = sample_form(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(P_rd(4, 2, q));
  }
}
BENCHMARK(BM_prd);

void BM_q_herm(benchmark::State& state) {
  TrialRng rng(7);
  HermDiagForm h = random_herm(rng, QuaternionAlgebra(-1, -3), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Q_herm(6, 4, h));
  }
}
BENCHMARK(BM_q_herm);

void BM_verify_qnd(benchmark::State& state) {
  TrialRng rng(8);
  HermDiagForm h = random_herm(rng, QuaternionAlgebra(2, 5), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_qnd_quat(h, 4));
  }
}
BENCHMARK(BM_verify_qnd);

}  // namespace

BENCHMARK_MAIN();
