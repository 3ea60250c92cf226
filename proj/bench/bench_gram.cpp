// Serial-vs-OpenMP comparison for the entry-fill kernels.
//
//   ./bench_gram                      # all benchmarks
//   OMP_NUM_THREADS=8 ./bench_gram --benchmark_filter=parallel

#include <benchmark/benchmark.h>

#include "quonlab/fock.hpp"
#include "quonlab/gram.hpp"
#include "quonlab/numberop.hpp"
#include "quonlab/rng.hpp"

using namespace quonlab;

namespace {

QMatrix<Cplx> bench_q(int nletters) {
  QSampler sampler(1234);
  return sampler.strict(nletters);
}

Weight generic_weight(int n) {
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i;
  return Weight(letters);
}

void BM_specialized_block(benchmark::State& state, Exec exec) {
  const int n = static_cast<int>(state.range(0));
  QMatrix<Cplx> q = bench_q(n);
  Weight w = generic_weight(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(specialized_generic_block(w, q, exec));
  }
}

void BM_weight_block(benchmark::State& state, Exec exec) {
  const int n = static_cast<int>(state.range(0));
  QMatrix<Cplx> q = bench_q(3);
  std::vector<int> letters(n);
  for (int i = 0; i < n; ++i) letters[i] = i % 3;  // degenerate weight, nontrivial stabilizer
  std::sort(letters.begin(), letters.end());
  Weight w(letters);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gram_weight(w, q, exec));
  }
}

void BM_oracle_block(benchmark::State& state, Exec exec) {
  const int n = static_cast<int>(state.range(0));
  QMatrix<Cplx> q = bench_q(n);
  Weight w = generic_weight(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_gram(w, q, exec));
  }
}

void BM_act_series(benchmark::State& state, Exec exec) {
  QMatrix<Cplx> q = bench_q(3);
  NumberOperatorExpansion<Cplx> nop = expansion(0, q, 4);
  FockVector<Cplx> v = FockVector<Cplx>::basis(Word({0, 1, 2, 1}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(act_series(nop, v, q, exec));
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_specialized_block, serial, Exec::Serial)->Arg(5)->Arg(6)->Arg(7)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_specialized_block, parallel, Exec::Parallel)->Arg(5)->Arg(6)->Arg(7)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_weight_block, serial, Exec::Serial)->Arg(6)->Arg(7)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_weight_block, parallel, Exec::Parallel)->Arg(6)->Arg(7)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_oracle_block, serial, Exec::Serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_oracle_block, parallel, Exec::Parallel)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_act_series, serial, Exec::Serial)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_act_series, parallel, Exec::Parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
