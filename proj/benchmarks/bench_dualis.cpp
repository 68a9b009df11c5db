#include <benchmark/benchmark.h>

#include "dualis/discriminants.hpp"
#include "dualis/flagvar.hpp"
#include "dualis/hyperdet.hpp"
#include "dualis/matrix.hpp"
#include "dualis/multiseg.hpp"

using namespace dualis;

namespace {

// Hilbert matrix: dense, nonsingular, and its rationals grow quickly under elimination.
RatMatrix hilbert(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = make_rational(1, static_cast<long>(i + j + 1));
  return m;
}

void BM_Determinant(benchmark::State& state) {
  const RatMatrix m = hilbert(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->DenseRange(4, 16, 4);

void BM_SymbolicDiscriminant(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(binary_discriminant_symbolic(d));
}
BENCHMARK(BM_SymbolicDiscriminant)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

void BM_HyperdetGf(benchmark::State& state) {
  const auto l = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hyperdet_degree_gf({l, l, l}));
}
BENCHMARK(BM_HyperdetGf)->DenseRange(2, 6, 1);

void BM_ZetaKz(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  const auto all = enumerate_multisegments(r, 4);
  for (auto _ : state)
    for (const auto& m : all) benchmark::DoNotOptimize(zeta_kz(m));
  state.SetItemsProcessed(static_cast<long>(state.iterations() * all.size()));
}
BENCHMARK(BM_ZetaKz)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_ZetaMw(benchmark::State& state) {
  const auto r = static_cast<unsigned>(state.range(0));
  const auto all = enumerate_multisegments(r, 4);
  for (auto _ : state)
    for (const auto& m : all) benchmark::DoNotOptimize(zeta_mw(m));
  state.SetItemsProcessed(static_cast<long>(state.iterations() * all.size()));
}
BENCHMARK(BM_ZetaMw)->DenseRange(2, 4, 1)->Unit(benchmark::kMillisecond);

void BM_FlagTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(flag_table(RootSystem('E', 8)));
}
BENCHMARK(BM_FlagTable)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
