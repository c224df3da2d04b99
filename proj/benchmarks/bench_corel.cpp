#include <benchmark/benchmark.h>

#include "corel/enumerate.hpp"
#include "corel/finset.hpp"
#include "corel/linear.hpp"
#include "corel/pid.hpp"

using namespace corel;

namespace {

Corelation<FinSetEngine> random_finset_corel(enumerate::Rng& rng, int n, int m) {
  FinSetEngine e;
  const int a = 1 + static_cast<int>(rng.below(n + m + 1));
  return gamma(e, Cospan<FinFn>(enumerate::random_fn(rng, n, a),
                                enumerate::random_fn(rng, m, a)));
}

void BM_FinsetCorelCompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FinSetEngine e;
  enumerate::Rng rng(1);
  auto a = random_finset_corel(rng, n, n);
  auto b = random_finset_corel(rng, n, n);
  for (auto _ : state) {
    auto c = compose_corel(e, a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_FinsetCorelCompose)->RangeMultiplier(2)->Range(4, 64);

void BM_FinsetPushout(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FinSetEngine e;
  enumerate::Rng rng(2);
  Span<FinFn> s(enumerate::random_fn(rng, n, n), enumerate::random_fn(rng, n, n));
  for (auto _ : state) {
    auto c = e.pushout(s);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_FinsetPushout)->RangeMultiplier(4)->Range(4, 256);

void BM_RationalRref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QField q;
  enumerate::Rng rng(3);
  auto m = enumerate::random_q_matrix(rng, n, n, -9, 9);
  for (auto _ : state) {
    auto r = rref(q, m);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_RationalRref)->RangeMultiplier(2)->Range(2, 16);

void BM_Gf2SubspaceCompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  LinFpEngine e{FpField(2)};
  enumerate::Rng rng(4);
  auto mk = [&](int rows, int cols) {
    Matrix<std::int64_t> m = mat_zero(e.field, rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = static_cast<std::int64_t>(rng.below(2));
    return m;
  };
  Relation<LinFpEngine> a{n, n, e.rel_canonical(Span<Matrix<std::int64_t>>(mk(n, n), mk(n, n)))};
  Relation<LinFpEngine> b{n, n, e.rel_canonical(Span<Matrix<std::int64_t>>(mk(n, n), mk(n, n)))};
  for (auto _ : state) {
    auto c = compose_rel(e, a, b);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Gf2SubspaceCompose)->RangeMultiplier(2)->Range(2, 32);

void BM_SmithNormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  enumerate::Rng rng(5);
  auto m = enumerate::random_z_matrix(rng, n, n, -9, 9);
  for (auto _ : state) {
    auto d = snf(m);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(2, 8);

void BM_HermiteRowForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  enumerate::Rng rng(6);
  auto m = enumerate::random_z_matrix(rng, n, n, -99, 99);
  for (auto _ : state) {
    auto h = hnf_row(m);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_HermiteRowForm)->RangeMultiplier(2)->Range(2, 16);

}  // namespace

BENCHMARK_MAIN();
