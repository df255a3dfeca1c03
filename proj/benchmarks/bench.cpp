#include <benchmark/benchmark.h>

#include "gjts/left_unit.hpp"
#include "gjts/models.hpp"
#include "gjts/tripotent.hpp"

using namespace gjts;

namespace {

Scalar mixed_scalar() {
  return Scalar(Rational(3, 7), Rational(-1, 2), Rational(5, 3), Rational(2, 9));
}

void BM_scalar_mul_rational(benchmark::State& state) {
  Scalar a(Rational(22, 7)), b(Rational(-355, 113));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_scalar_mul_rational);

void BM_scalar_mul_full(benchmark::State& state) {
  Scalar a = mixed_scalar(), b = mixed_scalar() * mixed_scalar();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_scalar_mul_full);

void BM_scalar_inverse(benchmark::State& state) {
  Scalar a = mixed_scalar();
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_scalar_inverse);

void BM_rref(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Matrix m(n, n);
  std::uint64_t x = 88172645463325252ull;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      x ^= x << 13;
      x ^= x >> 7;
      x ^= x << 17;
      m(r, c) = Scalar(static_cast<long>(x % 7) - 3);
    }
  for (auto _ : state) {
    Matrix copy = m;
    benchmark::DoNotOptimize(rref(copy));
  }
}
BENCHMARK(BM_rref)->Arg(16)->Arg(40)->Arg(72);

void BM_identity_check_exhaustive(benchmark::State& state) {
  BuiltModel m = build_dnk(3, 2, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_identity_1_1(m.system, CheckMode::exhaustive_mode()));
}
BENCHMARK(BM_identity_check_exhaustive);

void BM_peirce_decompose(benchmark::State& state) {
  BuiltModel m = build_akn_ank(2, 3);
  TripotentContext ctx = make_context(m.system, m.tripotent);
  for (auto _ : state) benchmark::DoNotOptimize(peirce_decompose(ctx));
}
BENCHMARK(BM_peirce_decompose);

void BM_circle_round_trip(benchmark::State& state) {
  BuiltModel m = build_dnk(3, 3, 3);
  TripotentContext ctx = make_context(m.system, m.tripotent);
  PeirceDecomposition d = peirce_decompose(ctx);
  for (auto _ : state) {
    CircleExtraction ex = extract_circle(ctx, d);
    benchmark::DoNotOptimize(reconstruct_triple(ex.circle));
  }
}
BENCHMARK(BM_circle_round_trip);

}  // namespace

BENCHMARK_MAIN();
