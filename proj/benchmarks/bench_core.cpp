#include <benchmark/benchmark.h>

#include "drinfeld/expansions.hpp"
#include "drinfeld/goss.hpp"
#include "drinfeld/modularity.hpp"
#include "drinfeld/poincare.hpp"

using namespace drinfeld;

namespace {

Poly dense_poly(const FqPtr& f, unsigned deg, unsigned seed) {
  std::vector<FqElem> c(deg + 1);
  unsigned long long state = seed * 6364136223846793005ull + 1442695040888963407ull;
  for (auto& x : c) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    x = static_cast<FqElem>((state >> 33) % f->q());
  }
  c[deg] = 1;
  return Poly(f, std::move(c));
}

void BM_PolyMul(benchmark::State& state) {
  const FqPtr f = Fq::make(static_cast<unsigned>(state.range(0)));
  const unsigned deg = static_cast<unsigned>(state.range(1));
  const Poly a = dense_poly(f, deg, 1), b = dense_poly(f, deg, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMul)->Args({2, 256})->Args({2, 1024})->Args({3, 256})->Args({9, 256});

void BM_PolyGcd(benchmark::State& state) {
  const FqPtr f = Fq::make(3);
  const unsigned deg = static_cast<unsigned>(state.range(0));
  const Poly g = dense_poly(f, deg / 4, 7);
  const Poly a = dense_poly(f, deg, 1) * g, b = dense_poly(f, deg, 2) * g;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Arg(128)->Arg(512);

void BM_RatFuncAdd(benchmark::State& state) {
  const FqPtr f = Fq::make(3);
  const unsigned deg = static_cast<unsigned>(state.range(0));
  const RatFunc x(dense_poly(f, deg - 1, 3), dense_poly(f, deg, 4));
  const RatFunc y(dense_poly(f, deg - 1, 5), dense_poly(f, deg, 6));
  for (auto _ : state) benchmark::DoNotOptimize(x + y);
}
BENCHMARK(BM_RatFuncAdd)->Arg(64)->Arg(256);

void BM_GossTable(benchmark::State& state) {
  const FqPtr f = Fq::make(static_cast<unsigned>(state.range(0)));
  const unsigned n = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    GossTable table(f);
    benchmark::DoNotOptimize(table.poly(n));
  }
}
BENCHMARK(BM_GossTable)->Args({3, 50})->Args({3, 100})->Args({2, 100})
    ->Unit(benchmark::kMillisecond);

void BM_GossOracle(benchmark::State& state) {
  const FqPtr f = Fq::make(3);
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    GossOracle oracle(f, n);
    benchmark::DoNotOptimize(oracle.poly(n));
  }
}
BENCHMARK(BM_GossOracle)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Ua(benchmark::State& state) {
  const FqPtr f = Fq::make(3);
  const Poly a = Poly::T(f) * Poly::T(f) + Poly::one(f);
  const unsigned prec = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(u_a(a, prec));
}
BENCHMARK(BM_Ua)->Arg(60)->Arg(200);

void BM_SeriesMul(benchmark::State& state) {
  const FqPtr f = Fq::make(3);
  const USeries g = expand(make_g(f), static_cast<unsigned>(state.range(0)));
  const USeries h = expand(make_h(f), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(g * h);
}
BENCHMARK(BM_SeriesMul)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_ExpandF2(benchmark::State& state) {
  const FqPtr f = Fq::make(3);
  const NamedForm f2 = make_f_s(f, 2);
  for (auto _ : state) benchmark::DoNotOptimize(expand(f2, 60));
}
BENCHMARK(BM_ExpandF2)->Unit(benchmark::kMillisecond);

void BM_ExpressWeight16(benchmark::State& state) {
  const FqPtr f = Fq::make(3);
  const USeries s = expand(make_f(f, 16, 7), 60);
  for (auto _ : state) benchmark::DoNotOptimize(express(s, 16, 1));
}
BENCHMARK(BM_ExpressWeight16)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  const FqPtr f = Fq::make(3);
  for (auto _ : state) benchmark::DoNotOptimize(certify_nonvanishing(f, 22, 5));
}
BENCHMARK(BM_Certify);

} // namespace

BENCHMARK_MAIN();
