#include <benchmark/benchmark.h>

#include "ennola/characters.hpp"
#include "ennola/ennola.hpp"

namespace {

void BM_PolyGcd(benchmark::State& state) {
  const auto q = ennola::PolyQU::q();
  const auto u = ennola::PolyQU::u();
  const auto common = (q + u).pow(3) * (q * q - ennola::PolyQU(1));
  const auto a = common * (q.pow(4) + u);
  const auto b = common * (u * u * q + ennola::PolyQU(3));
  for (auto _ : state) benchmark::DoNotOptimize(ennola::gcd(a, b));
}
BENCHMARK(BM_PolyGcd);

void BM_PlethExp(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  ennola::GradedSeries f(2, N);
  for (int n = 1; n <= N; ++n) {
    f.set(n, ennola::SymFunc::basis_element(ennola::Basis::PowerSum,
                                            ennola::MultiPartition({ennola::Partition({n}), ennola::Partition({n})}),
                                            ennola::RatQU(ennola::PolyQU::q())));
  }
  for (auto _ : state) benchmark::DoNotOptimize(ennola::pleth_exp(f));
}
BENCHMARK(BM_PlethExp)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BuildContext(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto ctx = ennola::build_context(3, N);
    benchmark::DoNotOptimize(ctx.tau_schur(N));
  }
}
BENCHMARK(BM_BuildContext)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Kronecker(benchmark::State& state) {
  const auto mu = ennola::parse_multipartition("3.2.1,3.2.1,2^3,4.2");
  for (auto _ : state) benchmark::DoNotOptimize(ennola::kronecker(mu));
}
BENCHMARK(BM_Kronecker);

}  // namespace

BENCHMARK_MAIN();
