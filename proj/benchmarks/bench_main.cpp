#include <benchmark/benchmark.h>

#include "concord/ccomplex.hpp"
#include "concord/certify.hpp"
#include "concord/floer.hpp"
#include "concord/knots.hpp"

using namespace concord;

namespace {

void BM_ParseKnot(benchmark::State& state) {
  const std::string expr = "D(T(2,3),1,m(T(2,5)) # Wh+(U,-1),-3) # r(T(3,4))";
  for (auto _ : state) benchmark::DoNotOptimize(parse_knot_expression(expr));
}
BENCHMARK(BM_ParseKnot);

void BM_AlexanderT2q(benchmark::State& state) {
  auto k = torus_knot(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(*k));
}
BENCHMARK(BM_AlexanderT2q)->Arg(9)->Arg(21)->Arg(41);

void BM_SignatureSum(benchmark::State& state) {
  KnotPtr k = unknot();
  for (long long i = 0; i < state.range(0); ++i)
    k = connected_sum(k, torus_knot(2, 5));
  for (auto _ : state) benchmark::DoNotOptimize(signature(*k));
}
BENCHMARK(BM_SignatureSum)->Arg(4)->Arg(16);

void BM_PushoffDeterminant(benchmark::State& state) {
  auto cc = build_LK_ccomplex(parse_knot_expression("T(2,7)"));
  for (auto _ : state) benchmark::DoNotOptimize(two_variable_alexander(cc));
}
BENCHMARK(BM_PushoffDeterminant);

void BM_DLens(benchmark::State& state) {
  const long long p = state.range(0);
  for (auto _ : state) {
    for (long long i = 0; i < p; ++i)
      benchmark::DoNotOptimize(d_lens(p, p - 1, i));
  }
}
BENCHMARK(BM_DLens)->Arg(13)->Arg(89);

void BM_CertifyFamily(benchmark::State& state) {
  for (auto _ : state) {
    auto r = certify_family(state.range(0));
    replay_validate(r.certificate);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CertifyFamily)->Arg(5)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
