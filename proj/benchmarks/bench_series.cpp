// mt_series and the H_{3A} extraction are cached, so only uncached pieces are timed here.
#include <benchmark/benchmark.h>

#include "umbral/appell.hpp"
#include "umbral/characters.hpp"
#include "umbral/cone.hpp"
#include "umbral/mock.hpp"
#include "umbral/modular.hpp"

using namespace umbral;

namespace {

void BM_Eta(benchmark::State& st) {
  const Rat order(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(eta(1, order));
}
BENCHMARK(BM_Eta)->Arg(25)->Arg(100)->Arg(400);

void BM_Theta1Product(benchmark::State& st) {
  const int w = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(theta1_product(-w, w, Rat(st.range(0))));
}
BENCHMARK(BM_Theta1Product)->Arg(11)->Arg(21);

void BM_MockSum(benchmark::State& st) {
  const MockName m = all_mock_names()[st.range(0)];
  st.SetLabel(mock_name_string(m));
  for (auto _ : st) benchmark::DoNotOptimize(mock(m, 20));
}
BENCHMARK(BM_MockSum)->DenseRange(0, 12);

void BM_IndefiniteTheta(benchmark::State& st) {
  const ShiftPair sp{{ratio(1, 3), ratio(1, 5)}, {ratio(1, 4), 0}};
  const Rat order(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(itheta_ab(QuadData::appell_lerch(4), sp, 1, order));
}
BENCHMARK(BM_IndefiniteTheta)->Arg(10)->Arg(20)->Arg(40);

void BM_ConeTrace(benchmark::State& st) {
  ConeSpec spec{QuadData::appell_lerch(8), 4, {ratio(1, 5), ratio(1, 3)}, {ratio(1, 7), 0}};
  const Rat order(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(cone_trace(spec, order));
}
BENCHMARK(BM_ConeTrace)->Arg(15)->Arg(30);

void BM_MuM0(benchmark::State& st) {
  const Point z{ratio(1, 3), ratio(1, 4)};
  for (auto _ : st) benchmark::DoNotOptimize(mu_m0(st.range(0), z, 1, 12));
}
BENCHMARK(BM_MuM0)->Arg(4)->Arg(8)->Arg(16);

void BM_CharacterK(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(chi_k(1, Rat(st.range(0))));
}
BENCHMARK(BM_CharacterK)->Arg(20)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
