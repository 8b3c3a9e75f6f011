#include <benchmark/benchmark.h>

#include <random>

#include "supint/classification.hpp"
#include "supint/isometry.hpp"
#include "supint/potential.hpp"
#include "supint/potential_table.hpp"
#include "supint/sic.hpp"
#include "supint/solution_family.hpp"

using namespace supint;

namespace {

std::vector<PlueckerPoint> corpus(const char* label, int n) {
  return enumerate_family(ClassLabel::parse(label), n, 1);
}

void BM_Wedge(benchmark::State& state) {
  const Sckt t1{1, GaussRat(1, 2), 3, GaussRat(-2, 3), 5}, t2{GaussRat(7, 4), 0, -1, 2, GaussRat(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(wedge(t1, t2));
}
BENCHMARK(BM_Wedge);

void BM_SicResiduals(benchmark::State& state) {
  const auto pts = corpus("(1,1,1)", 64);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sic_residuals(pts[k++ % pts.size()]));
}
BENCHMARK(BM_SicResiduals);

void BM_ClassOf(benchmark::State& state) {
  const auto pts = corpus("(11,0,1)", 64);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(class_of(pts[k++ % pts.size()]));
}
BENCHMARK(BM_ClassOf);

void BM_NormalForm(benchmark::State& state) {
  const auto pts = corpus("(0,11,0)", 64);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(pts[k++ % pts.size()]));
}
BENCHMARK(BM_NormalForm);

void BM_FibreSeries(benchmark::State& state) {
  const TernaryTriple& t = potential_table().front().rep;
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_fibre_series(t, GaussRat(3, 4), GaussRat(2), order));
}
BENCHMARK(BM_FibreSeries)->Arg(6)->Arg(8)->Arg(12);

void BM_ProlongationResidual(benchmark::State& state) {
  const auto& row = potential_table().front();
  const auto samples = row.samples(20, 1);
  for (auto _ : state) benchmark::DoNotOptimize(prolongation_residual(row.rep, row.potentials[1].expr, samples));
}
BENCHMARK(BM_ProlongationResidual);

void BM_Taylor(benchmark::State& state) {
  const Expr e = potential_table().front().potentials[1].expr;
  for (auto _ : state) benchmark::DoNotOptimize(e.taylor({0.75, 0}, {2, 0}, 8));
}
BENCHMARK(BM_Taylor);

}  // namespace

BENCHMARK_MAIN();
