#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "gqs/gqs.hpp"

namespace {

gqs::GqsSpline wavy(std::size_t n, double beta) {
  const gqs::GqsSpace space(gqs::Partition::uniform(0.0, 1.0, n),
                            gqs::BetaSequence::constant(beta, n));
  return gqs::quasi_interpolant(space, [](double x) { return std::sin(9.0 * x); });
}

void BM_Eval(benchmark::State& state) {
  const gqs::GqsSpline s = wavy(static_cast<std::size_t>(state.range(0)), -0.5);
  double x = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.eval(x, 1e-10));
    x += 0.6180339887498949;
    if (x > 1.0) x -= 1.0;
  }
}
BENCHMARK(BM_Eval)->Arg(16)->Arg(1024);

void BM_DyadicTable(benchmark::State& state) {
  const gqs::HermiteEndpointState s{0.0, 1.0, 0.5, -2.0, 1.0};
  const int levels = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gqs::dyadic_table(s, 0.15, levels));
  state.SetItemsProcessed(state.iterations() * ((std::int64_t{1} << levels) + 1));
}
BENCHMARK(BM_DyadicTable)->Arg(8)->Arg(14);

void BM_CornerCut(benchmark::State& state) {
  const gqs::GqsSpline s = wavy(static_cast<std::size_t>(state.range(0)), -0.3);
  for (auto _ : state) benchmark::DoNotOptimize(gqs::corner_cut(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CornerCut)->Arg(64)->Arg(4096);

void BM_LagrangeSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const gqs::GqsSpace space(gqs::Partition::uniform(0.0, 1.0, n),
                            gqs::BetaSequence::constant(-0.6, n));
  const auto nodes = gqs::lagrange_nodes(space);
  std::vector<double> values(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) values[k] = std::exp(nodes[k]);
  for (auto _ : state) benchmark::DoNotOptimize(gqs::lagrange_from_nodes(space, values));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LagrangeSolve)->Arg(64)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
