#include <benchmark/benchmark.h>

#include "hessgame/dpp.hpp"
#include "hessgame/envelope.hpp"
#include "hessgame/spectral.hpp"

using namespace hessgame;

namespace {

SymMatrix random_matrix(std::size_t n, Rng& rng) {
  SymMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i; k < n; ++k) m.set(i, k, uniform(rng, -1, 1));
  return m;
}

void BM_Eigenvalues(benchmark::State& state) {
  Rng rng(1);
  const SymMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(sym_eigenvalues(m));
}
BENCHMARK(BM_Eigenvalues)->DenseRange(2, 8, 2);

void BM_LambdaMinMax(benchmark::State& state) {
  Rng rng(2);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const SymMatrix m = random_matrix(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(lambda_j_minmax(m, (n + 1) / 2, SamplingBudget{}));
}
BENCHMARK(BM_LambdaMinMax)->DenseRange(2, 4);

void BM_DppApply(benchmark::State& state) {
  const auto disk = ImplicitDomain::ball({0, 0}, 1.0);
  const auto g = BoundaryDatum::polynomial({{1, {2, 0}}, {-1, {0, 2}}});
  const double h = 1.0 / static_cast<double>(state.range(0));
  const GridField u = GridField::on_domain(disk, h, g, 0.0);
  const DppOperator op(u, disk, g, 2 * h, OperatorSpec::lambda(2, 1), default_dpp_budget(2));
  std::vector<double> out(u.size());
  for (auto _ : state) {
    op.apply_all(u.values(), out);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * op.interior_count()));
}
BENCHMARK(BM_DppApply)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_ConvexEnvelope(benchmark::State& state) {
  const auto disk = ImplicitDomain::ball({0, 0}, 1.0);
  const auto g = BoundaryDatum::polynomial({{1, {2, 0}}, {-1, {0, 2}}});
  const LiftedCloud cloud = boundary_cloud(disk, g, static_cast<std::size_t>(state.range(0)));
  const Vec x{0.3, -0.2};
  for (auto _ : state) benchmark::DoNotOptimize(convex_envelope_eval(cloud, x));
}
BENCHMARK(BM_ConvexEnvelope)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
