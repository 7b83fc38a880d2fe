#include <benchmark/benchmark.h>

#include <limits>
#include <memory>

#include "seeley/batch.hpp"
#include "seeley/halfline.hpp"
#include "seeley/testfunctions.hpp"

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

seeley::GridSpec plane_grid(int t_count) {
  seeley::GridSpec grid;
  grid.axes = {seeley::GridAxis{-0.5, 1.6, t_count},
               seeley::GridAxis{-1.0, 1.0, 33}};
  return grid;
}

seeley::PointFunction extension_row() {
  seeley::OperatorConfig cfg;
  const auto F = std::make_shared<const seeley::ExtendedFunction>(
      seeley::extend(seeley::halfline_source(seeley::tf_exp_cos(), kNegInf,
                                             0.0, 3),
                     cfg));
  return [F](const seeley::Vec& y) {
    return F->value(y[0], y.tail(y.size() - 1));
  };
}

void BM_eval_grid_parallel(benchmark::State& state) {
  const seeley::PointFunction fun = extension_row();
  const seeley::GridSpec grid = plane_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(seeley::eval_grid(fun, grid, 1));
  }
  state.SetItemsProcessed(state.iterations() * grid.total());
}
BENCHMARK(BM_eval_grid_parallel)->Arg(32)->Arg(128)->Arg(512);

void BM_eval_grid_serial(benchmark::State& state) {
  const seeley::PointFunction fun = extension_row();
  const seeley::GridSpec grid = plane_grid(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(seeley::eval_grid_serial(fun, grid, 1));
  }
  state.SetItemsProcessed(state.iterations() * grid.total());
}
BENCHMARK(BM_eval_grid_serial)->Arg(32)->Arg(128)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
