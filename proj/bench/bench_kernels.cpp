// Serial reference vs OpenMP kernels on the Torrilhon shock tube.

#include <benchmark/benchmark.h>

#include "esr/app/cases.hpp"
#include "esr/fv_solver.hpp"
#include "esr/kernels.hpp"

namespace {

using namespace esr;

struct Row {
  std::vector<Vec<8>> padded;
  std::vector<EntropyData<8>> entropy;
  std::vector<double> dt_over_dx;
};

Row make_row(std::size_t cells) {
  const auto& c = app::find_case("torrilhon");
  const auto grid = app::initial_grid_mhd(c, cells);
  const auto bc = app::boundary_mhd(c);
  Row r;
  r.padded.push_back(bc.left);
  r.padded.insert(r.padded.end(), grid.states.begin(), grid.states.end());
  r.padded.push_back(bc.right);
  entropy_sweep(IdealMhd(c.gamma), std::span<const Vec<8>>(r.padded), r.entropy,
                ExecutionPolicy::kSerial);
  r.dt_over_dx.assign(cells + 1, 0.1);
  return r;
}

void BM_InterfaceFluxes(benchmark::State& state, ExecutionPolicy policy) {
  const Row row = make_row(static_cast<std::size_t>(state.range(0)));
  const IdealMhd sys;
  const DissipationSpec spec{DissipationKind::kHllxOmega, 0.925};
  InterfaceFluxes<IdealMhd> out;
  for (auto _ : state) {
    interface_flux_sweep(sys, spec, std::span<const Vec<8>>(row.padded),
                         std::span<const EntropyData<8>>(row.entropy),
                         std::span<const double>(row.dt_over_dx), out, policy);
    benchmark::DoNotOptimize(out.flux.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Run(benchmark::State& state, ExecutionPolicy policy) {
  const auto& c = app::find_case("torrilhon");
  const IdealMhd sys(c.gamma);
  const auto grid = app::initial_grid_mhd(c, static_cast<std::size_t>(state.range(0)));
  SolverSettings s;
  s.spec = {DissipationKind::kHllxOmega, 0.925};
  s.t_end = 0.1;
  s.policy = policy;
  for (auto _ : state) {
    auto r = run(sys, grid, app::boundary_mhd(c), s);
    benchmark::DoNotOptimize(r.grid.states.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_InterfaceFluxes, serial, esr::ExecutionPolicy::kSerial)
    ->RangeMultiplier(4)->Range(300, 19200)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_InterfaceFluxes, openmp, esr::ExecutionPolicy::kOpenMP)
    ->RangeMultiplier(4)->Range(300, 19200)->Unit(benchmark::kMicrosecond);
BENCHMARK_CAPTURE(BM_Run, serial, esr::ExecutionPolicy::kSerial)
    ->Arg(300)->Arg(3000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Run, openmp, esr::ExecutionPolicy::kOpenMP)
    ->Arg(300)->Arg(3000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
