#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <sstream>
#include <vector>

#include "esr/dissipation.hpp"
#include "esr/entropy_audit.hpp"
#include "esr/error.hpp"
#include "esr/grid.hpp"
#include "esr/kernels.hpp"

namespace esr {

struct StepReport {
  double t = 0.0;   // time after the step
  double dt = 0.0;
  double total_entropy = 0.0;   // sum S_i dx_i after the step
  double entropy_change = 0.0;  // change of sum S_i dx_i plus dt * net boundary entropy outflow
  double max_interface_production = 0.0;
  double min_interface_production = 0.0;
  double max_cell_residual = 0.0;  // audit mode only
};

struct SolverSettings {
  DissipationSpec spec;
  double cfl = 0.5;
  double t_end = 1.0;
  bool audit = false;
  double entropy_tolerance = 1e-10;
  ExecutionPolicy policy = ExecutionPolicy::kOpenMP;

  void validate() const {
    spec.validate();
    if (!(cfl > 0.0 && cfl <= 1.0)) throw Error(ErrorCode::kUsage, "cfl must lie in (0, 1]");
    if (!(t_end >= 0.0)) throw Error(ErrorCode::kUsage, "final time must be non-negative");
  }
};

template <ConservationSystem System>
struct RunResult {
  Grid1D<System> grid;
  std::vector<StepReport> reports;
  double initial_entropy = 0.0;
};

template <ConservationSystem System>
double total_entropy(const System& sys, const Grid1D<System>& grid) {
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.cells(); ++i) sum += sys.entropy(grid.states[i]).S * grid.width(i);
  return sum;
}

/// First-order explicit Euler finite-volume stepper with one Dirichlet ghost
/// cell per side. Holds O(K) scratch buffers reused across steps.
template <ConservationSystem System>
class Stepper {
 public:
  using State = typename System::State;

  Stepper(const System& sys, DirichletBc<System> bc, SolverSettings settings)
      : sys_(sys), bc_(std::move(bc)), settings_(settings) {
    settings_.validate();
  }

  const SolverSettings& settings() const { return settings_; }

  /// cfl * min_i dx_i / sigma_i, sigma_i the larger interface speed of cell i,
  /// clipped so that t + dt does not pass t_end.
  double compute_dt(const Grid1D<System>& grid, double t) {
    pad(grid);
    interface_speed_sweep(sys_, std::span<const State>(padded_), speeds_, settings_.policy);
    double dt = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.cells(); ++i) {
      const double sigma = std::max(speeds_[i], speeds_[i + 1]);
      if (sigma < 1e-300) continue;
      dt = std::min(dt, grid.width(i) / sigma);
    }
    if (!std::isfinite(dt)) throw Error(ErrorCode::kZeroWaveSpeed, "all wave speeds vanish");
    dt *= settings_.cfl;
    if (t + dt > settings_.t_end) dt = settings_.t_end - t;
    return dt;
  }

  /// Advances `grid` in place by dt from time t.
  StepReport advance(Grid1D<System>& grid, double t, double dt) {
    const std::size_t K = grid.cells();
    pad(grid);
    entropy_sweep(sys_, std::span<const State>(padded_), entropy_, settings_.policy);

    dt_over_dx_.resize(K + 1);
    for (std::size_t j = 0; j <= K; ++j) {
      const double left = grid.width(j == 0 ? 0 : j - 1);
      const double right = grid.width(j == K ? K - 1 : j);
      dt_over_dx_[j] = dt / (0.5 * (left + right));
    }
    widths_.resize(K);
    for (std::size_t i = 0; i < K; ++i) widths_[i] = grid.width(i);

    interface_flux_sweep(sys_, settings_.spec, std::span<const State>(padded_),
                         std::span<const EntropyData<System::kVars>>(entropy_),
                         std::span<const double>(dt_over_dx_), fluxes_, settings_.policy);
    cell_update_sweep<System>(std::span<const State>(grid.states),
                              std::span<const State>(fluxes_.flux),
                              std::span<const double>(widths_), dt, next_, settings_.policy);

    for (std::size_t i = 0; i < K; ++i) {
      try {
        sys_.check_physical(next_[i]);
      } catch (const Error& e) {
        std::ostringstream os;
        os.precision(17);
        os << "cell " << i << " at t = " << t + dt << ": " << e.what();
        throw Error(ErrorCode::kNonphysicalState, os.str());
      }
    }

    StepReport report;
    report.t = t + dt;
    report.dt = dt;
    double before = 0.0;
    double after = 0.0;
    double magnitude = 0.0;
    for (std::size_t i = 0; i < K; ++i) {
      const double s_old = entropy_[i + 1].S * widths_[i];
      const double s_new = sys_.entropy(next_[i]).S * widths_[i];
      before += s_old;
      after += s_new;
      magnitude = std::max({magnitude, std::abs(s_old), std::abs(s_new)});
    }
    report.total_entropy = after;
    report.entropy_change =
        after - before + dt * (fluxes_.entropy_flux[K] - fluxes_.entropy_flux[0]);
    report.max_interface_production =
        *std::max_element(fluxes_.production.begin(), fluxes_.production.end());
    report.min_interface_production =
        *std::min_element(fluxes_.production.begin(), fluxes_.production.end());

    if (settings_.audit) {
      cell_entropy_residual(sys_, grid, std::span<const State>(next_),
                            std::span<const double>(fluxes_.entropy_flux), dt, residual_);
      report.max_cell_residual = *std::max_element(residual_.begin(), residual_.end());
      for (std::size_t j = 0; j <= K; ++j) {
        if (production_violates(fluxes_.production[j], fluxes_.production_scale[j],
                                settings_.entropy_tolerance)) {
          std::ostringstream os;
          os.precision(17);
          os << "interface " << j << " produces entropy " << fluxes_.production[j]
             << " at t = " << t;
          throw Error(ErrorCode::kEntropyViolation, os.str());
        }
      }
      const double scale = std::max({std::abs(before), std::abs(after), magnitude});
      if (report.entropy_change > settings_.entropy_tolerance * scale) {
        std::ostringstream os;
        os.precision(17);
        os << "total entropy grew by " << report.entropy_change << " (scale " << scale
           << ") at t = " << t;
        throw Error(ErrorCode::kEntropyViolation, os.str());
      }
    }

    grid.states.swap(next_);
    return report;
  }

  const InterfaceFluxes<System>& last_fluxes() const { return fluxes_; }

 private:
  void pad(const Grid1D<System>& grid) {
    padded_.resize(grid.cells() + 2);
    padded_.front() = bc_.left;
    std::copy(grid.states.begin(), grid.states.end(), padded_.begin() + 1);
    padded_.back() = bc_.right;
  }

  System sys_;
  DirichletBc<System> bc_;
  SolverSettings settings_;
  std::vector<State> padded_;
  std::vector<EntropyData<System::kVars>> entropy_;
  std::vector<double> speeds_;
  std::vector<double> dt_over_dx_;
  std::vector<double> widths_;
  InterfaceFluxes<System> fluxes_;
  std::vector<State> next_;
  std::vector<double> residual_;
};

template <ConservationSystem System>
double compute_dt(const System& sys, const Grid1D<System>& grid, const DirichletBc<System>& bc,
                  const SolverSettings& settings, double t) {
  Stepper<System> stepper(sys, bc, settings);
  return stepper.compute_dt(grid, t);
}

/// One explicit Euler step; returns the updated grid.
template <ConservationSystem System>
std::pair<Grid1D<System>, StepReport> step(const System& sys, const Grid1D<System>& grid,
                                           const DirichletBc<System>& bc,
                                           const SolverSettings& settings, double t, double dt) {
  Stepper<System> stepper(sys, bc, settings);
  Grid1D<System> next = grid;
  const StepReport report = stepper.advance(next, t, dt);
  return {std::move(next), report};
}

/// Advances from the initial grid to settings.t_end.
template <ConservationSystem System>
RunResult<System> run(const System& sys, Grid1D<System> grid, const DirichletBc<System>& bc,
                      const SolverSettings& settings) {
  grid.validate(sys);
  Stepper<System> stepper(sys, bc, settings);
  RunResult<System> result;
  result.initial_entropy = total_entropy(sys, grid);
  double t = 0.0;
  while (t < settings.t_end) {
    const double dt = stepper.compute_dt(grid, t);
    StepReport report = stepper.advance(grid, t, dt);
    // the clipped final step lands exactly on t_end
    if (dt == settings.t_end - t) report.t = settings.t_end;
    t = report.t;
    result.reports.push_back(report);
  }
  result.grid = std::move(grid);
  return result;
}

}  // namespace esr
