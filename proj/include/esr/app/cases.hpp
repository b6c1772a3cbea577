#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "esr/grid.hpp"
#include "esr/systems/burgers.hpp"
#include "esr/systems/ideal_mhd.hpp"

namespace esr::app {

enum class SystemKind { kBurgers, kIdealMhd };

/// Piecewise-constant Riemann data with the jump at x = 0 and fixed Dirichlet states.
struct CaseDefinition {
  std::string name;
  SystemKind system = SystemKind::kIdealMhd;
  double x_min = -1.0;
  double x_max = 1.0;
  double gamma = 5.0 / 3.0;
  double t_end = 1.0;
  PrimStateMHD mhd_left;
  PrimStateMHD mhd_right;
  double u_left = 0.0;
  double u_right = 0.0;
};

/// torrilhon, burgers-rarefaction, burgers-shock.
const std::vector<CaseDefinition>& register_cases();
/// Throws UsageError for unknown names.
const CaseDefinition& find_case(std::string_view name);

Grid1D<IdealMhd> initial_grid_mhd(const CaseDefinition& c, std::size_t cells);
DirichletBc<IdealMhd> boundary_mhd(const CaseDefinition& c);
Grid1D<Burgers> initial_grid_burgers(const CaseDefinition& c, std::size_t cells);
DirichletBc<Burgers> boundary_burgers(const CaseDefinition& c);

/// Exact entropy solution of the Burgers Riemann problem at (x, t).
double burgers_exact(const CaseDefinition& c, double x, double t);
/// Exact average of the Burgers entropy solution over [a, b].
double burgers_exact_average(const CaseDefinition& c, double a, double b, double t);

}  // namespace esr::app
