#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "esr/dissipation.hpp"
#include "esr/kernels.hpp"

namespace esr::app {

/// Options of every subcommand (solve, reference, compare, curves).
struct RunConfig {
  std::string command = "solve";
  std::string case_name = "torrilhon";
  DissipationSpec spec{DissipationKind::kHllxOmega, 0.925, JumpForm::kEntropyVariables};
  std::size_t cells = 300;
  double cfl = 0.5;
  std::optional<double> t_end;  // case default when unset
  bool audit = false;
  std::string out = "solution.csv";
  std::optional<std::string> audit_out;
  ExecutionPolicy policy = ExecutionPolicy::kOpenMP;

  // compare
  std::vector<DissipationSpec> schemes;
  std::optional<std::string> reference;
  std::size_t ref_cells = 12000;

  // curves
  double lambda_l = -1.0;
  double lambda_r = 1.0;
  double dx_over_dt = 1.0;
  int samples = 201;
};

/// Parses the flags of one subcommand. A `--config FILE` of `key = value`
/// lines (keys are flag names without dashes) supplies values that explicit
/// flags override. Throws UsageError (message lists the valid flags) or
/// InvalidOmega.
RunConfig parse_config(std::string_view command, const std::vector<std::string>& args);

/// Flag summary of one subcommand; empty for unknown commands.
std::string config_help(std::string_view command);

/// "llf", "hllx-omega:0.925", "hll-omega" (omega defaults to `default_omega`).
DissipationSpec parse_scheme(std::string_view text, double default_omega);

}  // namespace esr::app
