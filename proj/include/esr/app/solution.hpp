#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "esr/fv_solver.hpp"
#include "esr/grid.hpp"
#include "esr/systems/burgers.hpp"
#include "esr/systems/ideal_mhd.hpp"

namespace esr::app {

/// Cell-centred solution table: interfaces plus one column per variable.
struct Solution {
  std::vector<double> interfaces;
  std::vector<std::string> columns;        // without the leading x
  std::vector<std::vector<double>> values;  // values[column][cell]

  std::size_t cells() const { return interfaces.empty() ? 0 : interfaces.size() - 1; }
  double center(std::size_t i) const { return 0.5 * (interfaces[i] + interfaces[i + 1]); }
  double width(std::size_t i) const { return interfaces[i + 1] - interfaces[i]; }
  /// Throws GridMismatch if the column is absent.
  const std::vector<double>& column(const std::string& name) const;
};

Solution to_solution(const IdealMhd& sys, const Grid1D<IdealMhd>& grid);
Solution to_solution(const Burgers& sys, const Grid1D<Burgers>& grid);

/// 17 significant digits, printf %.17g.
std::string format_double(double x);

/// Header `x,<columns>`, one row per cell, LF endings.
std::string solution_csv(const Solution& s);
void emit_solution_csv(const Solution& s, const std::string& path);
/// Cell extents are rebuilt from the centres (midpoints, mirrored at the ends).
Solution read_solution_csv(const std::string& path);

/// Audit stream: t,dt,total_entropy,min_production,max_cell_residual.
void write_audit_csv(const std::vector<StepReport>& reports, const std::string& path);

void write_key_value_file(const std::map<std::string, std::string>& entries,
                          const std::string& path);
/// Flat `key = value` lines; blank lines and lines starting with # are skipped.
std::map<std::string, std::string> read_key_value_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace esr::app
