#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "esr/app/cases.hpp"
#include "esr/app/solution.hpp"
#include "esr/dissipation.hpp"
#include "esr/fv_solver.hpp"

namespace esr::app {

inline constexpr const char* kVersion = "0.1.0";

struct CaseRunResult {
  Solution solution;
  std::vector<StepReport> reports;
  double initial_entropy = 0.0;
  double runtime_s = 0.0;
};

struct CaseRunOptions {
  DissipationSpec spec;
  std::size_t cells = 300;
  double cfl = 0.5;
  std::optional<double> t_end;
  bool audit = false;
  ExecutionPolicy policy = ExecutionPolicy::kOpenMP;
};

CaseRunResult run_case(const CaseDefinition& c, const CaseRunOptions& options);

/// Exact Burgers cell averages on the given interfaces.
Solution exact_burgers_solution(const CaseDefinition& c, const std::vector<double>& interfaces,
                                double t);

struct Reference {
  Solution solution;
  std::map<std::string, std::string> metadata;
};

/// Fine-grid LLF surrogate (MHD) or exact cell averages (Burgers) on ref_cells cells.
Reference make_reference(const CaseDefinition& c, std::size_t ref_cells, double cfl,
                         ExecutionPolicy policy = ExecutionPolicy::kOpenMP);
/// Writes the CSV and a `<path>.meta` sidecar of `key = value` lines.
void write_reference(const Reference& ref, const std::string& path);

/// Exact integral of |run - ref| over the common domain of two piecewise-constant
/// solutions. Throws GridMismatch if the domains differ.
double l1_distance(const Solution& run, const Solution& ref, const std::string& variable);
double linf_distance(const Solution& run, const Solution& ref, const std::string& variable);

struct VariableDistance {
  std::string variable;
  double l1 = 0.0;
  double linf = 0.0;
};

struct SchemeComparison {
  std::string scheme;
  std::vector<VariableDistance> distances;
  double entropy_dissipated = 0.0;
  double runtime_s = 0.0;

  const VariableDistance& distance(const std::string& variable) const;
};

struct ComparisonReport {
  std::string case_name;
  std::size_t cells = 0;
  std::vector<SchemeComparison> entries;
};

/// Concurrency cap for comparison runs: ES_RIEMANN_THREADS, else `runs`.
std::size_t comparison_threads(std::size_t runs);

/// Runs every scheme on the same case and grid and measures each against `reference`.
ComparisonReport compare(const CaseDefinition& c, const std::vector<DissipationSpec>& schemes,
                         const CaseRunOptions& base, const Solution& reference,
                         std::size_t max_threads);

/// scheme,variable,l1,linf,entropy_dissipated
std::string comparison_csv(const ComparisonReport& report);

/// lambda,d_LF,d_HLL,d_LW,d_HLLomega,d_HLLXomega
std::string dissipation_curves_csv(double lambda_L, double lambda_R, double omega,
                                   double dx_over_dt, int samples);
void emit_dissipation_curves(double lambda_L, double lambda_R, double omega, double dx_over_dt,
                             int samples, const std::string& path);

}  // namespace esr::app
