// es_riemann: entropy-stable HLL-type finite-volume solver front end.
//
//   es_riemann solve     --case torrilhon --flux hllx-omega --omega 0.925 --cells 300
//   es_riemann reference --case torrilhon --cells 12000 --out reference.csv
//   es_riemann compare   --case torrilhon --schemes llf,hllx-omega:0.925 --reference reference.csv
//   es_riemann curves    --lambda-l -1 --lambda-r 1 --omega 0.4
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "esr/app/cases.hpp"
#include "esr/app/config.hpp"
#include "esr/app/driver.hpp"
#include "esr/app/solution.hpp"
#include "esr/error.hpp"

namespace {

using namespace esr;
using namespace esr::app;

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

const char* kUsage =
    "usage: es_riemann <solve|reference|compare|curves> [flags]\n"
    "       es_riemann <command> --help\n";

CaseRunOptions options_from(const RunConfig& cfg) {
  CaseRunOptions o;
  o.spec = cfg.spec;
  o.cells = cfg.cells;
  o.cfl = cfg.cfl;
  o.t_end = cfg.t_end;
  o.audit = cfg.audit;
  o.policy = cfg.policy;
  return o;
}

int solve(const RunConfig& cfg) {
  const CaseDefinition& c = find_case(cfg.case_name);
  const CaseRunResult r = run_case(c, options_from(cfg));
  emit_solution_csv(r.solution, cfg.out);
  if (cfg.audit_out) write_audit_csv(r.reports, *cfg.audit_out);
  const double final_entropy = r.reports.empty() ? r.initial_entropy : r.reports.back().total_entropy;
  std::printf("%s %s K=%zu steps=%zu entropy %.6e -> %.6e (%.3f s) -> %s\n", c.name.c_str(),
              label(cfg.spec).c_str(), cfg.cells, r.reports.size(), r.initial_entropy,
              final_entropy, r.runtime_s, cfg.out.c_str());
  return 0;
}

int reference(const RunConfig& cfg) {
  const CaseDefinition& c = find_case(cfg.case_name);
  const Reference ref = make_reference(c, cfg.cells, cfg.cfl, cfg.policy);
  write_reference(ref, cfg.out);
  std::printf("%s reference (%s, K=%zu) -> %s\n", c.name.c_str(),
              ref.metadata.at("scheme").c_str(), cfg.cells, cfg.out.c_str());
  return 0;
}

int compare_cmd(RunConfig cfg) {
  const CaseDefinition& c = find_case(cfg.case_name);
  if (cfg.schemes.empty()) {
    if (c.system == SystemKind::kIdealMhd) {
      cfg.schemes = {parse_scheme("llf", 0.0), parse_scheme("hllx-omega", cfg.spec.omega)};
    } else {
      cfg.schemes = {parse_scheme("roe", 0.0), parse_scheme("hll", 0.0),
                     parse_scheme("hllx-omega", cfg.spec.omega)};
    }
  }
  Solution ref;
  if (cfg.reference) {
    ref = read_solution_csv(*cfg.reference);
  } else if (c.system == SystemKind::kBurgers) {
    ref = exact_burgers_solution(c, uniform_interfaces(c.x_min, c.x_max, cfg.cells),
                                 cfg.t_end.value_or(c.t_end));
  } else {
    std::fprintf(stderr, "building fine-grid reference with %zu cells...\n", cfg.ref_cells);
    ref = make_reference(c, cfg.ref_cells, cfg.cfl, cfg.policy).solution;
  }
  const ComparisonReport report =
      compare(c, cfg.schemes, options_from(cfg), ref, comparison_threads(cfg.schemes.size()));
  write_text_file(cfg.out, comparison_csv(report));
  for (const auto& e : report.entries) {
    std::printf("%-22s", e.scheme.c_str());
    for (const auto& d : e.distances) std::printf(" L1(%s)=%.4e", d.variable.c_str(), d.l1);
    std::printf(" dS=%.4e (%.3f s)\n", e.entropy_dissipated, e.runtime_s);
  }
  return 0;
}

int curves(const RunConfig& cfg) {
  emit_dissipation_curves(cfg.lambda_l, cfg.lambda_r, cfg.spec.omega, cfg.dx_over_dt, cfg.samples,
                          cfg.out);
  std::printf("dissipation curves (omega = %g) -> %s\n", cfg.spec.omega, cfg.out.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return kExitUsage;
  }
  const std::string command = argv[1];
  const std::vector<std::string> args(argv + 2, argv + argc);
  if (command == "--help" || command == "-h") {
    std::cout << kUsage;
    return 0;
  }
  for (const auto& a : args) {
    if (a == "--help" || a == "-h") {
      const std::string help = config_help(command);
      if (help.empty()) {
        std::cerr << kUsage;
        return kExitUsage;
      }
      std::cout << help;
      return 0;
    }
  }
  try {
    const RunConfig cfg = parse_config(command, args);
    if (command == "solve") return solve(cfg);
    if (command == "reference") return reference(cfg);
    if (command == "compare") return compare_cmd(cfg);
    return curves(cfg);
  } catch (const Error& e) {
    std::cerr << "es_riemann: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kUsage:
      case ErrorCode::kOmegaOutOfRange:
      case ErrorCode::kIo:  // unreadable input or unwritable output path
        return kExitUsage;
      default:
        return kExitNumerical;
    }
  } catch (const std::exception& e) {
    std::cerr << "es_riemann: " << e.what() << "\n";
    return 1;
  }
}
