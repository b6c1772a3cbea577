#include "esr/app/driver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <thread>

#include "esr/error.hpp"

namespace esr::app {

namespace {

template <class System>
CaseRunResult finish(const System& sys, const RunResult<System>& r, double seconds) {
  CaseRunResult out;
  out.solution = to_solution(sys, r.grid);
  out.reports = r.reports;
  out.initial_entropy = r.initial_entropy;
  out.runtime_s = seconds;
  return out;
}

std::vector<std::string> compared_variables(const Solution& s) {
  std::vector<std::string> out;
  for (const auto& c : s.columns) {
    if (c != "S") out.push_back(c);
  }
  return out;
}

void check_domains(const Solution& a, const Solution& b) {
  const double length = a.interfaces.back() - a.interfaces.front();
  const double tol = 1e-9 * length;
  if (std::abs(a.interfaces.front() - b.interfaces.front()) > tol ||
      std::abs(a.interfaces.back() - b.interfaces.back()) > tol)
    throw Error(ErrorCode::kGridMismatch, "run and reference cover different domains");
}

/// Visits the common refinement of two partitions: f(run value, ref value, length).
template <class F>
void for_each_overlap(const Solution& run, const Solution& ref, const std::vector<double>& a,
                      const std::vector<double>& b, F&& f) {
  std::size_t i = 0, k = 0;
  while (i < run.cells() && k < ref.cells()) {
    const double lo = std::max(run.interfaces[i], ref.interfaces[k]);
    const double hi = std::min(run.interfaces[i + 1], ref.interfaces[k + 1]);
    if (hi > lo) f(a[i], b[k], hi - lo);
    if (run.interfaces[i + 1] < ref.interfaces[k + 1]) ++i;
    else ++k;
  }
}

}  // namespace

CaseRunResult run_case(const CaseDefinition& c, const CaseRunOptions& options) {
  SolverSettings settings;
  settings.spec = options.spec;
  settings.cfl = options.cfl;
  settings.t_end = options.t_end.value_or(c.t_end);
  settings.audit = options.audit;
  settings.policy = options.policy;

  const auto start = std::chrono::steady_clock::now();
  const auto seconds = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  if (c.system == SystemKind::kIdealMhd) {
    const IdealMhd sys(c.gamma);
    const auto r = run(sys, initial_grid_mhd(c, options.cells), boundary_mhd(c), settings);
    return finish(sys, r, seconds());
  }
  const Burgers sys;
  const auto r = run(sys, initial_grid_burgers(c, options.cells), boundary_burgers(c), settings);
  return finish(sys, r, seconds());
}

Solution exact_burgers_solution(const CaseDefinition& c, const std::vector<double>& interfaces,
                                double t) {
  Solution s;
  s.interfaces = interfaces;
  s.columns = {"u", "S"};
  s.values.assign(2, std::vector<double>(interfaces.size() - 1));
  for (std::size_t i = 0; i + 1 < interfaces.size(); ++i) {
    const double u = burgers_exact_average(c, interfaces[i], interfaces[i + 1], t);
    s.values[0][i] = u;
    s.values[1][i] = 0.5 * u * u;
  }
  return s;
}

Reference make_reference(const CaseDefinition& c, std::size_t ref_cells, double cfl,
                         ExecutionPolicy policy) {
  Reference ref;
  ref.metadata["case"] = c.name;
  ref.metadata["cells"] = std::to_string(ref_cells);
  ref.metadata["t_end"] = format_double(c.t_end);
  ref.metadata["version"] = kVersion;
  if (c.system == SystemKind::kBurgers) {
    ref.solution =
        exact_burgers_solution(c, uniform_interfaces(c.x_min, c.x_max, ref_cells), c.t_end);
    ref.metadata["scheme"] = "exact";
    return ref;
  }
  CaseRunOptions options;
  options.spec = {DissipationKind::kLLF, 0.0, JumpForm::kEntropyVariables};
  options.cells = ref_cells;
  options.cfl = cfl;
  options.policy = policy;
  ref.solution = run_case(c, options).solution;
  ref.metadata["scheme"] = "llf";
  ref.metadata["cfl"] = format_double(cfl);
  return ref;
}

void write_reference(const Reference& ref, const std::string& path) {
  emit_solution_csv(ref.solution, path);
  write_key_value_file(ref.metadata, path + ".meta");
}

double l1_distance(const Solution& run, const Solution& ref, const std::string& variable) {
  check_domains(run, ref);
  double sum = 0.0;
  for_each_overlap(run, ref, run.column(variable), ref.column(variable),
                   [&](double a, double b, double len) { sum += std::abs(a - b) * len; });
  return sum;
}

double linf_distance(const Solution& run, const Solution& ref, const std::string& variable) {
  check_domains(run, ref);
  double worst = 0.0;
  for_each_overlap(run, ref, run.column(variable), ref.column(variable),
                   [&](double a, double b, double) { worst = std::max(worst, std::abs(a - b)); });
  return worst;
}

const VariableDistance& SchemeComparison::distance(const std::string& variable) const {
  for (const auto& d : distances) {
    if (d.variable == variable) return d;
  }
  throw Error(ErrorCode::kGridMismatch, "no distance recorded for '" + variable + "'");
}

std::size_t comparison_threads(std::size_t runs) {
  if (const char* env = std::getenv("ES_RIEMANN_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return std::min<std::size_t>(runs, n);
  }
  return std::max<std::size_t>(runs, 1);
}

ComparisonReport compare(const CaseDefinition& c, const std::vector<DissipationSpec>& schemes,
                         const CaseRunOptions& base, const Solution& reference,
                         std::size_t max_threads) {
  const std::size_t n = schemes.size();
  const std::size_t workers = std::clamp<std::size_t>(max_threads, 1, std::max<std::size_t>(n, 1));
  std::vector<CaseRunResult> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        CaseRunOptions options = base;
        options.spec = schemes[k];
        // one run per thread; inner kernels stay serial to avoid oversubscription
        if (workers > 1) options.policy = ExecutionPolicy::kSerial;
        results[k] = run_case(c, options);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  ComparisonReport report;
  report.case_name = c.name;
  report.cells = base.cells;
  for (std::size_t k = 0; k < n; ++k) {
    SchemeComparison entry;
    entry.scheme = label(schemes[k]);
    for (const auto& var : compared_variables(results[k].solution)) {
      entry.distances.push_back({var, l1_distance(results[k].solution, reference, var),
                                 linf_distance(results[k].solution, reference, var)});
    }
    for (const auto& r : results[k].reports) entry.entropy_dissipated -= r.entropy_change;
    entry.runtime_s = results[k].runtime_s;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string comparison_csv(const ComparisonReport& report) {
  // wall-clock runtime stays out of the file so that reruns are byte-identical
  std::string out = "scheme,variable,l1,linf,entropy_dissipated\n";
  for (const auto& e : report.entries) {
    for (const auto& d : e.distances) {
      out += e.scheme + "," + d.variable + "," + format_double(d.l1) + "," + format_double(d.linf) +
             "," + format_double(e.entropy_dissipated) + "\n";
    }
  }
  return out;
}

std::string dissipation_curves_csv(double lambda_L, double lambda_R, double omega,
                                   double dx_over_dt, int samples) {
  const double dtdx = 1.0 / dx_over_dt;
  const DissipationSpec specs[] = {
      {DissipationKind::kLF, omega, JumpForm::kEntropyVariables},
      {DissipationKind::kHLL, omega, JumpForm::kEntropyVariables},
      {DissipationKind::kLW, omega, JumpForm::kEntropyVariables},
      {DissipationKind::kHllOmega, omega, JumpForm::kEntropyVariables},
      {DissipationKind::kHllxOmega, omega, JumpForm::kEntropyVariables},
  };
  std::vector<std::vector<std::pair<double, double>>> curves;
  for (const auto& s : specs)
    curves.push_back(scalar_dissipation_curve(s, lambda_L, lambda_R, samples, dtdx));

  std::string out = "lambda,d_LF,d_HLL,d_LW,d_HLLomega,d_HLLXomega\n";
  for (int k = 0; k < samples; ++k) {
    out += format_double(curves[0][k].first);
    for (const auto& c : curves) out += "," + format_double(c[k].second);
    out += '\n';
  }
  return out;
}

void emit_dissipation_curves(double lambda_L, double lambda_R, double omega, double dx_over_dt,
                             int samples, const std::string& path) {
  write_text_file(path, dissipation_curves_csv(lambda_L, lambda_R, omega, dx_over_dt, samples));
}

}  // namespace esr::app
