#include "esr/app/config.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <sstream>

#include "esr/app/solution.hpp"
#include "esr/error.hpp"

namespace esr::app {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double x = std::stod(text, &used);
    if (used == text.size()) return x;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kUsage, "invalid " + what + " '" + text + "'");
}

bool is_flag_option(const std::string& key) {
  return key == "audit" || key == "serial";
}

constexpr std::string_view kAllKeys[] = {
    "config", "out",   "omega", "case",  "cells",     "cfl",      "tend",     "serial",
    "flux",   "jump-form", "audit", "audit-out", "schemes", "reference", "ref-cells",
    "lambda-l", "lambda-r", "dx-over-dt", "samples"};

/// Turns config-file entries into leading flags so later command-line flags
/// win. Keys that belong to another subcommand are ignored.
std::vector<std::string> file_args(const std::string& path, const CLI::App& app) {
  std::vector<std::string> out;
  for (const auto& [key, value] : read_key_value_file(path)) {
    if (app.get_option_no_throw("--" + key) == nullptr) {
      if (std::find(std::begin(kAllKeys), std::end(kAllKeys), key) != std::end(kAllKeys)) continue;
      throw Error(ErrorCode::kUsage, "unknown config key '" + key + "' in " + path);
    }
    if (key == "config") continue;
    if (is_flag_option(key)) {
      if (value == "true" || value == "on" || value == "1") out.push_back("--" + key);
      else if (!(value == "false" || value == "off" || value == "0"))
        throw Error(ErrorCode::kUsage, "config key '" + key + "' expects true or false");
      continue;
    }
    out.push_back("--" + key);
    out.push_back(value);
  }
  return out;
}

std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  return path;
}

}  // namespace

DissipationSpec parse_scheme(std::string_view text, double default_omega) {
  DissipationSpec spec;
  const auto colon = text.find(':');
  spec.kind = parse_dissipation_kind(text.substr(0, colon));
  spec.omega = colon == std::string_view::npos
                   ? default_omega
                   : parse_number(std::string(text.substr(colon + 1)), "omega");
  spec.validate();
  return spec;
}

namespace {

/// Locals bound to CLI11 options before they are folded into RunConfig.
struct Bindings {
  std::string config_file;
  std::string flux;
  std::string jump = "entropy";
  std::string schemes;
  double t_end = 0.0;
  bool serial = false;
  std::string reference_path;
};

bool known_command(std::string_view c) {
  return c == "solve" || c == "reference" || c == "compare" || c == "curves";
}

void set_command_defaults(std::string_view command, RunConfig& cfg) {
  cfg.command = std::string(command);
  if (command == "reference") {
    cfg.cells = 12000;
    cfg.out = "reference.csv";
  }
  if (command == "compare") cfg.out = "comparison.csv";
  if (command == "curves") {
    cfg.out = "curves.csv";
    cfg.spec.omega = 0.4;
  }
}

void add_options(CLI::App& app, std::string_view command, RunConfig& cfg, Bindings& b) {
  const bool solve = command == "solve";
  const bool compare = command == "compare";
  const bool curves = command == "curves";
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  b.flux = std::string(to_string(cfg.spec.kind));

  app.add_option("--config", b.config_file, "key = value file; flags override it");
  app.add_option("--out", cfg.out, "output path");
  app.add_option("--omega", cfg.spec.omega, "hybrid parameter in [0, 1]");
  if (!curves) {
    app.add_option("--case", cfg.case_name, "torrilhon | burgers-rarefaction | burgers-shock");
    app.add_option("--cells", cfg.cells, "number of cells");
    app.add_option("--cfl", cfg.cfl, "CFL number in (0, 1]");
    app.add_option("--tend", b.t_end, "final time (default: case value)");
    app.add_flag("--serial", b.serial, "disable OpenMP kernels");
  }
  if (solve) {
    app.add_option("--flux", b.flux, "lf | llf | hll | lw | hll-omega | hllx-omega | roe | ec");
    app.add_option("--jump-form", b.jump, "entropy (D H [[v]]) | conserved (D [[q]])");
    app.add_flag("--audit", cfg.audit, "entropy audit; violations abort the run");
    app.add_option("--audit-out", cfg.audit_out, "audit CSV path");
  }
  if (compare) {
    app.add_option("--schemes", b.schemes, "comma list, e.g. llf,hllx-omega:0.925");
    app.add_option("--reference", b.reference_path, "reference solution CSV");
    app.add_option("--ref-cells", cfg.ref_cells, "fine-grid cells when no reference is given");
  }
  if (curves) {
    app.add_option("--lambda-l", cfg.lambda_l, "left wave speed");
    app.add_option("--lambda-r", cfg.lambda_r, "right wave speed");
    app.add_option("--dx-over-dt", cfg.dx_over_dt, "dx/dt, the LF dissipation level");
    app.add_option("--samples", cfg.samples, "number of samples");
  }
}

}  // namespace

std::string config_help(std::string_view command) {
  if (!known_command(command)) return {};
  RunConfig cfg;
  Bindings b;
  set_command_defaults(command, cfg);
  CLI::App app{"es_riemann " + std::string(command)};
  add_options(app, command, cfg, b);
  return app.help();
}

RunConfig parse_config(std::string_view command, const std::vector<std::string>& args) {
  if (!known_command(command))
    throw Error(ErrorCode::kUsage, "unknown command '" + std::string(command) +
                                       "' (expected solve, reference, compare, curves)");
  const bool reference = command == "reference";
  const bool compare = command == "compare";
  const bool curves = command == "curves";

  RunConfig cfg;
  Bindings b;
  set_command_defaults(command, cfg);
  CLI::App app{"es_riemann " + std::string(command)};
  add_options(app, command, cfg, b);

  std::vector<std::string> all;
  if (const auto path = find_config_path(args)) all = file_args(*path, app);
  all.insert(all.end(), args.begin(), args.end());
  std::vector<std::string> reversed(all.rbegin(), all.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::kUsage, std::string(e.what()) + "\n" + app.help());
  }

  if (const auto* tend = app.get_option_no_throw("--tend"); tend && tend->count() > 0)
    cfg.t_end = b.t_end;
  if (b.serial) cfg.policy = ExecutionPolicy::kSerial;
  if (!b.reference_path.empty()) cfg.reference = b.reference_path;
  cfg.spec.kind = parse_dissipation_kind(b.flux);
  if (b.jump == "conserved") cfg.spec.jump = JumpForm::kConserved;
  else if (b.jump != "entropy")
    throw Error(ErrorCode::kUsage, "--jump-form expects entropy or conserved");
  if (reference) cfg.spec = {DissipationKind::kLLF, 0.0, JumpForm::kEntropyVariables};
  if (!reference) cfg.spec.validate();
  if (compare) {
    for (const auto& s : split_list(b.schemes)) cfg.schemes.push_back(parse_scheme(s, cfg.spec.omega));
  }
  if (cfg.cells < 2) throw Error(ErrorCode::kUsage, "--cells must be at least 2");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw Error(ErrorCode::kUsage, "--cfl must lie in (0, 1]");
  if (cfg.t_end && !(*cfg.t_end >= 0.0)) throw Error(ErrorCode::kUsage, "--tend must be >= 0");
  if (curves && cfg.samples < 2) throw Error(ErrorCode::kUsage, "--samples must be at least 2");
  if (curves && !(cfg.lambda_l < cfg.lambda_r))
    throw Error(ErrorCode::kUsage, "--lambda-l must be smaller than --lambda-r");
  if (curves && !(cfg.dx_over_dt > 0.0)) throw Error(ErrorCode::kUsage, "--dx-over-dt must be > 0");
  return cfg;
}

}  // namespace esr::app
