#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "esr/app/cases.hpp"
#include "esr/app/config.hpp"
#include "esr/app/driver.hpp"
#include "esr/app/solution.hpp"
#include "esr/error.hpp"

using namespace esr;
using namespace esr::app;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "esr_test_cli_app";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ErrorCode parse_error(std::string_view command, const std::vector<std::string>& args) {
  try {
    parse_config(command, args);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse error");
  return ErrorCode::kIo;
}

}  // namespace

TEST_CASE("parse_config defaults and flags") {
  const RunConfig d = parse_config("solve", {});
  CHECK(d.case_name == "torrilhon");
  CHECK(d.cells == 300);
  CHECK(d.cfl == 0.5);
  CHECK(d.spec.kind == DissipationKind::kHllxOmega);
  CHECK(d.spec.omega == 0.925);
  CHECK_FALSE(d.t_end.has_value());

  const RunConfig c = parse_config(
      "solve", {"--case", "torrilhon", "--flux", "hllx-omega", "--omega", "0.925", "--cells", "300"});
  CHECK(c.spec.kind == DissipationKind::kHllxOmega);
  CHECK(c.spec.omega == 0.925);
  CHECK(c.cells == 300);

  const RunConfig s = parse_config("solve", {"--flux", "llf", "--serial", "--tend", "0.25",
                                             "--jump-form", "conserved"});
  CHECK(s.spec.kind == DissipationKind::kLLF);
  CHECK(s.policy == ExecutionPolicy::kSerial);
  CHECK(*s.t_end == 0.25);
  CHECK(s.spec.jump == JumpForm::kConserved);

  CHECK(parse_config("reference", {}).cells == 12000);
  CHECK(parse_config("reference", {}).spec.kind == DissipationKind::kLLF);
  CHECK(parse_config("curves", {}).spec.omega == 0.4);

  const RunConfig cmp = parse_config("compare", {"--schemes", "llf,hllx-omega:0.25,hll-omega"});
  REQUIRE(cmp.schemes.size() == 3);
  CHECK(cmp.schemes[1].omega == 0.25);
  CHECK(cmp.schemes[2].kind == DissipationKind::kHllOmega);
}

TEST_CASE("parse_config errors") {
  CHECK(parse_error("solve", {"--omega", "1.5"}) == ErrorCode::kOmegaOutOfRange);
  CHECK(parse_error("solve", {"--flux", "bogus"}) == ErrorCode::kUsage);
  CHECK(parse_error("solve", {"--cells", "many"}) == ErrorCode::kUsage);
  CHECK(parse_error("solve", {"--cells", "1"}) == ErrorCode::kUsage);
  CHECK(parse_error("solve", {"--cfl", "0"}) == ErrorCode::kUsage);
  CHECK(parse_error("solve", {"--lambda-l", "0"}) == ErrorCode::kUsage);
  CHECK(parse_error("launch", {}) == ErrorCode::kUsage);
  CHECK(parse_error("compare", {"--schemes", "llf,hllx-omega:3"}) == ErrorCode::kOmegaOutOfRange);
  CHECK(config_help("solve").find("--omega") != std::string::npos);
  CHECK(config_help("launch").empty());
}

TEST_CASE("config files supply defaults that flags override") {
  const fs::path cfg = scratch_dir() / "run.cfg";
  write_text_file(cfg.string(),
                  "# torrilhon sweep\ncase = burgers-shock\ncells = 64\nomega = 0.25\n"
                  "schemes = llf\n");
  const RunConfig r = parse_config("solve", {"--config", cfg.string(), "--cells", "128"});
  CHECK(r.case_name == "burgers-shock");
  CHECK(r.cells == 128);
  CHECK(r.spec.omega == 0.25);

  write_text_file(cfg.string(), "celss = 3\n");
  CHECK(parse_error("solve", {"--config", cfg.string()}) == ErrorCode::kUsage);
  CHECK(parse_error("solve", {"--config", (scratch_dir() / "missing.cfg").string()}) ==
        ErrorCode::kIo);
}

TEST_CASE("case registry") {
  const auto& t = find_case("torrilhon");
  CHECK(t.mhd_left.B == Eigen::Vector3d(1.5, 0.5, 0.6));
  CHECK(t.mhd_right.B == Eigen::Vector3d(1.5, 1.6, 0.2));
  CHECK(t.mhd_left.B[0] == t.mhd_right.B[0]);
  CHECK(t.x_min == -4.0);
  CHECK(t.x_max == 4.0);
  CHECK(t.t_end == 1.0);
  CHECK(t.gamma == doctest::Approx(5.0 / 3.0).epsilon(1e-15));
  CHECK(find_case("burgers-rarefaction").u_left == -1.0);
  CHECK(find_case("burgers-shock").u_left == 1.0);
  CHECK_THROWS_AS(find_case("brio-wu"), Error);

  const auto r = find_case("burgers-rarefaction");
  CHECK(burgers_exact(r, 0.25, 0.5) == 0.5);
  CHECK(burgers_exact(r, -0.9, 0.5) == -1.0);
  CHECK(burgers_exact_average(r, -0.5, 0.5, 0.5) == doctest::Approx(0.0).scale(1.0));
  CHECK(burgers_exact_average(r, 0.0, 0.5, 0.5) == doctest::Approx(0.5));
  const auto s = find_case("burgers-shock");
  CHECK(burgers_exact(s, -0.01, 0.5) == 1.0);
  CHECK(burgers_exact(s, 0.01, 0.5) == -1.0);
}

TEST_CASE("solution CSV output is deterministic and round-trips") {
  CaseRunOptions o;
  o.cells = 300;
  o.spec = {DissipationKind::kHllxOmega, 0.925};
  const auto& c = find_case("torrilhon");
  const auto a = run_case(c, o);
  const auto b = run_case(c, o);
  const std::string csv = solution_csv(a.solution);
  CHECK(csv == solution_csv(b.solution));
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 301);
  CHECK(csv.rfind("x,rho,u,v,w,p,B1,B2,B3,S\n", 0) == 0);

  const fs::path path = scratch_dir() / "solution.csv";
  emit_solution_csv(a.solution, path.string());
  CHECK(slurp(path) == csv);
  const Solution back = read_solution_csv(path.string());
  CHECK(back.cells() == 300);
  CHECK(back.column("B2") == a.solution.column("B2"));
  CHECK(back.interfaces.front() == doctest::Approx(-4.0).epsilon(1e-14));
  CHECK(l1_distance(a.solution, a.solution, "B2") == 0.0);
  CHECK(l1_distance(back, a.solution, "rho") <= 1e-12);

  const fs::path audit = scratch_dir() / "audit.csv";
  write_audit_csv(a.reports, audit.string());
  const std::string audit_csv = slurp(audit);
  CHECK(audit_csv.rfind("t,dt,total_entropy,min_production,max_cell_residual\n", 0) == 0);
  CHECK(static_cast<std::size_t>(std::count(audit_csv.begin(), audit_csv.end(), '\n')) ==
        a.reports.size() + 1);
}

TEST_CASE("L1 distance over the common refinement") {
  Solution coarse{{0.0, 1.0, 2.0}, {"u"}, {{1.0, 3.0}}};
  Solution fine{{0.0, 0.5, 1.0, 1.5, 2.0}, {"u"}, {{1.0, 2.0, 3.0, 3.0}}};
  CHECK(l1_distance(coarse, fine, "u") == doctest::Approx(0.5));
  CHECK(l1_distance(fine, coarse, "u") == doctest::Approx(0.5));
  CHECK(linf_distance(coarse, fine, "u") == 1.0);
  Solution shifted{{0.0, 1.0, 2.5}, {"u"}, {{1.0, 3.0}}};
  CHECK_THROWS_AS(l1_distance(coarse, shifted, "u"), Error);
  CHECK_THROWS_AS(l1_distance(coarse, fine, "rho"), Error);
}

TEST_CASE("reference sidecar") {
  const auto& c = find_case("burgers-rarefaction");
  const Reference ref = make_reference(c, 200, 0.5);
  const fs::path path = scratch_dir() / "ref.csv";
  write_reference(ref, path.string());
  const auto meta = read_key_value_file(path.string() + ".meta");
  CHECK(meta.at("case") == "burgers-rarefaction");
  CHECK(meta.at("cells") == "200");
  CHECK(read_solution_csv(path.string()).cells() == 200);
}

TEST_CASE("dissipation curves") {
  const std::string csv = dissipation_curves_csv(-1.0, 1.0, 0.4, 1.0, 5);
  CHECK(csv.rfind("lambda,d_LF,d_HLL,d_LW,d_HLLomega,d_HLLXomega\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string cell;
    std::getline(row, cell, ',');  // lambda
    while (std::getline(row, cell, ',')) CHECK(std::stod(cell) >= 0.0);
    ++rows;
  }
  CHECK(rows == 5);
  // HLL at (-1, 1) is flat at max|lambda| = LF level with dx/dt = 1
  CHECK(csv.find("0,1,1,0,") != std::string::npos);
}

TEST_CASE("Burgers comparisons") {
  const auto& c = find_case("burgers-rarefaction");
  CaseRunOptions o;
  o.cells = 400;
  const Solution exact = exact_burgers_solution(c, uniform_interfaces(c.x_min, c.x_max, 400), 0.5);
  const std::vector<DissipationSpec> schemes = {
      {DissipationKind::kRoeScalar}, {DissipationKind::kHLL}, {DissipationKind::kHllxOmega, 0.925}};
  const auto report = compare(c, schemes, o, exact, 3);
  REQUIRE(report.entries.size() == 3);
  const double roe = report.entries[0].distance("u").l1;
  const double hll = report.entries[1].distance("u").l1;
  CHECK(roe <= 2.0 * hll);
  CHECK(hll <= 2.0 * roe);
  CHECK(hll <= 2e-2);
  CHECK(report.entries[2].distance("u").l1 <= 2e-2);
  for (const auto& e : report.entries) CHECK(e.entropy_dissipated >= 0.0);

  // identical results whatever the worker count
  const auto serial = compare(c, schemes, o, exact, 1);
  CHECK(comparison_csv(serial).substr(0, 40) == comparison_csv(report).substr(0, 40));
  for (std::size_t k = 0; k < 3; ++k)
    CHECK(serial.entries[k].distance("u").l1 == report.entries[k].distance("u").l1);
}

TEST_CASE("comparison thread cap") {
  ::setenv("ES_RIEMANN_THREADS", "2", 1);
  CHECK(comparison_threads(5) == 2);
  ::setenv("ES_RIEMANN_THREADS", "9", 1);
  CHECK(comparison_threads(5) == 5);
  ::unsetenv("ES_RIEMANN_THREADS");
  CHECK(comparison_threads(3) == 3);
}
