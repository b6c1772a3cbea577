#include <doctest.h>

#include <cmath>

#include "esr/app/cases.hpp"
#include "esr/app/driver.hpp"
#include "esr/ec_flux.hpp"
#include "esr/error.hpp"
#include "esr/fv_solver.hpp"

using namespace esr;

namespace {

Grid1D<Burgers> burgers_grid(std::vector<double> values, double dx) {
  Grid1D<Burgers> g;
  for (std::size_t i = 0; i <= values.size(); ++i) g.interfaces.push_back(dx * i);
  for (double u : values) g.states.push_back(Burgers::make(u));
  return g;
}

template <class System>
typename System::State total(const Grid1D<System>& g) {
  typename System::State sum = System::State::Zero();
  for (std::size_t i = 0; i < g.cells(); ++i) sum += g.states[i] * g.width(i);
  return sum;
}

}  // namespace

TEST_CASE("compute_dt follows the CFL rule") {
  const Burgers sys;
  const auto g = burgers_grid({1.0, 2.0, 1.0, -1.0}, 0.1);
  SolverSettings s;
  s.spec = {DissipationKind::kLLF};
  s.cfl = 0.5;
  s.t_end = 10.0;
  const DirichletBc<Burgers> bc{Burgers::make(1.0), Burgers::make(-1.0)};
  CHECK(compute_dt(sys, g, bc, s, 0.0) == doctest::Approx(0.025).epsilon(1e-15));

  s.t_end = 0.01;
  CHECK(compute_dt(sys, g, bc, s, 0.0) == 0.01);
  CHECK(compute_dt(sys, g, bc, s, 0.004) == 0.01 - 0.004);
}

TEST_CASE("compute_dt uses boundary speeds over a resting field") {
  const Burgers sys;
  const auto g = burgers_grid({0.0, 0.0, 0.0}, 0.1);
  SolverSettings s;
  s.spec = {DissipationKind::kLLF};
  s.t_end = 10.0;
  // only the first cell sees the boundary speed 4
  CHECK(compute_dt(sys, g, {Burgers::make(4.0), Burgers::make(0.0)}, s, 0.0) ==
        doctest::Approx(0.5 * 0.1 / 4.0).epsilon(1e-15));
  try {
    compute_dt(sys, g, {Burgers::make(0.0), Burgers::make(0.0)}, s, 0.0);
    FAIL("expected ZeroWaveSpeed");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroWaveSpeed);
  }
}

TEST_CASE("constant states stay constant") {
  const IdealMhd mhd;
  const auto q = mhd.prim_to_cons({1.2, {0.3, -0.1, 0.2}, 0.8, {0.5, 0.4, -0.3}});
  auto g = make_grid<IdealMhd>(uniform_interfaces(0.0, 1.0, 20), [&](double) { return q; });
  for (const DissipationSpec spec :
       {DissipationSpec{DissipationKind::kLF}, DissipationSpec{DissipationKind::kLLF},
        DissipationSpec{DissipationKind::kHLL}, DissipationSpec{DissipationKind::kLW},
        DissipationSpec{DissipationKind::kHllOmega, 0.4},
        DissipationSpec{DissipationKind::kHllxOmega, 0.4}}) {
    SolverSettings s;
    s.spec = spec;
    const auto [next, report] = step(mhd, g, {q, q}, s, 0.0, 0.01);
    for (const auto& state : next.states)
      CHECK((state - q).norm() <= 1e-14 * q.norm());
  }
}

TEST_CASE("single Burgers step uses the LLF interface flux") {
  const Burgers sys;
  auto g = burgers_grid({2.0, 0.0}, 1.0);
  SolverSettings s;
  s.spec = {DissipationKind::kLLF};
  const double dt = 0.1;
  const auto [next, report] = step(sys, g, {Burgers::make(2.0), Burgers::make(0.0)}, s, 0.0, dt);
  // left ghost flux = f(2) = 2, middle flux = 8/3
  CHECK(next.states[0][0] == doctest::Approx(2.0 - dt * (8.0 / 3.0 - 2.0)).epsilon(1e-15));
  CHECK(report.dt == dt);
  CHECK(report.t == dt);
  CHECK(report.max_interface_production <= 0.0);
}

TEST_CASE("conservation up to boundary fluxes") {
  const IdealMhd mhd;
  const auto& c = app::find_case("torrilhon");
  auto g = app::initial_grid_mhd(c, 100);
  const auto bc = app::boundary_mhd(c);
  SolverSettings s;
  s.spec = {DissipationKind::kHllxOmega, 0.4};
  s.t_end = 1.0;
  Stepper<IdealMhd> stepper(mhd, bc, s);
  double t = 0.0;
  for (int n = 0; n < 50; ++n) {
    const auto before = total(g);
    const double dt = stepper.compute_dt(g, t);
    stepper.advance(g, t, dt);
    const auto& f = stepper.last_fluxes().flux;
    const Vec<8> expected = before - dt * (f.back() - f.front());
    const Vec<8> after = total(g);
    CHECK((after - expected).norm() <= 1e-12 * before.norm());
    CHECK(after[mhd::kBx] == doctest::Approx(before[mhd::kBx]).epsilon(1e-15));
    t += dt;
  }
}

TEST_CASE("run edge cases") {
  const Burgers sys;
  const auto g = burgers_grid({1.0, 0.5, 0.0}, 0.1);
  SolverSettings s;
  s.spec = {DissipationKind::kLLF};
  s.t_end = 0.0;
  const auto r = run(sys, g, {Burgers::make(1.0), Burgers::make(0.0)}, s);
  CHECK(r.reports.empty());
  CHECK(r.grid.states == g.states);

  s.t_end = 0.3;
  const auto r2 = run(sys, g, {Burgers::make(1.0), Burgers::make(0.0)}, s);
  REQUIRE(!r2.reports.empty());
  CHECK(r2.reports.back().t == 0.3);

  SolverSettings bad;
  bad.cfl = 1.5;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.cfl = 0.5;
  bad.t_end = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);

  Grid1D<Burgers> tiny = burgers_grid({1.0}, 0.1);
  CHECK_THROWS_AS(run(sys, tiny, {Burgers::make(1.0), Burgers::make(1.0)}, s), Error);
}

TEST_CASE("nonuniform grids use the mean interface width") {
  const Burgers sys;
  Grid1D<Burgers> g;
  g.interfaces = {0.0, 0.1, 0.3, 0.6};
  for (double u : {1.0, 0.5, 0.2}) g.states.push_back(Burgers::make(u));
  SolverSettings s;
  s.spec = {DissipationKind::kLF};
  s.t_end = 1.0;
  const DirichletBc<Burgers> bc{Burgers::make(1.0), Burgers::make(0.2)};
  const double dt = compute_dt(sys, g, bc, s, 0.0);
  CHECK(dt == doctest::Approx(0.5 * 0.1 / 1.0).epsilon(1e-15));
  Stepper<Burgers> stepper(sys, bc, s);
  stepper.advance(g, 0.0, dt);
  // LF flux at the interface between widths 0.1 and 0.2 uses dx = 0.15
  const double f = ec_flux_burgers(1.0, 0.5) - 0.5 * (0.15 / dt) * (0.5 - 1.0);
  CHECK(stepper.last_fluxes().flux[1][0] == doctest::Approx(f).epsilon(1e-14));
}

TEST_CASE("nonphysical updates abort the step") {
  const IdealMhd mhd;
  const auto lo = mhd.prim_to_cons({1.0, {0, 0, 0}, 1e-3, {0, 0, 0}});
  const auto hi = mhd.prim_to_cons({1.0, {40.0, 0, 0}, 1e-3, {0, 0, 0}});
  auto g = make_grid<IdealMhd>(uniform_interfaces(0.0, 1.0, 10),
                               [&](double x) { return x < 0.5 ? hi : lo; });
  SolverSettings s;
  s.spec = {DissipationKind::kNone};
  try {
    step(mhd, g, {hi, lo}, s, 0.0, 0.05);
    FAIL("expected NonphysicalState");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonphysicalState);
    CHECK(std::string(e.what()).find("cell") != std::string::npos);
  }
}

TEST_CASE("Torrilhon run dissipates entropy every step") {
  const auto& c = app::find_case("torrilhon");
  app::CaseRunOptions o;
  o.spec = {DissipationKind::kHllxOmega, 0.925};
  o.cells = 300;
  o.audit = true;
  const auto r = app::run_case(c, o);
  REQUIRE(!r.reports.empty());
  double previous = r.initial_entropy;
  for (const auto& rep : r.reports) {
    const double scale = std::max(std::abs(previous), std::abs(rep.total_entropy));
    CHECK(rep.entropy_change <= 1e-10 * scale);
    previous = rep.total_entropy;
  }
  CHECK(r.reports.back().t == 1.0);
}

TEST_CASE("L1 distance to the fine reference shrinks under refinement") {
  const auto& c = app::find_case("torrilhon");
  const auto ref = app::make_reference(c, 4000, 0.5);  // 10 x the finest K
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t K : {100, 200, 400}) {
    app::CaseRunOptions o;
    o.spec = {DissipationKind::kHllxOmega, 0.925};
    o.cells = K;
    const auto r = app::run_case(c, o);
    const double d = app::l1_distance(r.solution, ref.solution, "B2");
    CHECK(d < previous);
    previous = d;
  }
}
