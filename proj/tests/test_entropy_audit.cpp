#include <doctest.h>

#include <cmath>
#include <random>

#include "esr/entropy_audit.hpp"
#include "esr/fv_solver.hpp"
#include "test_support.hpp"

using namespace esr;

namespace {
const IdealMhd kMhd(5.0 / 3.0);
}

TEST_CASE("interface production is nonpositive") {
  const Burgers burgers;
  CHECK(interface_production(burgers, {DissipationKind::kLLF}, Burgers::make(1.0),
                             Burgers::make(1.0), 0.1) == 0.0);
  CHECK(interface_production(burgers, {DissipationKind::kLLF}, Burgers::make(2.0),
                             Burgers::make(0.0), 0.1) == doctest::Approx(-4.0));

  std::mt19937_64 rng(43);
  for (int n = 0; n < 200; ++n) {
    const auto [qL, qR] = esr::test::random_mhd_pair(rng, kMhd);
    for (const DissipationSpec spec :
         {DissipationSpec{DissipationKind::kLF}, DissipationSpec{DissipationKind::kLLF},
          DissipationSpec{DissipationKind::kHLL}, DissipationSpec{DissipationKind::kLW},
          DissipationSpec{DissipationKind::kHllOmega, 0.6},
          DissipationSpec{DissipationKind::kHllxOmega, 0.6}}) {
      const auto ctx = make_interface_context(kMhd, qL, qR, 0.1);
      const auto diss = apply_dissipation<IdealMhd>(spec, ctx);
      const double p = interface_production(kMhd, spec, qL, qR, 0.1);
      CHECK_FALSE(production_violates(p, ctx.jump_v.norm() * diss.norm()));
    }
  }
}

TEST_CASE("a negated dissipation operator is flagged") {
  std::mt19937_64 rng(44);
  const auto [qL, qR] = esr::test::random_mhd_pair(rng, kMhd);
  const auto ctx = make_interface_context(kMhd, qL, qR, 0.1);
  const Vec<8> negated = -apply_dissipation<IdealMhd>({DissipationKind::kLLF}, ctx);
  const double p = -0.5 * ctx.jump_v.dot(negated);
  CHECK(p > 0.0);
  const auto record = make_audit_record(3, p, ctx.jump_v.norm() * negated.norm());
  CHECK(record.violation);
  CHECK(record.interface_index == 3);
  CHECK_FALSE(make_audit_record(0, -p, 1.0).violation);
}

TEST_CASE("SPD diagnostics") {
  const Burgers burgers;
  const auto bctx = make_interface_context(burgers, Burgers::make(-0.5), Burgers::make(2.0), 0.1);
  const auto bd = spd_diagnostic<Burgers>({DissipationKind::kLLF}, bctx);
  CHECK(bd.symmetry_defect == 0.0);
  CHECK(bd.min_quadratic_ratio == 2.0);

  std::mt19937_64 rng(45);
  for (int n = 0; n < 50; ++n) {
    const auto [qL, qR] = esr::test::random_mhd_pair(rng, kMhd);
    const auto ctx = make_interface_context(kMhd, qL, qR, 0.1);
    for (const DissipationSpec spec :
         {DissipationSpec{DissipationKind::kHLL}, DissipationSpec{DissipationKind::kLW},
          DissipationSpec{DissipationKind::kHllOmega, 0.3},
          DissipationSpec{DissipationKind::kHllxOmega, 0.3}}) {
      const auto d = spd_diagnostic<IdealMhd>(spec, ctx);
      CHECK(d.symmetry_defect <= 1e-10);
    }
    const auto lf = spd_diagnostic<IdealMhd>({DissipationKind::kLF}, ctx);
    CHECK(lf.symmetry_defect <= 1e-14);
    CHECK(lf.min_quadratic_ratio > 0.0);
    const auto lw = spd_diagnostic<IdealMhd>({DissipationKind::kLW}, ctx);
    CHECK(lw.min_quadratic_ratio >= -1e-10 * std::max(1.0, lf.min_quadratic_ratio));
  }
}

TEST_CASE("cell entropy residuals") {
  const Burgers sys;
  SUBCASE("constant state") {
    auto g = make_grid<Burgers>(uniform_interfaces(0.0, 1.0, 16),
                                [](double) { return Burgers::make(0.7); });
    SolverSettings s;
    s.spec = {DissipationKind::kLLF};
    Stepper<Burgers> stepper(sys, {Burgers::make(0.7), Burgers::make(0.7)}, s);
    const auto before = g;
    stepper.advance(g, 0.0, 0.01);
    const auto res = cell_entropy_residual(
        sys, before, g, std::span<const double>(stepper.last_fluxes().entropy_flux), 0.01);
    for (double r : res) CHECK(std::abs(r) <= 1e-13);
  }

  SUBCASE("EC flux on smooth data leaves only the time-stepping defect") {
    // Semi-discretely the residual vanishes; forward Euler adds
    // S(u') - S(u) - v.(u' - u) = (u' - u)^2 / 2 >= 0, i.e. O(dt).
    const double pi = std::acos(-1.0);
    auto init = [&](double x) { return Burgers::make(1.0 + 0.2 * std::sin(2.0 * pi * x)); };
    auto max_residual = [&](double dt) {
      auto g = make_grid<Burgers>(uniform_interfaces(0.0, 1.0, 64), init);
      SolverSettings s;
      s.spec = {DissipationKind::kNone};
      Stepper<Burgers> stepper(sys, {init(0.0), init(1.0)}, s);
      const auto before = g;
      stepper.advance(g, 0.0, dt);
      const auto res = cell_entropy_residual(
          sys, before, g, std::span<const double>(stepper.last_fluxes().entropy_flux), dt);
      double worst = 0.0;
      for (std::size_t i = 0; i < res.size(); ++i) {
        const double du = g.states[i][0] - before.states[i][0];
        CHECK(std::abs(res[i] - 0.5 * du * du / dt) <= 1e-10);  // cancellation in S' - S
        worst = std::max(worst, std::abs(res[i]));
      }
      return worst;
    };
    const double r1 = max_residual(1e-4);
    const double r2 = max_residual(5e-5);
    CHECK(r1 > 0.0);
    CHECK(r1 < 1e-2);
    CHECK(r2 / r1 == doctest::Approx(0.5).epsilon(1e-3));
  }

  SUBCASE("dissipative run has nonpositive residuals up to the time error") {
    auto g = make_grid<Burgers>(uniform_interfaces(-1.0, 1.0, 50),
                                [](double x) { return Burgers::make(x < 0 ? 1.0 : -1.0); });
    SolverSettings s;
    s.spec = {DissipationKind::kLLF};
    s.audit = true;
    Stepper<Burgers> stepper(sys, {Burgers::make(1.0), Burgers::make(-1.0)}, s);
    const auto report = stepper.advance(g, 0.0, stepper.compute_dt(g, 0.0));
    CHECK(report.entropy_change < 0.0);
  }
}

TEST_CASE("audit mode stops on entropy growth") {
  // EC flux at a compressive jump is not dissipative; with the fixed explicit
  // step the total entropy grows and the audit trips.
  const Burgers sys;
  auto g = make_grid<Burgers>(uniform_interfaces(-1.0, 1.0, 20),
                              [](double x) { return Burgers::make(x < 0 ? 1.0 : -1.0); });
  SolverSettings s;
  s.spec = {DissipationKind::kNone};
  s.audit = true;
  s.t_end = 1.0;
  try {
    (void)run(sys, g, {Burgers::make(1.0), Burgers::make(-1.0)}, s);
    FAIL("expected EntropyViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kEntropyViolation);
  }
}
