#include "esr/app/cases.hpp"

#include "esr/error.hpp"

namespace esr::app {

namespace {

CaseDefinition torrilhon() {
  CaseDefinition c;
  c.name = "torrilhon";
  c.system = SystemKind::kIdealMhd;
  c.x_min = -4.0;
  c.x_max = 4.0;
  c.gamma = 5.0 / 3.0;
  c.t_end = 1.0;
  c.mhd_left = {1.0, {0.0, 0.0, 0.0}, 1.0, {1.5, 0.5, 0.6}};
  c.mhd_right = {1.0, {0.0, 0.0, 0.0}, 1.0, {1.5, 1.6, 0.2}};
  return c;
}

CaseDefinition burgers(std::string name, double uL, double uR) {
  CaseDefinition c;
  c.name = std::move(name);
  c.system = SystemKind::kBurgers;
  c.x_min = -1.0;
  c.x_max = 1.0;
  c.t_end = 0.5;
  c.u_left = uL;
  c.u_right = uR;
  return c;
}

// An antiderivative of the exact solution in x; only differences are used.
double burgers_antiderivative(const CaseDefinition& c, double x, double t) {
  const double uL = c.u_left;
  const double uR = c.u_right;
  const auto piece = [](double u, double from, double to) { return u * (to - from); };
  if (t <= 0.0 || uL > uR || uL == uR) {
    const double s = t <= 0.0 ? 0.0 : 0.5 * (uL + uR) * t;
    return x <= s ? piece(uL, 0.0, x) : piece(uL, 0.0, s) + piece(uR, s, x);
  }
  const double a = uL * t;
  const double b = uR * t;
  const auto fan = [t](double from, double to) { return (to * to - from * from) / (2.0 * t); };
  const auto G = [&](double y) {
    if (y <= a) return uL * y;
    if (y <= b) return uL * a + fan(a, y);
    return uL * a + fan(a, b) + uR * (y - b);
  };
  return G(x);
}

}  // namespace

const std::vector<CaseDefinition>& register_cases() {
  static const std::vector<CaseDefinition> cases = {
      torrilhon(),
      burgers("burgers-rarefaction", -1.0, 1.0),
      burgers("burgers-shock", 1.0, -1.0),
  };
  return cases;
}

const CaseDefinition& find_case(std::string_view name) {
  for (const auto& c : register_cases()) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::kUsage, "unknown case '" + std::string(name) +
                                     "' (expected torrilhon, burgers-rarefaction, burgers-shock)");
}

Grid1D<IdealMhd> initial_grid_mhd(const CaseDefinition& c, std::size_t cells) {
  const IdealMhd sys(c.gamma);
  const auto qL = sys.prim_to_cons(c.mhd_left);
  const auto qR = sys.prim_to_cons(c.mhd_right);
  return make_grid<IdealMhd>(uniform_interfaces(c.x_min, c.x_max, cells),
                             [&](double x) { return x <= 0.0 ? qL : qR; });
}

DirichletBc<IdealMhd> boundary_mhd(const CaseDefinition& c) {
  const IdealMhd sys(c.gamma);
  return {sys.prim_to_cons(c.mhd_left), sys.prim_to_cons(c.mhd_right)};
}

Grid1D<Burgers> initial_grid_burgers(const CaseDefinition& c, std::size_t cells) {
  return make_grid<Burgers>(uniform_interfaces(c.x_min, c.x_max, cells), [&](double x) {
    return Burgers::make(x <= 0.0 ? c.u_left : c.u_right);
  });
}

DirichletBc<Burgers> boundary_burgers(const CaseDefinition& c) {
  return {Burgers::make(c.u_left), Burgers::make(c.u_right)};
}

double burgers_exact(const CaseDefinition& c, double x, double t) {
  const double uL = c.u_left;
  const double uR = c.u_right;
  if (t <= 0.0) return x <= 0.0 ? uL : uR;
  if (uL >= uR) return x <= 0.5 * (uL + uR) * t ? uL : uR;
  if (x <= uL * t) return uL;
  if (x >= uR * t) return uR;
  return x / t;
}

double burgers_exact_average(const CaseDefinition& c, double a, double b, double t) {
  return (burgers_antiderivative(c, b, t) - burgers_antiderivative(c, a, t)) / (b - a);
}

}  // namespace esr::app
