#include "esr/systems/burgers.hpp"

#include <algorithm>
#include <cmath>

#include "esr/ec_flux.hpp"
#include "esr/error.hpp"

namespace esr {

double WaveSpeeds::max_abs() const { return std::max(std::abs(left), std::abs(right)); }

void Burgers::check_physical(const State& q) const {
  if (!std::isfinite(q[0])) throw Error(ErrorCode::kNonphysicalState, "non-finite Burgers state");
}

Burgers::State Burgers::flux(const State& q) const {
  check_physical(q);
  return make(0.5 * q[0] * q[0]);
}

EntropyData<1> Burgers::entropy(const State& q) const {
  check_physical(q);
  const double u = q[0];
  EntropyData<1> e;
  e.S = 0.5 * u * u;
  e.v[0] = u;
  e.F = u * u * u / 3.0;
  e.psi = u * u * u / 6.0;
  return e;
}

Mat<1> Burgers::flux_jacobian(const State& q) const {
  check_physical(q);
  return Mat<1>::Constant(q[0]);
}

Mat<1> Burgers::entropy_hessian(const State& q) const {
  check_physical(q);
  return Mat<1>::Identity();
}

Mat<1> Burgers::entropy_hessian_inverse(const State& q) const {
  check_physical(q);
  return Mat<1>::Identity();
}

WaveSpeeds Burgers::wave_speed_estimates(const State& qL, const State& qR) const {
  check_physical(qL);
  check_physical(qR);
  return {std::min(qL[0], qR[0]), std::max(qL[0], qR[0])};
}

Burgers::State Burgers::mean_state(const State& qL, const State& qR) const {
  return make(0.5 * (qL[0] + qR[0]));
}

Burgers::State Burgers::ec_flux(const State& qL, const State& qR) const {
  check_physical(qL);
  check_physical(qR);
  return make(ec_flux_burgers(qL[0], qR[0]));
}

}  // namespace esr
