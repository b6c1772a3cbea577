#pragma once

#include "esr/systems/system.hpp"

namespace esr {

/// Inviscid Burgers equation u_t + (u^2/2)_x = 0 with the square entropy S = u^2/2.
class Burgers {
 public:
  static constexpr int kVars = 1;
  using State = Vec<1>;

  static State make(double u) { return State::Constant(u); }

  SystemDescriptor descriptor() const { return {kVars, std::nullopt, "burgers"}; }

  /// Throws NonphysicalState on non-finite input.
  void check_physical(const State& q) const;

  State flux(const State& q) const;
  EntropyData<1> entropy(const State& q) const;
  Mat<1> flux_jacobian(const State& q) const;
  Mat<1> entropy_hessian(const State& q) const;
  Mat<1> entropy_hessian_inverse(const State& q) const;
  WaveSpeeds wave_speed_estimates(const State& qL, const State& qR) const;
  State mean_state(const State& qL, const State& qR) const;
  State ec_flux(const State& qL, const State& qR) const;
};

static_assert(ConservationSystem<Burgers>);

}  // namespace esr
