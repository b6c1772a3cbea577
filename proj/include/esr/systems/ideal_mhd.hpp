#pragma once

#include <Eigen/Dense>

#include "esr/systems/system.hpp"

namespace esr {

/// Component layout of the 8-variable MHD state (rho, rho*u, rho*v, rho*w, E, B1, B2, B3).
namespace mhd {
inline constexpr int kRho = 0;
inline constexpr int kMomX = 1;
inline constexpr int kMomY = 2;
inline constexpr int kMomZ = 3;
inline constexpr int kEnergy = 4;
inline constexpr int kBx = 5;
inline constexpr int kBy = 6;
inline constexpr int kBz = 7;
}  // namespace mhd

struct PrimStateMHD {
  double rho = 1.0;
  Eigen::Vector3d vel = Eigen::Vector3d::Zero();
  double p = 1.0;
  Eigen::Vector3d B = Eigen::Vector3d::Zero();

  bool operator==(const PrimStateMHD&) const = default;
};

/// One-dimensional ideal MHD in x with an ideal-gas closure.
///
/// Entropy pair: S = -rho*s/(gamma-1), s = ln(p) - gamma*ln(rho), F = u*S.
/// B1 is a full conserved variable with zero flux; because B1 is constant in
/// 1D the Godunov-Powell term phi'(q) dB1/dx vanishes, and flux_jacobian()
/// returns the symmetrizable quasi-linear matrix dF/dq + phi' e_B1^T, for which
/// A*H is symmetric.
class IdealMhd {
 public:
  static constexpr int kVars = 8;
  using State = Vec<8>;
  using Matrix = Mat<8>;

  explicit IdealMhd(double gamma = 5.0 / 3.0);

  double gamma() const { return gamma_; }
  SystemDescriptor descriptor() const { return {kVars, gamma_, "ideal-mhd"}; }

  State prim_to_cons(const PrimStateMHD& w) const;
  PrimStateMHD cons_to_prim(const State& q) const;
  double pressure(const State& q) const;
  double fast_magnetosonic_speed(const PrimStateMHD& w) const;

  void check_physical(const State& q) const;
  void check_physical(const PrimStateMHD& w) const;

  State flux(const State& q) const;
  EntropyData<8> entropy(const State& q) const;
  Matrix flux_jacobian(const State& q) const;
  /// d^2S/dq^2 = dv/dq, assembled as (dv/dw)(dw/dq) in primitive variables w.
  Matrix entropy_hessian(const State& q) const;
  /// H = dq/dv, the inverse of entropy_hessian() via Cholesky. Throws SingularHessian.
  Matrix entropy_hessian_inverse(const State& q) const;
  WaveSpeeds wave_speed_estimates(const State& qL, const State& qR) const;
  /// Conserved state built from the arithmetic mean of the primitive variables.
  State mean_state(const State& qL, const State& qR) const;
  State ec_flux(const State& qL, const State& qR) const;

 private:
  Matrix prim_jacobian(const PrimStateMHD& w) const;  // dw/dq

  double gamma_;
};

static_assert(ConservationSystem<IdealMhd>);

PrimStateMHD arithmetic_mean(const PrimStateMHD& a, const PrimStateMHD& b);

}  // namespace esr
