#pragma once

#include <cmath>

#include "esr/systems/system.hpp"

namespace esr {

class IdealMhd;

/// Logarithmic mean (a - b)/(ln a - ln b) for a, b > 0. Uses a series in
/// ((a-b)/(a+b))^2 when |a/b - 1| < 1e-4.
double log_mean(double a, double b);

/// Entropy conservative flux for Burgers with S = u^2/2.
double ec_flux_burgers(double uL, double uR);

template <int N>
struct EcFluxResult {
  Vec<N> flux = Vec<N>::Zero();
  double tadmor_residual = 0.0;  // [[v]].flux - [[psi]]
};

/// Entropy conservative, kinetic energy preserving two-point flux for 1D ideal
/// MHD with continuous B1. Throws B1Discontinuity if |[[B1]]| > 1e-12.
/// Symmetric in its arguments to the last bit.
EcFluxResult<8> ec_flux_mhd(const Vec<8>& qL, const Vec<8>& qR, const IdealMhd& sys,
                            bool with_residual = true);

/// Tadmor residual [[v]].flux - [[psi]] of a candidate two-point flux.
template <ConservationSystem System>
double check_tadmor(const System& sys, const typename System::State& qL,
                    const typename System::State& qR, const typename System::State& flux) {
  const auto eL = sys.entropy(qL);
  const auto eR = sys.entropy(qR);
  return (eR.v - eL.v).dot(flux) - (eR.psi - eL.psi);
}

/// Scale used for the relative Tadmor tolerance: 1 + |[[v]].flux|.
template <ConservationSystem System>
double tadmor_scale(const System& sys, const typename System::State& qL,
                    const typename System::State& qR, const typename System::State& flux) {
  return 1.0 + std::abs((sys.entropy(qR).v - sys.entropy(qL).v).dot(flux));
}

}  // namespace esr
