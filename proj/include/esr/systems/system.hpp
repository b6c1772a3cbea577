#pragma once

#include <concepts>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace esr {

template <int N>
using Vec = Eigen::Matrix<double, N, 1>;
template <int N>
using Mat = Eigen::Matrix<double, N, N>;

struct SystemDescriptor {
  int n_vars = 0;
  std::optional<double> gamma;  // adiabatic index, MHD only
  std::string name;
};

/// Entropy pair evaluated at one state. `v` is dS/dq and `psi` = v.f(q) - F.
template <int N>
struct EntropyData {
  double S = 0.0;
  Vec<N> v = Vec<N>::Zero();
  double F = 0.0;
  double psi = 0.0;
};

/// Fastest signal speed estimates for one interface, left <= right.
struct WaveSpeeds {
  double left = 0.0;
  double right = 0.0;

  double max_abs() const;
};

/// Contract shared by the scalar and the MHD system. All members are pure.
template <class T>
concept ConservationSystem = requires(const T& sys, const typename T::State& q) {
  { T::kVars } -> std::convertible_to<int>;
  { sys.descriptor() } -> std::same_as<SystemDescriptor>;
  { sys.check_physical(q) };
  { sys.flux(q) } -> std::same_as<typename T::State>;
  { sys.entropy(q) } -> std::same_as<EntropyData<T::kVars>>;
  { sys.flux_jacobian(q) } -> std::same_as<Mat<T::kVars>>;
  { sys.entropy_hessian(q) } -> std::same_as<Mat<T::kVars>>;
  { sys.entropy_hessian_inverse(q) } -> std::same_as<Mat<T::kVars>>;
  { sys.wave_speed_estimates(q, q) } -> std::same_as<WaveSpeeds>;
  { sys.mean_state(q, q) } -> std::same_as<typename T::State>;
  { sys.ec_flux(q, q) } -> std::same_as<typename T::State>;
};

}  // namespace esr
