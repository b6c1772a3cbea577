#pragma once

// Per-interface and per-cell sweeps of one explicit step. Each sweep has a
// serial reference and an OpenMP version; both evaluate the same pure
// function per index, so their results are bitwise identical.

#include <cstddef>
#include <exception>
#include <limits>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "esr/dissipation.hpp"
#include "esr/systems/system.hpp"

namespace esr {

enum class ExecutionPolicy { kSerial, kOpenMP };

template <ConservationSystem System>
struct InterfaceFluxes {
  using State = typename System::State;

  std::vector<State> flux;            // f*ES, one per interface
  std::vector<double> production;     // -1/2 [[v]].(D H [[v]])
  std::vector<double> production_scale;  // ||[[v]]|| * ||D H [[v]]||
  std::vector<double> entropy_flux;   // mean(v).f* - mean(psi)

  void resize(std::size_t n) {
    flux.resize(n);
    production.resize(n);
    production_scale.resize(n);
    entropy_flux.resize(n);
  }
};

namespace detail {

/// Runs body(i) for i in [0, n). Exceptions thrown inside the OpenMP region are
/// captured and the one from the lowest index is rethrown after the loop.
template <class Body>
void for_each_index(std::size_t n, ExecutionPolicy policy, const Body& body) {
  if (policy == ExecutionPolicy::kSerial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr error;
  std::size_t error_index = std::numeric_limits<std::size_t>::max();
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(esr_kernel_error)
      {
        if (static_cast<std::size_t>(i) < error_index) {
          error_index = static_cast<std::size_t>(i);
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

/// Entropy data for every state of a padded (ghost-extended) row.
template <ConservationSystem System>
void entropy_sweep(const System& sys, std::span<const typename System::State> states,
                   std::vector<EntropyData<System::kVars>>& out, ExecutionPolicy policy) {
  out.resize(states.size());
  detail::for_each_index(states.size(), policy,
                         [&](std::size_t i) { out[i] = sys.entropy(states[i]); });
}

/// max(|lambda_L|, |lambda_R|) at every interface of a padded row.
template <ConservationSystem System>
void interface_speed_sweep(const System& sys, std::span<const typename System::State> padded,
                           std::vector<double>& out, ExecutionPolicy policy) {
  const std::size_t n = padded.size() - 1;
  out.resize(n);
  detail::for_each_index(n, policy, [&](std::size_t j) {
    out[j] = sys.wave_speed_estimates(padded[j], padded[j + 1]).max_abs();
  });
}

/// Entropy-stable fluxes at the padded.size() - 1 interfaces.
template <ConservationSystem System>
void interface_flux_sweep(const System& sys, const DissipationSpec& spec,
                          std::span<const typename System::State> padded,
                          std::span<const EntropyData<System::kVars>> entropy,
                          std::span<const double> dt_over_dx, InterfaceFluxes<System>& out,
                          ExecutionPolicy policy) {
  using State = typename System::State;
  const std::size_t n = padded.size() - 1;
  const bool with_jacobian = uses_jacobian(spec.kind);
  out.resize(n);
  detail::for_each_index(n, policy, [&](std::size_t j) {
    const auto& eL = entropy[j];
    const auto& eR = entropy[j + 1];
    const auto ctx = make_interface_context(sys, padded[j], padded[j + 1], eL.v, eR.v,
                                            dt_over_dx[j], with_jacobian);
    const State diss = apply_dissipation<System>(spec, ctx);
    const State f = sys.ec_flux(padded[j], padded[j + 1]) - 0.5 * diss;
    out.flux[j] = f;
    out.production[j] = -0.5 * ctx.jump_v.dot(diss);
    out.production_scale[j] = ctx.jump_v.norm() * diss.norm();
    out.entropy_flux[j] = 0.5 * (eL.v + eR.v).dot(f) - 0.5 * (eL.psi + eR.psi);
  });
}

/// q_i' = q_i - dt/dx_i (f_{i+1/2} - f_{i-1/2}); flux[i] is the left interface of cell i.
template <ConservationSystem System>
void cell_update_sweep(std::span<const typename System::State> states,
                       std::span<const typename System::State> flux,
                       std::span<const double> widths, double dt,
                       std::vector<typename System::State>& out, ExecutionPolicy policy) {
  out.resize(states.size());
  detail::for_each_index(states.size(), policy, [&](std::size_t i) {
    out[i] = states[i] - (dt / widths[i]) * (flux[i + 1] - flux[i]);
  });
}

}  // namespace esr
