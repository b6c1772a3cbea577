#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esr/error.hpp"
#include "esr/systems/system.hpp"

namespace esr {

enum class DissipationKind {
  kNone,  // bare entropy conservative flux, for experiments
  kLF,
  kLLF,
  kHLL,
  kLW,
  kHllOmega,
  kHllxOmega,
  kRoeScalar,
};

/// Which jump the dissipation matrix multiplies. The entropy-variable form
/// D H [[v]] is the provably stable one and the default.
enum class JumpForm { kEntropyVariables, kConserved };

struct DissipationSpec {
  DissipationKind kind = DissipationKind::kHllxOmega;
  double omega = 0.925;
  JumpForm jump = JumpForm::kEntropyVariables;

  /// Throws InvalidOmega unless 0 <= omega <= 1.
  void validate() const;
};

std::string_view to_string(DissipationKind kind);
/// Accepts lf, llf, hll, lw, hll-omega, hllx-omega, roe, ec.
DissipationKind parse_dissipation_kind(std::string_view name);
/// "hllx-omega:0.925" style label for reports.
std::string label(const DissipationSpec& spec);

struct HllCoefficients {
  double a0 = 0.0;
  double a1 = 0.0;
};

struct HllOmegaCoefficients {
  double b0 = 0.0;
  double b1 = 0.0;
};

struct HllxOmegaCoefficients {
  double beta0 = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// Smallest admissible gap lambda_R - lambda_L; 1e-12 * max(1, |lL|, |lR|).
double degenerate_gap(double lambda_L, double lambda_R);
bool is_degenerate(double lambda_L, double lambda_R);

/// D_HLL = a0 I + a1 A. Throws DegenerateWaveSpeeds.
HllCoefficients coeff_hll(double lambda_L, double lambda_R);
/// D_HLLw = b0 I + b1 A. Throws DegenerateWaveSpeeds, InvalidOmega.
HllOmegaCoefficients coeff_hll_omega(double lambda_L, double lambda_R, double omega);
/// D_HLLXw = beta0 D_LF + beta1 D_HLLw + beta2 D_LW. Throws DegenerateWaveSpeeds, InvalidOmega.
HllxOmegaCoefficients coeff_hllx_omega(double lambda_L, double lambda_R, double omega);

/// Scalar dissipation d(lambda) obtained by replacing A with lambda in D.
/// The kind is used as given; no degenerate fallback.
double scalar_dissipation(const DissipationSpec& spec, double lambda_L, double lambda_R,
                          double dt_over_dx, double lambda);

/// Samples d(lambda) on a uniform grid over [lambda_L, lambda_R].
std::vector<std::pair<double, double>> scalar_dissipation_curve(const DissipationSpec& spec,
                                                                double lambda_L, double lambda_R,
                                                                int samples,
                                                                double dt_over_dx = 1.0);

/// Everything one interface needs: both states, the arithmetic-mean state with
/// its Jacobian and entropy Jacobian H, wave speeds, and dt/dx.
template <ConservationSystem System>
struct InterfaceContext {
  using State = typename System::State;
  using Matrix = Mat<System::kVars>;

  State qL;
  State qR;
  State q_mean;
  Matrix A;  // flux Jacobian at q_mean
  Matrix H;  // dq/dv at q_mean
  State jump_v;
  double lambda_L = 0.0;
  double lambda_R = 0.0;
  double dt_over_dx = 1.0;
};

/// True for the kinds whose D involves the flux Jacobian A.
constexpr bool uses_jacobian(DissipationKind kind) {
  return kind != DissipationKind::kNone && kind != DissipationKind::kLF &&
         kind != DissipationKind::kLLF;
}

/// Builds the context from precomputed entropy variables of both states.
/// With `with_jacobian` false, A is left zero (enough for ec, LF and LLF).
template <ConservationSystem System>
InterfaceContext<System> make_interface_context(const System& sys,
                                                const typename System::State& qL,
                                                const typename System::State& qR,
                                                const typename System::State& vL,
                                                const typename System::State& vR,
                                                double dt_over_dx, bool with_jacobian = true) {
  InterfaceContext<System> ctx;
  ctx.qL = qL;
  ctx.qR = qR;
  ctx.q_mean = sys.mean_state(qL, qR);
  ctx.A = with_jacobian ? sys.flux_jacobian(ctx.q_mean) : Mat<System::kVars>::Zero();
  ctx.H = sys.entropy_hessian_inverse(ctx.q_mean);
  ctx.jump_v = vR - vL;
  const WaveSpeeds ws = sys.wave_speed_estimates(qL, qR);
  ctx.lambda_L = ws.left;
  ctx.lambda_R = ws.right;
  ctx.dt_over_dx = dt_over_dx;
  return ctx;
}

template <ConservationSystem System>
InterfaceContext<System> make_interface_context(const System& sys,
                                                const typename System::State& qL,
                                                const typename System::State& qR,
                                                double dt_over_dx) {
  return make_interface_context(sys, qL, qR, sys.entropy(qL).v, sys.entropy(qR).v, dt_over_dx);
}

/// Applies the dissipation matrix D of `spec` at `ctx` to an arbitrary vector z.
/// A enters only through matrix-vector products; no eigendecomposition is formed.
/// A degenerate wave-speed gap falls back to LLF.
template <ConservationSystem System>
typename System::State dissipation_operator(const DissipationSpec& spec,
                                            const InterfaceContext<System>& ctx,
                                            const typename System::State& z) {
  using State = typename System::State;
  const double lL = ctx.lambda_L;
  const double lR = ctx.lambda_R;
  const double dtdx = ctx.dt_over_dx;
  DissipationKind kind = spec.kind;
  const bool uses_gap = kind == DissipationKind::kHLL || kind == DissipationKind::kHllOmega ||
                        kind == DissipationKind::kHllxOmega;
  if (uses_gap && is_degenerate(lL, lR)) kind = DissipationKind::kLLF;

  const auto lw_term = [&]() -> State {
    const State Az = ctx.A * z;
    const State AAz = ctx.A * Az;
    return dtdx * AAz;
  };

  switch (kind) {
    case DissipationKind::kNone:
      return State::Zero();
    case DissipationKind::kLF:
      return z / dtdx;
    case DissipationKind::kLLF:
      return std::max(std::abs(lL), std::abs(lR)) * z;
    case DissipationKind::kHLL: {
      const HllCoefficients c = coeff_hll(lL, lR);
      const State Az = ctx.A * z;
      return c.a0 * z + c.a1 * Az;
    }
    case DissipationKind::kLW:
      return lw_term();
    case DissipationKind::kHllOmega: {
      const HllOmegaCoefficients c = coeff_hll_omega(lL, lR, spec.omega);
      const State Az = ctx.A * z;
      return c.b0 * z + c.b1 * Az;
    }
    case DissipationKind::kHllxOmega: {
      const HllxOmegaCoefficients x = coeff_hllx_omega(lL, lR, spec.omega);
      const HllOmegaCoefficients c = coeff_hll_omega(lL, lR, spec.omega);
      const State Az = ctx.A * z;
      const State lf = z / dtdx;
      const State hllw = c.b0 * z + c.b1 * Az;
      const State lw = lw_term();
      return x.beta0 * lf + x.beta1 * hllw + x.beta2 * lw;
    }
    case DissipationKind::kRoeScalar:
      if constexpr (System::kVars == 1) {
        return std::abs(ctx.A(0, 0)) * z;
      } else {
        throw Error(ErrorCode::kUnsupported, "scalar Roe dissipation is defined for Burgers only");
      }
  }
  return State::Zero();
}

/// D H [[v]] (default) or D [[q]] when spec.jump == kConserved.
template <ConservationSystem System>
typename System::State apply_dissipation(const DissipationSpec& spec,
                                         const InterfaceContext<System>& ctx) {
  if (spec.jump == JumpForm::kConserved)
    return dissipation_operator<System>(spec, ctx, ctx.qR - ctx.qL);
  return dissipation_operator<System>(spec, ctx, ctx.H * ctx.jump_v);
}

/// f*ES = f*EC - 1/2 D H [[v]].
template <ConservationSystem System>
typename System::State es_interface_flux(const System& sys, const DissipationSpec& spec,
                                         const InterfaceContext<System>& ctx) {
  return sys.ec_flux(ctx.qL, ctx.qR) - 0.5 * apply_dissipation<System>(spec, ctx);
}

template <ConservationSystem System>
typename System::State es_interface_flux(const System& sys, const DissipationSpec& spec,
                                         const typename System::State& qL,
                                         const typename System::State& qR, double dt_over_dx) {
  return es_interface_flux(sys, spec, make_interface_context(sys, qL, qR, dt_over_dx));
}

}  // namespace esr
