#include "esr/dissipation.hpp"

#include <sstream>

namespace esr {

namespace {

void require_gap(double lL, double lR) {
  if (is_degenerate(lL, lR)) {
    std::ostringstream os;
    os.precision(17);
    os << "lambda_L = " << lL << ", lambda_R = " << lR;
    throw Error(ErrorCode::kDegenerateWaveSpeeds, os.str());
  }
}

void require_omega(double omega) {
  if (!(omega >= 0.0 && omega <= 1.0)) {
    std::ostringstream os;
    os << "omega = " << omega << " is outside [0, 1]";
    throw Error(ErrorCode::kOmegaOutOfRange, os.str());
  }
}

}  // namespace

void DissipationSpec::validate() const { require_omega(omega); }

std::string_view to_string(DissipationKind kind) {
  switch (kind) {
    case DissipationKind::kNone: return "ec";
    case DissipationKind::kLF: return "lf";
    case DissipationKind::kLLF: return "llf";
    case DissipationKind::kHLL: return "hll";
    case DissipationKind::kLW: return "lw";
    case DissipationKind::kHllOmega: return "hll-omega";
    case DissipationKind::kHllxOmega: return "hllx-omega";
    case DissipationKind::kRoeScalar: return "roe";
  }
  return "?";
}

DissipationKind parse_dissipation_kind(std::string_view name) {
  for (auto kind : {DissipationKind::kNone, DissipationKind::kLF, DissipationKind::kLLF,
                    DissipationKind::kHLL, DissipationKind::kLW, DissipationKind::kHllOmega,
                    DissipationKind::kHllxOmega, DissipationKind::kRoeScalar}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorCode::kUsage, "unknown flux '" + std::string(name) +
                                     "' (expected lf, llf, hll, lw, hll-omega, hllx-omega, roe, ec)");
}

std::string label(const DissipationSpec& spec) {
  std::string out(to_string(spec.kind));
  if (spec.kind == DissipationKind::kHllOmega || spec.kind == DissipationKind::kHllxOmega) {
    std::ostringstream os;
    os << ':' << spec.omega;
    out += os.str();
  }
  if (spec.jump == JumpForm::kConserved) out += "[dq]";
  return out;
}

double degenerate_gap(double lambda_L, double lambda_R) {
  return 1e-12 * std::max({1.0, std::abs(lambda_L), std::abs(lambda_R)});
}

bool is_degenerate(double lambda_L, double lambda_R) {
  return !(lambda_R - lambda_L >= degenerate_gap(lambda_L, lambda_R));
}

HllCoefficients coeff_hll(double lL, double lR) {
  require_gap(lL, lR);
  const double gap = lR - lL;
  return {(std::abs(lL) * lR - std::abs(lR) * lL) / gap, (std::abs(lR) - std::abs(lL)) / gap};
}

HllOmegaCoefficients coeff_hll_omega(double lL, double lR, double omega) {
  require_omega(omega);
  require_gap(lL, lR);
  const double gap = lR - lL;
  const double w = omega;
  const double b0 =
      (lR * (w * lL * lL + (1.0 - w) * std::abs(lL)) - lL * (w * lR * lR + (1.0 - w) * std::abs(lR))) /
      gap;
  const double b1 = ((1.0 - w) * (std::abs(lR) - std::abs(lL)) + w * (lR * lR - lL * lL)) / gap;
  return {b0, b1};
}

HllxOmegaCoefficients coeff_hllx_omega(double lL, double lR, double omega) {
  require_omega(omega);
  require_gap(lL, lR);
  const double w = omega;
  const double gap = lR - lL;
  const double abs_sum = std::abs(lL) + std::abs(lR);
  HllxOmegaCoefficients c;
  c.alpha = (gap - std::abs(std::abs(lR) - std::abs(lL))) / (gap * gap);
  c.beta = w + (1.0 - w) * c.alpha;
  c.beta0 = c.beta * (1.0 - w) * std::abs(lL * lR) / ((1.0 - w) + w * abs_sum);
  c.beta1 = 1.0 - c.beta / ((1.0 - w) / abs_sum + w);
  c.beta2 = c.beta;
  return c;
}

double scalar_dissipation(const DissipationSpec& spec, double lL, double lR, double dt_over_dx,
                          double lambda) {
  switch (spec.kind) {
    case DissipationKind::kNone:
      return 0.0;
    case DissipationKind::kLF:
      return 1.0 / dt_over_dx;
    case DissipationKind::kLLF:
      return std::max(std::abs(lL), std::abs(lR));
    case DissipationKind::kHLL: {
      const auto c = coeff_hll(lL, lR);
      return c.a0 + c.a1 * lambda;
    }
    case DissipationKind::kLW:
      return dt_over_dx * lambda * lambda;
    case DissipationKind::kHllOmega: {
      const auto c = coeff_hll_omega(lL, lR, spec.omega);
      return c.b0 + c.b1 * lambda;
    }
    case DissipationKind::kHllxOmega: {
      const auto x = coeff_hllx_omega(lL, lR, spec.omega);
      const auto c = coeff_hll_omega(lL, lR, spec.omega);
      return x.beta0 / dt_over_dx + x.beta1 * (c.b0 + c.b1 * lambda) +
             x.beta2 * dt_over_dx * lambda * lambda;
    }
    case DissipationKind::kRoeScalar:
      return std::abs(lambda);
  }
  return 0.0;
}

std::vector<std::pair<double, double>> scalar_dissipation_curve(const DissipationSpec& spec,
                                                                double lL, double lR,
                                                                int samples, double dt_over_dx) {
  require_gap(lL, lR);
  if (samples < 2) throw Error(ErrorCode::kUsage, "at least two samples are required");
  std::vector<std::pair<double, double>> curve;
  curve.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    // endpoints hit exactly
    const double lambda =
        k == samples - 1 ? lR : lL + (lR - lL) * static_cast<double>(k) / (samples - 1);
    curve.emplace_back(lambda, scalar_dissipation(spec, lL, lR, dt_over_dx, lambda));
  }
  return curve;
}

}  // namespace esr
