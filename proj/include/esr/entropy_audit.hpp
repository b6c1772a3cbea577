#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

#include "esr/dissipation.hpp"
#include "esr/grid.hpp"
#include "esr/systems/system.hpp"

namespace esr {

inline constexpr double kProductionTolerance = 1e-10;

/// Entropy production -1/2 [[v]].D H [[v]] at one interface.
struct AuditRecord {
  std::size_t interface_index = 0;
  double production = 0.0;
  double cell_residual = 0.0;
  bool violation = false;
};

/// production > tol * scale, where scale is ||[[v]]|| ||D H [[v]]||.
inline bool production_violates(double production, double scale,
                                double tol = kProductionTolerance) {
  return production > tol * scale;
}

inline AuditRecord make_audit_record(std::size_t index, double production, double scale,
                                     double cell_residual = 0.0) {
  return {index, production, cell_residual, production_violates(production, scale)};
}

template <ConservationSystem System>
double interface_production(const System& sys, const DissipationSpec& spec,
                            const typename System::State& qL, const typename System::State& qR,
                            double dt_over_dx) {
  const auto ctx = make_interface_context(sys, qL, qR, dt_over_dx);
  return -0.5 * ctx.jump_v.dot(apply_dissipation<System>(spec, ctx));
}

/// residual_i = (S_i' - S_i)/dt + (F*_{i+1/2} - F*_{i-1/2})/dx_i with
/// F* = mean(v).f* - mean(psi). `entropy_flux` has K + 1 entries.
template <ConservationSystem System>
void cell_entropy_residual(const System& sys, const Grid1D<System>& before,
                           std::span<const typename System::State> after,
                           std::span<const double> entropy_flux, double dt,
                           std::vector<double>& out) {
  out.resize(before.cells());
  for (std::size_t i = 0; i < before.cells(); ++i) {
    const double dS = sys.entropy(after[i]).S - sys.entropy(before.states[i]).S;
    out[i] = dS / dt + (entropy_flux[i + 1] - entropy_flux[i]) / before.width(i);
  }
}

template <ConservationSystem System>
std::vector<double> cell_entropy_residual(const System& sys, const Grid1D<System>& before,
                                          const Grid1D<System>& after,
                                          std::span<const double> entropy_flux, double dt) {
  std::vector<double> out;
  cell_entropy_residual(sys, before, std::span<const typename System::State>(after.states),
                        entropy_flux, dt, out);
  return out;
}

struct SpdDiagnostic {
  double symmetry_defect = 0.0;      // ||DH - (DH)^T|| / ||DH||
  double min_quadratic_ratio = 0.0;  // min z.(DH)z / |z|^2
};

/// Assembles D H column by column from unit entropy-variable jumps. The minimum
/// quadratic ratio is taken over the eigenvectors of the symmetric part, which
/// is the exact minimum over all probe vectors.
template <ConservationSystem System>
SpdDiagnostic spd_diagnostic(const DissipationSpec& spec, const InterfaceContext<System>& ctx) {
  constexpr int n = System::kVars;
  using State = typename System::State;
  Mat<n> DH;
  for (int k = 0; k < n; ++k) {
    const State e = State::Unit(k);
    DH.col(k) = dissipation_operator<System>(spec, ctx, ctx.H * e);
  }
  SpdDiagnostic d;
  const double norm = DH.norm();
  d.symmetry_defect = norm > 0.0 ? (DH - DH.transpose()).norm() / norm : 0.0;
  const Mat<n> sym = 0.5 * (DH + DH.transpose());
  Eigen::SelfAdjointEigenSolver<Mat<n>> eig(sym, Eigen::EigenvaluesOnly);
  d.min_quadratic_ratio = eig.eigenvalues().minCoeff();
  return d;
}

}  // namespace esr
