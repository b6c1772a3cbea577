#include "esr/systems/ideal_mhd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "esr/ec_flux.hpp"
#include "esr/error.hpp"

namespace esr {

using namespace mhd;

namespace {

bool all_finite(const Eigen::Ref<const Eigen::VectorXd>& x) { return x.allFinite(); }

}  // namespace

PrimStateMHD arithmetic_mean(const PrimStateMHD& a, const PrimStateMHD& b) {
  PrimStateMHD m;
  m.rho = 0.5 * (a.rho + b.rho);
  m.vel = 0.5 * (a.vel + b.vel);
  m.p = 0.5 * (a.p + b.p);
  m.B = 0.5 * (a.B + b.B);
  return m;
}

IdealMhd::IdealMhd(double gamma) : gamma_(gamma) {
  if (!(gamma > 1.0)) throw Error(ErrorCode::kUsage, "adiabatic index must exceed 1");
}

void IdealMhd::check_physical(const PrimStateMHD& w) const {
  if (!(w.rho > 0.0) || !(w.p > 0.0) || !std::isfinite(w.rho) || !std::isfinite(w.p) ||
      !w.vel.allFinite() || !w.B.allFinite()) {
    std::ostringstream os;
    os << "rho = " << w.rho << ", p = " << w.p;
    throw Error(ErrorCode::kNonphysicalState, os.str());
  }
}

void IdealMhd::check_physical(const State& q) const {
  if (!all_finite(q) || !(q[kRho] > 0.0)) {
    std::ostringstream os;
    os << "rho = " << q[kRho];
    throw Error(ErrorCode::kNonphysicalState, os.str());
  }
  const double p = pressure(q);
  if (!(p > 0.0)) {
    std::ostringstream os;
    os << "p = " << p;
    throw Error(ErrorCode::kNonphysicalState, os.str());
  }
}

double IdealMhd::pressure(const State& q) const {
  const double rho = q[kRho];
  const double m2 = q.segment<3>(kMomX).squaredNorm();
  const double b2 = q.segment<3>(kBx).squaredNorm();
  return (gamma_ - 1.0) * (q[kEnergy] - 0.5 * m2 / rho - 0.5 * b2);
}

IdealMhd::State IdealMhd::prim_to_cons(const PrimStateMHD& w) const {
  check_physical(w);
  State q;
  q[kRho] = w.rho;
  q.segment<3>(kMomX) = w.rho * w.vel;
  q[kEnergy] = w.p / (gamma_ - 1.0) + 0.5 * w.rho * w.vel.squaredNorm() + 0.5 * w.B.squaredNorm();
  q.segment<3>(kBx) = w.B;
  return q;
}

PrimStateMHD IdealMhd::cons_to_prim(const State& q) const {
  check_physical(q);
  PrimStateMHD w;
  w.rho = q[kRho];
  w.vel = q.segment<3>(kMomX) / w.rho;
  w.p = pressure(q);
  w.B = q.segment<3>(kBx);
  return w;
}

double IdealMhd::fast_magnetosonic_speed(const PrimStateMHD& w) const {
  check_physical(w);
  const double a2 = gamma_ * w.p / w.rho;
  const double b2 = w.B.squaredNorm() / w.rho;
  const double b1sq = w.B[0] * w.B[0] / w.rho;
  const double sum = a2 + b2;
  const double disc = std::max(0.0, sum * sum - 4.0 * a2 * b1sq);
  return std::sqrt(0.5 * (sum + std::sqrt(disc)));
}

IdealMhd::State IdealMhd::flux(const State& q) const {
  const PrimStateMHD w = cons_to_prim(q);
  const double u = w.vel[0];
  const double b2 = w.B.squaredNorm();
  const double ptot = w.p + 0.5 * b2;
  const double B1 = w.B[0];
  State f;
  f[kRho] = w.rho * u;
  f[kMomX] = w.rho * u * u + ptot - B1 * B1;
  f[kMomY] = w.rho * u * w.vel[1] - B1 * w.B[1];
  f[kMomZ] = w.rho * u * w.vel[2] - B1 * w.B[2];
  f[kEnergy] = u * (q[kEnergy] + ptot) - B1 * w.vel.dot(w.B);
  f[kBx] = 0.0;
  f[kBy] = u * w.B[1] - w.vel[1] * B1;
  f[kBz] = u * w.B[2] - w.vel[2] * B1;
  return f;
}

EntropyData<8> IdealMhd::entropy(const State& q) const {
  const PrimStateMHD w = cons_to_prim(q);
  const double s = std::log(w.p) - gamma_ * std::log(w.rho);
  const double beta = 0.5 * w.rho / w.p;
  EntropyData<8> e;
  e.S = -w.rho * s / (gamma_ - 1.0);
  e.v[kRho] = (gamma_ - s) / (gamma_ - 1.0) - beta * w.vel.squaredNorm();
  e.v.segment<3>(kMomX) = 2.0 * beta * w.vel;
  e.v[kEnergy] = -2.0 * beta;
  e.v.segment<3>(kBx) = 2.0 * beta * w.B;
  e.F = w.vel[0] * e.S;
  e.psi = e.v.dot(flux(q)) - e.F;
  return e;
}

IdealMhd::Matrix IdealMhd::prim_jacobian(const PrimStateMHD& w) const {
  const double g1 = gamma_ - 1.0;
  Matrix J = Matrix::Zero();
  J(kRho, kRho) = 1.0;
  for (int k = 0; k < 3; ++k) {
    J(kMomX + k, kRho) = -w.vel[k] / w.rho;
    J(kMomX + k, kMomX + k) = 1.0 / w.rho;
  }
  // pressure row
  J(kEnergy, kRho) = 0.5 * g1 * w.vel.squaredNorm();
  for (int k = 0; k < 3; ++k) {
    J(kEnergy, kMomX + k) = -g1 * w.vel[k];
    J(kEnergy, kBx + k) = -g1 * w.B[k];
  }
  J(kEnergy, kEnergy) = g1;
  for (int k = 0; k < 3; ++k) J(kBx + k, kBx + k) = 1.0;
  return J;
}

IdealMhd::Matrix IdealMhd::flux_jacobian(const State& q) const {
  const PrimStateMHD w = cons_to_prim(q);
  const double rho = w.rho, u = w.vel[0], v = w.vel[1], ww = w.vel[2];
  const double B1 = w.B[0], B2 = w.B[1], B3 = w.B[2];
  const double g = gamma_;
  const double uB = w.vel.dot(w.B);
  const double K = g * w.p / (g - 1.0) + 0.5 * rho * w.vel.squaredNorm() + w.B.squaredNorm();

  // df/dw, columns ordered (rho, u, v, w, p, B1, B2, B3)
  Matrix Fw = Matrix::Zero();
  Fw.row(0) << u, rho, 0, 0, 0, 0, 0, 0;
  Fw.row(1) << u * u, 2 * rho * u, 0, 0, 1, -B1, B2, B3;
  Fw.row(2) << u * v, rho * v, rho * u, 0, 0, -B2, -B1, 0;
  Fw.row(3) << u * ww, rho * ww, 0, rho * u, 0, -B3, 0, -B1;
  Fw.row(4) << 0.5 * u * w.vel.squaredNorm(), K + rho * u * u - B1 * B1, rho * u * v - B1 * B2,
      rho * u * ww - B1 * B3, u * g / (g - 1.0), u * B1 - uB, 2 * u * B2 - B1 * v,
      2 * u * B3 - B1 * ww;
  Fw.row(6) << 0, B2, -B1, 0, 0, -v, u, 0;
  Fw.row(7) << 0, B3, 0, -B1, 0, -ww, 0, u;

  Matrix A = Fw.lazyProduct(prim_jacobian(w));

  // Godunov-Powell column; inert for the 1D dynamics since dB1/dx = 0.
  State phi;
  phi << 0, B1, B2, B3, uB, u, v, ww;
  A.col(kBx) += phi;
  return A;
}

IdealMhd::Matrix IdealMhd::entropy_hessian(const State& q) const {
  const PrimStateMHD w = cons_to_prim(q);
  const double rho = w.rho, p = w.p, g = gamma_;
  const double u2 = w.vel.squaredNorm();

  // dv/dw, columns ordered (rho, u, v, w, p, B1, B2, B3)
  Matrix Vw = Matrix::Zero();
  Vw(0, 0) = g / ((g - 1.0) * rho) - u2 / (2.0 * p);
  for (int k = 0; k < 3; ++k) Vw(0, 1 + k) = -rho * w.vel[k] / p;
  Vw(0, 4) = -1.0 / ((g - 1.0) * p) + rho * u2 / (2.0 * p * p);
  for (int k = 0; k < 3; ++k) {
    Vw(1 + k, 0) = w.vel[k] / p;
    Vw(1 + k, 1 + k) = rho / p;
    Vw(1 + k, 4) = -rho * w.vel[k] / (p * p);
  }
  Vw(4, 0) = -1.0 / p;
  Vw(4, 4) = rho / (p * p);
  for (int k = 0; k < 3; ++k) {
    Vw(5 + k, 0) = w.B[k] / p;
    Vw(5 + k, 4) = -rho * w.B[k] / (p * p);
    Vw(5 + k, 5 + k) = rho / p;
  }
  const Matrix hess = Vw.lazyProduct(prim_jacobian(w));
  return 0.5 * (hess + hess.transpose());
}

IdealMhd::Matrix IdealMhd::entropy_hessian_inverse(const State& q) const {
  const Eigen::LLT<Matrix> llt(entropy_hessian(q));
  if (llt.info() != Eigen::Success)
    throw Error(ErrorCode::kSingularHessian, "entropy Hessian is not positive definite");
  // H = L^-T L^-1. L^-1 by forward substitution; Eigen's generic blocked
  // triangular solve is several times slower at this size.
  const Matrix L = llt.matrixL();
  Matrix Linv = Matrix::Zero();
  for (int j = 0; j < kVars; ++j) {
    Linv(j, j) = 1.0 / L(j, j);
    for (int i = j + 1; i < kVars; ++i) {
      double sum = 0.0;
      for (int k = j; k < i; ++k) sum += L(i, k) * Linv(k, j);
      Linv(i, j) = -sum / L(i, i);
    }
  }
  const Matrix H = Linv.transpose().lazyProduct(Linv);
  return 0.5 * (H + H.transpose());
}

WaveSpeeds IdealMhd::wave_speed_estimates(const State& qL, const State& qR) const {
  const PrimStateMHD wl = cons_to_prim(qL);
  const PrimStateMHD wr = cons_to_prim(qR);
  const PrimStateMHD wm = arithmetic_mean(wl, wr);
  const double cm = fast_magnetosonic_speed(wm);
  return {std::min(wl.vel[0] - fast_magnetosonic_speed(wl), wm.vel[0] - cm),
          std::max(wr.vel[0] + fast_magnetosonic_speed(wr), wm.vel[0] + cm)};
}

IdealMhd::State IdealMhd::mean_state(const State& qL, const State& qR) const {
  return prim_to_cons(arithmetic_mean(cons_to_prim(qL), cons_to_prim(qR)));
}

IdealMhd::State IdealMhd::ec_flux(const State& qL, const State& qR) const {
  return ec_flux_mhd(qL, qR, *this, false).flux;
}

}  // namespace esr
