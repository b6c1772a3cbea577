#include "esr/ec_flux.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "esr/error.hpp"
#include "esr/systems/ideal_mhd.hpp"

namespace esr {

double log_mean(double a, double b) {
  if (a < b) std::swap(a, b);
  const double z = (a - b) / b;
  if (std::abs(z) < 1e-4) {
    const double f = (a - b) / (a + b);
    const double u = f * f;
    return 0.5 * (a + b) / (1.0 + u * (1.0 / 3.0 + u * (1.0 / 5.0 + u / 7.0)));
  }
  return (a - b) / std::log1p(z);
}

// Grouped so that swapping the arguments gives the same bits.
double ec_flux_burgers(double uL, double uR) { return (uL * uL + uR * uR + uL * uR) / 6.0; }

EcFluxResult<8> ec_flux_mhd(const Vec<8>& qL, const Vec<8>& qR, const IdealMhd& sys,
                            bool with_residual) {
  using namespace mhd;
  const PrimStateMHD wl = sys.cons_to_prim(qL);
  const PrimStateMHD wr = sys.cons_to_prim(qR);
  if (std::abs(wr.B[0] - wl.B[0]) > 1e-12) {
    std::ostringstream os;
    os << "jump(B1) = " << wr.B[0] - wl.B[0];
    throw Error(ErrorCode::kB1Discontinuity, os.str());
  }
  const double g = sys.gamma();
  const auto avg = [](double a, double b) { return 0.5 * (a + b); };

  const double betaL = 0.5 * wl.rho / wl.p;
  const double betaR = 0.5 * wr.rho / wr.p;
  const double rho_ln = log_mean(wl.rho, wr.rho);
  const double beta_ln = log_mean(betaL, betaR);
  const double rho_avg = avg(wl.rho, wr.rho);
  const double beta_avg = avg(betaL, betaR);
  const Eigen::Vector3d vel = 0.5 * (wl.vel + wr.vel);
  const Eigen::Vector3d beta_vel = 0.5 * (betaL * wl.vel + betaR * wr.vel);
  const double B1 = avg(wl.B[0], wr.B[0]);
  const double B2 = avg(wl.B[1], wr.B[1]);
  const double B3 = avg(wl.B[2], wr.B[2]);
  const double b2_avg = avg(wl.B.squaredNorm(), wr.B.squaredNorm());
  const double u2_avg = avg(wl.vel.squaredNorm(), wr.vel.squaredNorm());

  EcFluxResult<8> out;
  Vec<8>& f = out.flux;
  const double mass = rho_ln * vel[0];
  const double ptot = rho_avg / (2.0 * beta_avg) + 0.5 * b2_avg;
  f[kRho] = mass;
  f[kMomX] = mass * vel[0] - B1 * B1 + ptot;
  f[kMomY] = mass * vel[1] - B1 * B2;
  f[kMomZ] = mass * vel[2] - B1 * B3;
  f[kBx] = 0.0;
  f[kBy] = (beta_vel[0] * B2 - beta_vel[1] * B1) / beta_avg;
  f[kBz] = (beta_vel[0] * B3 - beta_vel[2] * B1) / beta_avg;
  f[kEnergy] = 0.5 * (mass / ((g - 1.0) * beta_ln) + mass * (2.0 * vel.squaredNorm() - u2_avg) +
                      rho_avg * vel[0] / beta_avg) +
               f[kBy] * B2 + f[kBz] * B3;

  if (with_residual) out.tadmor_residual = check_tadmor(sys, qL, qR, f);
  return out;
}

}  // namespace esr
