#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hyperzeta/accel.hpp"
#include "hyperzeta/hyperbolic.hpp"
#include "hyperzeta/quadrature.hpp"

namespace hyperzeta {

using cdouble = std::complex<double>;

/// Normalization of psi_zeta(x) = N / (1 + e^x): N^{-2} = ln 2 - 1/2.
double zeta_wave_norm();

/// psi_{z,u}(x) = N(z,u) e^{-ux} / (1 - z e^{-x}), the bound state whose
/// critical-line Mellin transform is N Gamma(s) Phi(z, s, u).
///
/// Valid for |z| < 1 or z = -1, u > 0. N is fixed at construction by
/// quadrature of |psi|^2; the energy is -u^2/2 for the shifted potential.
class LerchWave {
 public:
  LerchWave(cdouble z, double u, const QuadConfig& quad = {});

  cdouble z() const { return z_; }
  double u() const { return u_; }
  double norm() const { return norm_; }
  double energy() const { return -0.5 * u_ * u_; }

  cdouble operator()(double x) const;

 private:
  cdouble z_;
  double u_;
  double norm_;
};

/// Normalized alternating sum N(phi) sum_{n>=1} (-1)^{n-1} g(n x, phi) with the
/// rational kernel of g_family_eval. phi is restricted to [0, 3].
class SigmaWave {
 public:
  explicit SigmaWave(double phi, const AccelConfig& accel = {}, const QuadConfig& quad = {});

  double phi() const { return phi_; }
  double norm() const { return norm_; }
  const AccelConfig& accel() const { return accel_; }

  /// The sum without N(phi).
  double unnormalized(double x) const;
  double operator()(double x) const { return norm_ * unnormalized(x); }

  /// Below this x the sum is evaluated from its small-x power series.
  static constexpr double kSeriesCutoff = 2e-3;

 private:
  double phi_;
  AccelConfig accel_;
  double norm_;
};

enum class PotentialKind { VBarGeneral, VZeta };

/// Potential for which psi_{z,u} is an eigenfunction; VZeta is the closed form
/// of the z = -1, u = 1 case and requires exactly those parameters.
struct PotentialProfile {
  PotentialKind kind;
  double z;
  double u;

  PotentialProfile(PotentialKind kind, double z, double u);
  static PotentialProfile zeta() { return {PotentialKind::VZeta, -1.0, 1.0}; }
};

namespace zetawave {

cdouble psi_lerch_eval(const LerchWave& w, double x);

/// Robin constant lim_{x->0+} psi'/psi = -u + z/(z-1).
double boundary_kappa(double z, double u);

double potential_eval(const PotentialProfile& p, double x);

/// lim_{x->0+} of the general potential, -uz/(z-1) + z(1+z)/(2(z-1)^2).
double potential_boundary_limit(double z, double u);

/// max over interior points of |-psi''/2 + V psi - E psi|, psi'' by the
/// five-point central stencil. The two points nearest each end are skipped.
double schrodinger_residual(const std::function<cdouble(double)>& psi,
                            const std::function<double(double)>& potential, double energy,
                            const GridSpec& x_grid);

/// (1 + x cos phi) / (1 + 2 x cos phi + x^2), unnormalized.
double g_family_eval(double phi, double x);

/// Closed-form Mellin transform of g_family_eval,
/// pi / (2 sin pi s) [(cos phi - i|sin phi|)^s + (cos phi + i|sin phi|)^s],
/// principal branch, 0 < Re s < 1.
cdouble g_mellin_closed(cdouble s, double phi);

double sigma_eval(const SigmaWave& w, double x);

/// N (1 - 2^{1/2 + i p}) Gamma(1/2 - i p) zeta(1/2 - i p) / sqrt(2 pi).
cdouble psi_zeta_momentum_closed(double p_eta, const AccelConfig& cfg = {});

/// N(phi) (1 - 2^{1/2 + i p}) zeta(1/2 - i p) Xi(1/2 - i p, phi): the Mellin
/// transform of the Sigma state at s = 1/2 - i p. Divide by sqrt(2 pi) for the
/// amplitude <p_eta|chi>.
cdouble chi_momentum_closed(const SigmaWave& w, double p_eta);

/// Refined abscissae of the local minima of f on [lo, hi] that fall below
/// 1e-4 max(f). Candidates come from a scan at coarse_step <= 0.05 and are
/// polished by golden-section search to a 1e-8 bracket.
std::vector<double> zero_scan(const std::function<double(double)>& f, double lo, double hi,
                              double coarse_step);

}  // namespace zetawave
}  // namespace hyperzeta
