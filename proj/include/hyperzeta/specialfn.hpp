#pragma once

#include <complex>

#include "hyperzeta/accel.hpp"

namespace hyperzeta {

using cdouble = std::complex<double>;

/// A complex value tagged with the real abscissa it was evaluated at.
struct ComplexSample {
  double abscissa = 0.0;
  cdouble value{};
};

/// Parameters (z, s, u) of the Lerch transcendent. Construction enforces
/// |z| <= 1, u > 0, and the unit-circle rules: z = -1 needs Re s > 0, any
/// other |z| = 1 needs Re s > 1.
class LerchParams {
 public:
  LerchParams(cdouble z, cdouble s, double u);

  cdouble z() const { return z_; }
  cdouble s() const { return s_; }
  double u() const { return u_; }

 private:
  cdouble z_;
  cdouble s_;
  double u_;
};

namespace specialfn {

/// Distance from a pole or singular point below which evaluation is refused.
inline constexpr double kPoleTolerance = 1e-14;

/// Gamma(s) by a 14-term Lanczos series (g = 671/128), reflected for Re s < 1/2.
/// Throws PoleError within kPoleTolerance of a non-positive integer.
cdouble gamma_complex(cdouble s);

/// Dirichlet eta sum_{k>=1} (-1)^{k-1} k^{-s}, Re s > 0.
cdouble dirichlet_eta(cdouble s, const AccelConfig& cfg = {});

/// zeta(1/2 + i t) = eta(1/2 + i t) / (1 - 2^{1/2 - i t}).
cdouble zeta_critical(double t, const AccelConfig& cfg = {});

/// Dirichlet beta sum_{k>=0} (-1)^k (2k+1)^{-s}, Re s > 0.
cdouble dirichlet_beta(cdouble s, const AccelConfig& cfg = {});

/// Phi(z, s, u) = sum_{n>=0} z^n (u+n)^{-s}.
///
/// |z| < 0.99 sums the series directly with a geometric tail bound, z = -1 uses
/// CVZ acceleration, and z = 1 (Hurwitz zeta, Re s > 1) uses Euler-Maclaurin.
/// 0.99 <= |z| < 1 and other unit-circle points raise DomainError.
cdouble lerch_phi(const LerchParams& p, const AccelConfig& cfg = {});

/// The Mellin kernel e^{-(u-1)t} / (e^t - z) whose transform is Gamma(s) Phi(z,s,u).
cdouble lerch_integrand(cdouble z, double t, double u);

/// sum_{n=1}^{n_max} n^{-s}, compensated. This is the transform of the
/// truncated comb state and does not converge to zeta on the critical line.
cdouble dirichlet_partial_sum(cdouble s, long n_max);

}  // namespace specialfn
}  // namespace hyperzeta
