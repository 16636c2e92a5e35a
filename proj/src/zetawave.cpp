#include "hyperzeta/zetawave.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hyperzeta/errors.hpp"
#include "hyperzeta/specialfn.hpp"

namespace hyperzeta {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_minus_one(cdouble z) { return std::abs(z + 1.0) <= specialfn::kPoleTolerance; }

// eta(-k) for k = 0..11; the odd-k values follow from Bernoulli numbers,
// eta(-k) = (2^{k+1} - 1) B_{k+1} / (k+1), and the even ones vanish.
constexpr std::array<double, 12> kEtaAtNegativeIntegers = {
    0.5, 0.25, 0.0, -0.125, 0.0, 0.25, 0.0, -17.0 / 16.0, 0.0, 31.0 / 4.0, 0.0, -691.0 / 8.0};

}  // namespace

double zeta_wave_norm() { return 1.0 / std::sqrt(std::numbers::ln2 - 0.5); }

LerchWave::LerchWave(cdouble z, double u, const QuadConfig& quad) : z_(z), u_(u), norm_(0.0) {
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("LerchWave requires u > 0");
  if (!(std::abs(z) < 1.0) && !is_minus_one(z))
    throw DomainError("LerchWave requires |z| < 1 or z = -1");
  const auto density = [&](double x) -> cdouble {
    return std::norm(std::exp(-u * x) / (1.0 - z * std::exp(-x)));
  };
  const double mass = quadrature::integrate_halfline(density, quad).value.real();
  norm_ = 1.0 / std::sqrt(mass);
}

cdouble LerchWave::operator()(double x) const {
  return norm_ * std::exp(-u_ * x) / (1.0 - z_ * std::exp(-x));
}

SigmaWave::SigmaWave(double phi, const AccelConfig& accel, const QuadConfig& quad)
    : phi_(phi), accel_(accel), norm_(1.0) {
  if (!(phi >= 0.0 && phi <= 3.0)) throw DomainError("SigmaWave requires phi in [0, 3]");
  accel_.validate();
  const auto density = [&](double x) -> cdouble {
    const double v = unnormalized(x);
    return v * v;
  };
  norm_ = 1.0 / std::sqrt(quadrature::integrate_halfline(density, quad).value.real());
}

double SigmaWave::unnormalized(double x) const {
  if (!(x > 0.0)) throw DomainError("sigma_eval requires x > 0");
  const double c = std::cos(phi_);

  if (x <= kSeriesCutoff) {
    // sum_{n>=1} (-1)^{n-1} g(nx) ~ sum_k g^{(k)}(0)/k! eta(-k) x^k, with
    // g^{(k)}(0)/k! = (-1)^k cos(k phi).
    double sum = 0.0;
    double xk = 1.0;
    for (std::size_t k = 0; k < kEtaAtNegativeIntegers.size(); ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      sum += sign * std::cos(static_cast<double>(k) * phi_) * kEtaAtNegativeIntegers[k] * xk;
      xk *= x;
    }
    return sum;
  }

  // g(nx) = Re[(e^{-i phi}/x) / (n - 1 + c)] with Re c = 1 + cos(phi)/x. Once
  // Re c > 0 the tail is a moment sequence on [0,1] and CVZ converges; for
  // cos(phi) < 0 the first `head` terms are summed directly to get there.
  const long head = c < 0.0 ? static_cast<long>(std::ceil(-c / x)) : 0L;
  if (head > accel_.max_terms)
    throw ConvergenceError("Sigma sum at x = " + std::to_string(x) + " needs " +
                           std::to_string(head) + " direct terms, above max_terms");
  double head_sum = 0.0;
  for (long n = 1; n <= head; ++n) {
    const double term = zetawave::g_family_eval(phi_, static_cast<double>(n) * x);
    head_sum += (n % 2 == 1) ? term : -term;
  }
  const auto tail_term = [&](int k) {
    return zetawave::g_family_eval(phi_, static_cast<double>(head + 1 + k) * x);
  };
  const double tail = accelerated_alternating_sum<double>(tail_term, accel_).value;
  return head_sum + ((head % 2 == 0) ? tail : -tail);
}

PotentialProfile::PotentialProfile(PotentialKind kind_, double z_, double u_)
    : kind(kind_), z(z_), u(u_) {
  if (kind == PotentialKind::VZeta && (z != -1.0 || u != 1.0))
    throw DomainError("V_ZETA potential requires z = -1, u = 1");
  if (!(u > 0.0)) throw DomainError("potential requires u > 0");
  if (!(std::abs(z) < 1.0) && z != -1.0) throw DomainError("potential requires |z| < 1 or z = -1");
}

namespace zetawave {

cdouble psi_lerch_eval(const LerchWave& w, double x) {
  if (!(x >= 0.0)) throw DomainError("psi_lerch_eval requires x >= 0");
  return w(x);
}

double boundary_kappa(double z, double u) {
  if (z == 1.0) throw DomainError("boundary_kappa is singular at z = 1");
  return -u + z / (z - 1.0);
}

double potential_eval(const PotentialProfile& p, double x) {
  if (!(x >= 0.0)) throw DomainError("potential_eval requires x >= 0");
  if (p.kind == PotentialKind::VZeta) {
    const double ex = std::exp(x);
    const double ratio = std::isfinite(ex) ? ex / (ex + 1.0) : 1.0;
    return -0.5 * (1.0 - ratio * std::tanh(0.5 * x));
  }
  const double zx = p.z * std::exp(-x);
  const double r = zx / (1.0 - zx);
  // (u+R)^2 - u^2 expanded to avoid cancellation for small R
  return 0.5 * (r * (2.0 * p.u + r) + r * (r + 1.0));
}

double potential_boundary_limit(double z, double u) {
  if (z == 1.0) throw DomainError("the potential is singular at z = 1");
  return -u * z / (z - 1.0) + 0.5 * z * (1.0 + z) / ((z - 1.0) * (z - 1.0));
}

double schrodinger_residual(const std::function<cdouble(double)>& psi,
                            const std::function<double(double)>& potential, double energy,
                            const GridSpec& x_grid) {
  const std::size_t n = x_grid.n();
  if (n < 5) throw DomainError("schrodinger_residual needs at least 5 grid points");
  const double h = x_grid.step();
  std::vector<cdouble> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = psi(x_grid.at(i));

  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < n; ++i) {
    const cdouble second = (-values[i + 2] + 16.0 * values[i + 1] - 30.0 * values[i] +
                            16.0 * values[i - 1] - values[i - 2]) /
                           (12.0 * h * h);
    const cdouble residual =
        -0.5 * second + (potential(x_grid.at(i)) - energy) * values[i];
    worst = std::max(worst, std::abs(residual));
  }
  return worst;
}

double g_family_eval(double phi, double x) {
  const double c = std::cos(phi);
  return (1.0 + x * c) / (1.0 + 2.0 * x * c + x * x);
}

cdouble g_mellin_closed(cdouble s, double phi) {
  if (!(s.real() > 0.0 && s.real() < 1.0))
    throw DomainError("g_mellin_closed requires 0 < Re(s) < 1");
  const cdouble sine = std::sin(kPi * s);
  if (std::abs(sine) < specialfn::kPoleTolerance) throw PoleError("sin(pi s) vanishes");
  const double c = std::cos(phi);
  const double a = std::abs(std::sin(phi));
  const auto principal_pow = [&](cdouble w) { return std::exp(s * std::log(w)); };
  return kPi / (2.0 * sine) * (principal_pow({c, -a}) + principal_pow({c, a}));
}

double sigma_eval(const SigmaWave& w, double x) { return w(x); }

cdouble psi_zeta_momentum_closed(double p_eta, const AccelConfig& cfg) {
  const cdouble s(0.5, -p_eta);
  const cdouble prefactor = 1.0 - std::exp(cdouble(0.5, p_eta) * std::numbers::ln2);
  return zeta_wave_norm() * prefactor * specialfn::gamma_complex(s) *
         specialfn::zeta_critical(-p_eta, cfg) / std::sqrt(2.0 * kPi);
}

cdouble chi_momentum_closed(const SigmaWave& w, double p_eta) {
  const cdouble s(0.5, -p_eta);
  const cdouble prefactor = 1.0 - std::exp(cdouble(0.5, p_eta) * std::numbers::ln2);
  return w.norm() * prefactor * specialfn::zeta_critical(-p_eta, w.accel()) *
         g_mellin_closed(s, w.phi());
}

std::vector<double> zero_scan(const std::function<double(double)>& f, double lo, double hi,
                              double coarse_step) {
  if (!(coarse_step > 0.0 && coarse_step <= 0.05))
    throw DomainError("zero_scan requires 0 < coarse_step <= 0.05");
  if (!(lo < hi)) throw DomainError("zero_scan requires lo < hi");

  const auto count = static_cast<std::size_t>(std::ceil((hi - lo) / coarse_step)) + 1;
  const double step = (hi - lo) / static_cast<double>(count - 1);
  std::vector<double> t(count), values(count);
  double peak = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    t[i] = lo + static_cast<double>(i) * step;
    values[i] = f(t[i]);
    peak = std::max(peak, values[i]);
  }

  constexpr double kInvPhi = 0.6180339887498948482;
  std::vector<double> zeros;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    if (!(values[i] <= values[i - 1] && values[i] < values[i + 1])) continue;
    double a = t[i - 1];
    double b = t[i + 1];
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > 1e-8) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = f(d);
      }
    }
    const double root = 0.5 * (a + b);
    if (f(root) < 1e-4 * peak) zeros.push_back(root);
  }
  return zeros;
}

}  // namespace zetawave
}  // namespace hyperzeta
