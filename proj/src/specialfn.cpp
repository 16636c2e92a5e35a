#include "hyperzeta/specialfn.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace hyperzeta {

namespace {

constexpr double kPi = std::numbers::pi;

bool on_unit_circle(cdouble z) {
  return std::abs(std::abs(z) - 1.0) <= specialfn::kPoleTolerance;
}

bool near(cdouble a, cdouble b) { return std::abs(a - b) <= specialfn::kPoleTolerance; }

// a^{-s} for real a > 0
cdouble real_pow_neg(double a, cdouble s) { return std::exp(-s * std::log(a)); }

// Neumaier summation, applied to both components.
class CompensatedSum {
 public:
  void add(cdouble v) {
    add_component(sum_re_, comp_re_, v.real());
    add_component(sum_im_, comp_im_, v.imag());
  }
  cdouble value() const { return {sum_re_ + comp_re_, sum_im_ + comp_im_}; }

 private:
  static void add_component(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  double sum_re_ = 0.0, comp_re_ = 0.0, sum_im_ = 0.0, comp_im_ = 0.0;
};

cdouble hurwitz_zeta(cdouble s, double u, const AccelConfig& cfg) {
  // B_2 .. B_26
  static constexpr std::array<double, 13> kBernoulli = {
      1.0 / 6.0,          -1.0 / 30.0,          1.0 / 42.0,          -1.0 / 30.0,
      5.0 / 66.0,         -691.0 / 2730.0,      7.0 / 6.0,           -3617.0 / 510.0,
      43867.0 / 798.0,    -174611.0 / 330.0,    854513.0 / 138.0,    -236364091.0 / 2730.0,
      8553103.0 / 6.0};

  long head = 16 + static_cast<long>(std::ceil(std::abs(s)));
  while (head <= cfg.max_terms) {
    CompensatedSum sum;
    for (long n = 0; n < head; ++n) sum.add(real_pow_neg(u + n, s));
    const double a = u + static_cast<double>(head);
    const cdouble a_pow = real_pow_neg(a, s);
    cdouble total = sum.value() + a * a_pow / (s - 1.0) + 0.5 * a_pow;

    // Euler-Maclaurin corrections B_{2j}/(2j)! * s(s+1)...(s+2j-2) * a^{-s-2j+1}
    cdouble rising = s;      // s (s+1) ... (s+2j-2)
    cdouble power = a_pow / a;  // a^{-s-2j+1}
    double factorial = 2.0;  // (2j)!
    double last = 0.0;
    for (std::size_t j = 1; j <= kBernoulli.size(); ++j) {
      const cdouble term = kBernoulli[j - 1] / factorial * rising * power;
      total += term;
      last = std::abs(term);
      rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
      power /= a * a;
      factorial *= static_cast<double>((2 * j + 1) * (2 * j + 2));
    }
    if (last <= 0.1 * cfg.abs_tol) return total;
    head *= 2;
  }
  throw ConvergenceError("Hurwitz zeta Euler-Maclaurin head exceeded max_terms");
}

cdouble lerch_direct(cdouble z, cdouble s, double u, const AccelConfig& cfg) {
  const double r = std::abs(z);
  const double sigma = s.real();
  CompensatedSum sum;
  cdouble zn = 1.0;
  double rn = 1.0;
  for (long n = 0; n < cfg.max_terms; ++n) {
    sum.add(zn * real_pow_neg(u + n, s));
    zn *= z;
    rn *= r;
    const double next = u + static_cast<double>(n + 1);
    const double growth = sigma < 0.0 ? std::pow(1.0 + 1.0 / next, -sigma) : 1.0;
    const double q = r * growth;
    if (q < 1.0) {
      const double tail = rn * std::pow(next, -sigma) / (1.0 - q);
      if (tail <= cfg.abs_tol) return sum.value();
    }
  }
  throw ConvergenceError("Lerch series did not reach tolerance within max_terms");
}

}  // namespace

LerchParams::LerchParams(cdouble z, cdouble s, double u) : z_(z), s_(s), u_(u) {
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("Lerch parameter u must be > 0");
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(s.real()) ||
      !std::isfinite(s.imag()))
    throw DomainError("Lerch parameters must be finite");
  const double r = std::abs(z);
  if (r > 1.0 + specialfn::kPoleTolerance) throw DomainError("Lerch parameter |z| must be <= 1");
  if (on_unit_circle(z)) {
    if (near(z, -1.0)) {
      if (!(s.real() > 0.0)) throw DomainError("z = -1 requires Re(s) > 0");
    } else if (!(s.real() > 1.0)) {
      throw DomainError("|z| = 1 requires Re(s) > 1");
    }
  }
}

namespace specialfn {

cdouble gamma_complex(cdouble s) {
  const double nearest = std::round(s.real());
  if (nearest <= 0.0 && std::abs(s - cdouble(nearest, 0.0)) < kPoleTolerance)
    throw PoleError("Gamma has a pole at s = " + std::to_string(nearest));

  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma_complex(1.0 - s));

  static constexpr std::array<double, 14> kCoeff = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};

  cdouble series = 0.999999999999997092;
  cdouble y = s;
  for (double c : kCoeff) {
    y += 1.0;
    series += c / y;
  }
  const cdouble t = s + 5.24218750000000000;
  const cdouble log_gamma =
      (s + 0.5) * std::log(t) - t + std::log(2.5066282746310005 * series / s);
  return std::exp(log_gamma);
}

cdouble dirichlet_eta(cdouble s, const AccelConfig& cfg) {
  cfg.validate();
  if (!(s.real() > 0.0)) throw DomainError("dirichlet_eta requires Re(s) > 0");
  auto term = [&](int k) { return real_pow_neg(k + 1.0, s); };
  return accelerated_alternating_sum<cdouble>(term, cfg).value;
}

cdouble zeta_critical(double t, const AccelConfig& cfg) {
  const cdouble s(0.5, t);
  const cdouble factor = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
  return dirichlet_eta(s, cfg) / factor;
}

cdouble dirichlet_beta(cdouble s, const AccelConfig& cfg) {
  cfg.validate();
  if (!(s.real() > 0.0)) throw DomainError("dirichlet_beta requires Re(s) > 0");
  auto term = [&](int k) { return real_pow_neg(2.0 * k + 1.0, s); };
  return accelerated_alternating_sum<cdouble>(term, cfg).value;
}

cdouble lerch_phi(const LerchParams& p, const AccelConfig& cfg) {
  cfg.validate();
  const cdouble z = p.z();
  const cdouble s = p.s();
  const double u = p.u();
  if (z == 0.0) return real_pow_neg(u, s);

  const double r = std::abs(z);
  if (on_unit_circle(z)) {
    if (near(z, -1.0)) {
      auto term = [&](int k) { return real_pow_neg(u + k, s); };
      return accelerated_alternating_sum<cdouble>(term, cfg).value;
    }
    if (near(z, 1.0)) return hurwitz_zeta(s, u, cfg);
    throw DomainError("lerch_phi on the unit circle supports only z = +1 and z = -1");
  }
  if (r >= 0.99)
    throw DomainError("lerch_phi refuses 0.99 <= |z| < 1 (|z| = " + std::to_string(r) + ")");
  return lerch_direct(z, s, u, cfg);
}

cdouble lerch_integrand(cdouble z, double t, double u) {
  if (!(t >= 0.0)) throw DomainError("lerch_integrand requires t >= 0");
  const cdouble denom = std::exp(t) - z;
  if (std::abs(denom) < kPoleTolerance)
    throw SingularityError("e^t - z vanishes at t = " + std::to_string(t));
  return std::exp(-(u - 1.0) * t) / denom;
}

cdouble dirichlet_partial_sum(cdouble s, long n_max) {
  if (n_max < 1) throw DomainError("dirichlet_partial_sum requires n_max >= 1");
  CompensatedSum sum;
  for (long n = 1; n <= n_max; ++n) sum.add(real_pow_neg(static_cast<double>(n), s));
  return sum.value();
}

}  // namespace specialfn
}  // namespace hyperzeta
