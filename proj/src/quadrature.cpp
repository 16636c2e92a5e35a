#include "hyperzeta/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hyperzeta/errors.hpp"

namespace hyperzeta::quadrature {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;
constexpr double kTMax = 3.2;  // abscissae closer than ~1e-16 of the half width are dropped

struct Accumulator {
  std::complex<double> sum{};
  double abs_sum = 0.0;
  int evaluations = 0;

  void add(const ComplexIntegrand& f, double x, double w) {
    const std::complex<double> v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw QuadratureError("integrand is not finite at x = " + std::to_string(x));
    sum += w * v;
    abs_sum += w * std::abs(v);
    ++evaluations;
  }
};

// Adds the node pair at +-t (or the centre when t == 0).
void add_nodes(const ComplexIntegrand& f, double centre, double half, double t, Accumulator& acc) {
  const double u = kHalfPi * std::sinh(t);
  const double cu = std::cosh(u);
  const double w = half * kHalfPi * std::cosh(t) / (cu * cu);
  if (t == 0.0) {
    acc.add(f, centre, w);
    return;
  }
  // distance from the nearer endpoint, computed without cancellation
  const double delta = half * 2.0 / (std::exp(2.0 * u) + 1.0);
  if (delta <= 0.0 || w <= 0.0) return;
  acc.add(f, centre + half - delta, w);
  acc.add(f, centre - half + delta, w);
}

}  // namespace

QuadResult tanh_sinh(const ComplexIntegrand& f, double a, double b, double abs_tol,
                     const QuadConfig& cfg) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  Accumulator acc;
  double h = 1.0;
  for (double t = 0.0; t <= kTMax; t += h) add_nodes(f, centre, half, t, acc);
  std::complex<double> previous = h * acc.sum;

  for (int level = 1; level <= cfg.max_level; ++level) {
    h *= 0.5;
    for (double t = h; t <= kTMax; t += 2.0 * h) add_nodes(f, centre, half, t, acc);
    const std::complex<double> current = h * acc.sum;
    const double diff = std::abs(current - previous);
    if (level >= 3 && diff <= std::max(abs_tol, cfg.rel_tol * std::abs(current)))
      return {current, h * acc.abs_sum, diff, acc.evaluations};
    previous = current;
  }
  throw QuadratureError("tanh-sinh did not converge on [" + std::to_string(a) + ", " +
                        std::to_string(b) + "]");
}

QuadResult integrate_line(const ComplexIntegrand& f, const QuadConfig& cfg) {
  QuadResult total;
  const double panel_tol = cfg.abs_tol / 64.0;
  const double stop_mass = cfg.abs_tol / 8.0;
  for (int direction : {+1, -1}) {
    int quiet = 0;
    int k = 0;
    for (; k < cfg.max_panels && quiet < 2; ++k) {
      const double lo = direction > 0 ? k * cfg.panel_width : -(k + 1) * cfg.panel_width;
      const QuadResult panel = tanh_sinh(f, lo, lo + cfg.panel_width, panel_tol, cfg);
      total.value += panel.value;
      total.abs_integral += panel.abs_integral;
      total.error_estimate += panel.error_estimate;
      total.evaluations += panel.evaluations;
      quiet = panel.abs_integral <= stop_mass ? quiet + 1 : 0;
    }
    if (quiet < 2) throw QuadratureError("integrand does not decay within max_panels");
  }
  return total;
}

QuadResult integrate_halfline(const ComplexIntegrand& f, const QuadConfig& cfg) {
  return integrate_line(
      [&](double eta) {
        const double t = std::exp(eta);
        if (t == 0.0 || !std::isfinite(t)) return std::complex<double>{};
        return f(t) * t;
      },
      cfg);
}

}  // namespace hyperzeta::quadrature
