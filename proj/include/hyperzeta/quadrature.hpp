#pragma once

#include <complex>
#include <functional>

namespace hyperzeta {

/// Tolerances for the double-exponential integrators.
struct QuadConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_level = 12;        // tanh-sinh step h = 2^-level
  double panel_width = 1.0;  // width of the unit panels on the log axis
  int max_panels = 2000;     // per direction
};

struct QuadResult {
  std::complex<double> value{};
  double abs_integral = 0.0;  // estimate of the integral of |f|
  double error_estimate = 0.0;
  int evaluations = 0;
};

namespace quadrature {

using ComplexIntegrand = std::function<std::complex<double>(double)>;

/// Tanh-sinh quadrature on a finite interval, refining the step until two
/// successive levels agree. Endpoints are never evaluated.
QuadResult tanh_sinh(const ComplexIntegrand& f, double a, double b, double abs_tol,
                     const QuadConfig& cfg = {});

/// Integral over the whole real line, summed panel by panel outward from 0 in
/// both directions until two consecutive panels contribute less than
/// abs_tol / 8 in absolute mass. The integrand must decay in both directions.
QuadResult integrate_line(const ComplexIntegrand& f, const QuadConfig& cfg = {});

/// Integral over (0, inf) via t = e^eta, i.e. integrate_line of f(e^eta) e^eta.
QuadResult integrate_halfline(const ComplexIntegrand& f, const QuadConfig& cfg = {});

}  // namespace quadrature
}  // namespace hyperzeta
