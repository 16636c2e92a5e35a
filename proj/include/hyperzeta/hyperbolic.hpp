#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "hyperzeta/quadrature.hpp"

namespace hyperzeta {

enum class Axis { XHalfline, EtaLine, PEtaLine };

/// Uniform grid min, min + step, ..., max with n points. Grids on the eta and
/// p_eta lines feed the FFT and must have a power-of-two size.
class GridSpec {
 public:
  GridSpec(double min, double max, std::size_t n, Axis axis);

  double min() const { return min_; }
  double max() const { return max_; }
  std::size_t n() const { return n_; }
  Axis axis() const { return axis_; }
  double step() const { return step_; }
  double at(std::size_t i) const { return min_ + static_cast<double>(i) * step_; }

  /// Grid with spacing close to `step` covering [min, max]; max is moved up to
  /// land on a grid point. Intended for X_HALFLINE residual grids.
  static GridSpec with_step(double min, double max, double step, Axis axis);

 private:
  double min_;
  double max_;
  std::size_t n_;
  Axis axis_;
  double step_;
};

/// A sampled wavefunction. Immutable once built.
class WaveGrid {
 public:
  WaveGrid(GridSpec spec, std::vector<std::complex<double>> values,
           std::optional<double> norm_tag = std::nullopt);

  const GridSpec& spec() const { return spec_; }
  std::span<const std::complex<double>> values() const { return values_; }
  std::complex<double> operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  std::optional<double> norm_tag() const { return norm_tag_; }

  /// Trapezoid-rule integral of |psi|^2 over the grid.
  double trapezoid_norm() const;

  /// Same grid and norm tag, values multiplied by `factor`.
  WaveGrid scaled(std::complex<double> factor) const;

 private:
  GridSpec spec_;
  std::vector<std::complex<double>> values_;
  std::optional<double> norm_tag_;
};

/// Relative edge-decay threshold: |psi_bar| at both window ends must be below
/// this fraction of max |psi_bar| for the truncated eta integral to be trusted.
inline constexpr double kEdgeDecayTolerance = 1e-8;

namespace hyperbolic {

using Wavefunction = std::function<std::complex<double>(double)>;

/// psi_bar(eta) = e^{eta/2} f(e^eta) on an ETA_LINE grid, with norm_tag set.
/// Throws EvaluationError if f throws or returns a non-finite value.
WaveGrid to_eta_representation(const Wavefunction& f, const GridSpec& eta_spec);

/// Grid on which mellin_critical reports <p_eta|psi> for an eta grid:
/// p_k = 2 pi k / (n d_eta), k = -n/2 .. n/2 - 1.
GridSpec dual_momentum_grid(const GridSpec& eta_spec);

/// <p_eta|psi> = (1/sqrt(2 pi)) {M psi}(1/2 - i p_eta), evaluated as the
/// Fourier integral (1/sqrt(2 pi)) int psi_bar(eta) e^{-i p_eta eta} d eta by FFT.
/// Throws TruncationError unless psi_bar has decayed to kEdgeDecayTolerance of
/// its peak at both window ends.
WaveGrid mellin_critical(const WaveGrid& psi_bar, double edge_tol = kEdgeDecayTolerance);

/// int_0^inf f(t) t^{s-1} dt by double-exponential panels on t = e^eta.
std::complex<double> mellin_integral_direct(const Wavefunction& f, std::complex<double> s,
                                            const QuadConfig& quad = {});

/// | int |<p_eta|psi>|^2 dp_eta - psi_x_norm |.
double parseval_check(double psi_x_norm, const WaveGrid& psi_peta);

}  // namespace hyperbolic
}  // namespace hyperzeta
