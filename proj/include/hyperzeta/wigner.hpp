#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hyperzeta/hyperbolic.hpp"

namespace hyperzeta {

/// W(eta, p_eta) sampled on eta_spec x p_spec, row-major in eta.
class WignerGrid {
 public:
  WignerGrid(GridSpec eta_spec, GridSpec p_spec, std::vector<double> values,
             double max_imag_residue = 0.0);

  const GridSpec& eta_spec() const { return eta_spec_; }
  const GridSpec& p_spec() const { return p_spec_; }
  double operator()(std::size_t i_eta, std::size_t j_p) const {
    return values_[i_eta * p_spec_.n() + j_p];
  }
  const std::vector<double>& values() const { return values_; }

  /// Largest |Im W| discarded when the real part was kept.
  double max_imag_residue() const { return max_imag_residue_; }

  /// Trapezoid sum of W over both axes.
  double total_mass() const;

 private:
  GridSpec eta_spec_;
  GridSpec p_spec_;
  std::vector<double> values_;
  double max_imag_residue_;
};

struct WignerOptions {
  /// |psi_bar|^2 allowed at either window end; the marginals lose about this
  /// much density to the truncation.
  double edge_density_tol = 1e-5;
  /// Allowed deviation of the input norm_tag from 1.
  double norm_tol = 1e-4;
  /// Worker threads for the per-eta rows; 0 picks hardware concurrency.
  unsigned threads = 0;
};

namespace wigner {

/// W(eta, p) = (1/2pi) int psi_bar(eta + eta'/2) psi_bar*(eta - eta'/2) e^{i eta' p} d eta'
/// on the eta grid of psi_bar. With eta' = 2y every sample falls on the input
/// grid; psi_bar is taken as zero outside its window.
///
/// For a complex psi_bar this sign convention makes the p marginal
/// |<-p_eta|psi>|^2; for real psi_bar the two coincide.
WignerGrid wigner_from_state(const WaveGrid& psi_bar, const GridSpec& p_spec,
                             const WignerOptions& options = {});

/// The same Wigner function on eta_spec, with psi_bar sampled on the window
/// extended downward by its own length so that the correlations of the rows
/// near the lower edge see the state's tail. The norm and edge checks apply to
/// the extended window.
WignerGrid wigner_from_function(const std::function<std::complex<double>(double)>& psi_bar,
                                const GridSpec& eta_spec, const GridSpec& p_spec,
                                const WignerOptions& options = {});

/// int W dp (trapezoid over the p grid), one value per eta row.
std::vector<double> marginal_eta(const WignerGrid& w);

/// int W d eta (trapezoid over the eta grid), one value per p column.
std::vector<double> marginal_p(const WignerGrid& w);

}  // namespace wigner
}  // namespace hyperzeta
