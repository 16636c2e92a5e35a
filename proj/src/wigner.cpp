#include "hyperzeta/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <span>
#include <numbers>
#include <string>
#include <thread>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

double trapezoid_weight(std::size_t i, std::size_t n) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; }

}  // namespace

WignerGrid::WignerGrid(GridSpec eta_spec, GridSpec p_spec, std::vector<double> values,
                       double max_imag_residue)
    : eta_spec_(eta_spec),
      p_spec_(p_spec),
      values_(std::move(values)),
      max_imag_residue_(max_imag_residue) {
  if (values_.size() != eta_spec_.n() * p_spec_.n())
    throw DomainError("WignerGrid values do not match the grid sizes");
}

double WignerGrid::total_mass() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < eta_spec_.n(); ++i)
    for (std::size_t j = 0; j < p_spec_.n(); ++j)
      sum += trapezoid_weight(i, eta_spec_.n()) * trapezoid_weight(j, p_spec_.n()) * (*this)(i, j);
  return sum * eta_spec_.step() * p_spec_.step();
}

namespace wigner {

namespace {

// Rows first_row .. first_row + out_spec.n() - 1 of the Wigner function of the
// samples psi (uniform step h), reported on out_spec.
WignerGrid wigner_rows(std::span<const std::complex<double>> psi, std::size_t first_row,
                       const GridSpec& out_spec, const GridSpec& p_spec, unsigned threads) {
  const std::size_t n_all = psi.size();
  const std::size_t n_eta = out_spec.n();
  const std::size_t n_p = p_spec.n();
  const double h = out_spec.step();
  const double scale = h / std::numbers::pi;
  std::vector<double> values(n_eta * n_p);
  std::vector<double> residues(n_eta, 0.0);

  const auto compute_rows = [&](std::size_t first, std::size_t stride) {
    std::vector<std::complex<double>> kernel;
    for (std::size_t r = first; r < n_eta; r += stride) {
      const std::size_t i = first_row + r;
      const std::size_t reach = std::min(i, n_all - 1 - i);
      kernel.resize(reach + 1);
      for (std::size_t m = 0; m <= reach; ++m) kernel[m] = psi[i + m] * std::conj(psi[i - m]);
      double worst = 0.0;
      for (std::size_t j = 0; j < n_p; ++j) {
        const double p = p_spec.at(j);
        const std::complex<double> step = std::polar(1.0, 2.0 * h * p);
        std::complex<double> phase = step;
        std::complex<double> sum = kernel[0];
        for (std::size_t m = 1; m <= reach; ++m) {
          // K_{-m} = conj(K_m) pairs with the conjugate phase
          sum += kernel[m] * phase + std::conj(kernel[m]) * std::conj(phase);
          phase *= step;
        }
        values[r * n_p + j] = scale * sum.real();
        worst = std::max(worst, scale * std::abs(sum.imag()));
      }
      residues[r] = worst;
    }
  };

  if (threads == 0) threads = std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n_eta)));
  if (threads == 1) {
    compute_rows(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(compute_rows, t, threads);
    for (auto& worker : pool) worker.join();
  }

  const double residue = *std::max_element(residues.begin(), residues.end());
  return WignerGrid(out_spec, p_spec, std::move(values), residue);
}

void check_inputs(const GridSpec& eta_spec, const GridSpec& p_spec) {
  if (eta_spec.axis() != Axis::EtaLine)
    throw DomainError("the Wigner function needs psi_bar on an ETA_LINE grid");
  if (p_spec.axis() != Axis::PEtaLine)
    throw DomainError("the Wigner function needs a P_ETA_LINE momentum grid");
}

void check_state(double norm, double edge, const WignerOptions& options) {
  if (std::abs(norm - 1.0) > options.norm_tol)
    throw DomainError("the Wigner function expects a normalized state (norm = " + std::to_string(norm) + ")");
  if (edge > options.edge_density_tol)
    throw TruncationError("|psi_bar|^2 at the eta window ends is " + std::to_string(edge) +
                          "; widen the window");
}

}  // namespace

WignerGrid wigner_from_state(const WaveGrid& psi_bar, const GridSpec& p_spec,
                             const WignerOptions& options) {
  check_inputs(psi_bar.spec(), p_spec);
  const auto psi = psi_bar.values();
  check_state(psi_bar.norm_tag().value_or(psi_bar.trapezoid_norm()),
              std::max(std::norm(psi.front()), std::norm(psi.back())), options);
  return wigner_rows(psi, 0, psi_bar.spec(), p_spec, options.threads);
}

WignerGrid wigner_from_function(const std::function<std::complex<double>(double)>& psi_bar,
                                const GridSpec& eta_spec, const GridSpec& p_spec,
                                const WignerOptions& options) {
  check_inputs(eta_spec, p_spec);
  const std::size_t n = eta_spec.n();
  const GridSpec extended(eta_spec.min() - static_cast<double>(n) * eta_spec.step(), eta_spec.max(), 2 * n,
                          Axis::EtaLine);
  std::vector<std::complex<double>> samples(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    // share the output grid's abscissae exactly on the upper half
    const double eta = i < n ? extended.at(i) : eta_spec.at(i - n);
    samples[i] = psi_bar(eta);
    if (!std::isfinite(samples[i].real()) || !std::isfinite(samples[i].imag()))
      throw EvaluationError("psi_bar is not finite at eta = " + std::to_string(eta));
  }
  const WaveGrid sampled(extended, samples);
  check_state(sampled.trapezoid_norm(), std::max(std::norm(samples.front()), std::norm(samples.back())),
              options);
  return wigner_rows(sampled.values(), n, eta_spec, p_spec, options.threads);
}

std::vector<double> marginal_eta(const WignerGrid& w) {
  const std::size_t n_eta = w.eta_spec().n();
  const std::size_t n_p = w.p_spec().n();
  std::vector<double> out(n_eta, 0.0);
  for (std::size_t i = 0; i < n_eta; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < n_p; ++j) sum += trapezoid_weight(j, n_p) * w(i, j);
    out[i] = sum * w.p_spec().step();
  }
  return out;
}

std::vector<double> marginal_p(const WignerGrid& w) {
  const std::size_t n_eta = w.eta_spec().n();
  const std::size_t n_p = w.p_spec().n();
  std::vector<double> out(n_p, 0.0);
  for (std::size_t i = 0; i < n_eta; ++i) {
    const double weight = trapezoid_weight(i, n_eta) * w.eta_spec().step();
    for (std::size_t j = 0; j < n_p; ++j) out[j] += weight * w(i, j);
  }
  return out;
}

}  // namespace wigner
}  // namespace hyperzeta
