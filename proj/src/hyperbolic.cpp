#include "hyperzeta/hyperbolic.hpp"

#include <fftw3.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const char* axis_name(Axis axis) {
  switch (axis) {
    case Axis::XHalfline: return "X_HALFLINE";
    case Axis::EtaLine: return "ETA_LINE";
    case Axis::PEtaLine: return "P_ETA_LINE";
  }
  return "?";
}

// FFTW's planner is not re-entrant.
std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

void forward_dft(std::vector<std::complex<double>>& data) {
  auto* buffer = reinterpret_cast<fftw_complex*>(data.data());
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buffer, buffer, FFTW_FORWARD,
                            FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  std::lock_guard<std::mutex> lock(fftw_planner_mutex());
  fftw_destroy_plan(plan);
}

}  // namespace

GridSpec::GridSpec(double min, double max, std::size_t n, Axis axis)
    : min_(min), max_(max), n_(n), axis_(axis) {
  if (!std::isfinite(min) || !std::isfinite(max) || !(min < max))
    throw DomainError(std::string("grid requires min < max on ") + axis_name(axis));
  if (n < 16) throw DomainError("grid requires n >= 16");
  if (axis != Axis::XHalfline && !std::has_single_bit(n))
    throw DomainError(std::string("grid on ") + axis_name(axis) + " requires a power-of-two n");
  if (axis == Axis::XHalfline && min < 0.0) throw DomainError("X_HALFLINE grid requires min >= 0");
  step_ = (max - min) / static_cast<double>(n - 1);
}

GridSpec GridSpec::with_step(double min, double max, double step, Axis axis) {
  if (!(step > 0.0)) throw DomainError("grid step must be positive");
  const auto intervals = static_cast<std::size_t>(std::ceil((max - min) / step - 1e-9));
  return GridSpec(min, min + static_cast<double>(intervals) * step, intervals + 1, axis);
}

WaveGrid::WaveGrid(GridSpec spec, std::vector<std::complex<double>> values,
                   std::optional<double> norm_tag)
    : spec_(spec), values_(std::move(values)), norm_tag_(norm_tag) {
  if (values_.size() != spec_.n())
    throw DomainError("WaveGrid values length " + std::to_string(values_.size()) +
                      " does not match grid size " + std::to_string(spec_.n()));
}

double WaveGrid::trapezoid_norm() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double w = (i == 0 || i + 1 == values_.size()) ? 0.5 : 1.0;
    sum += w * std::norm(values_[i]);
  }
  return sum * spec_.step();
}

WaveGrid WaveGrid::scaled(std::complex<double> factor) const {
  std::vector<std::complex<double>> out(values_.begin(), values_.end());
  for (auto& v : out) v *= factor;
  std::optional<double> tag;
  if (norm_tag_) tag = *norm_tag_ * std::norm(factor);
  return WaveGrid(spec_, std::move(out), tag);
}

namespace hyperbolic {

WaveGrid to_eta_representation(const Wavefunction& f, const GridSpec& eta_spec) {
  if (eta_spec.axis() != Axis::EtaLine)
    throw DomainError("to_eta_representation requires an ETA_LINE grid");
  std::vector<std::complex<double>> values(eta_spec.n());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double eta = eta_spec.at(i);
    std::complex<double> v;
    try {
      v = std::exp(0.5 * eta) * f(std::exp(eta));
    } catch (const std::exception& e) {
      throw EvaluationError("wavefunction failed at x = e^" + std::to_string(eta) + ": " +
                            e.what());
    }
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw EvaluationError("wavefunction is not finite at x = e^" + std::to_string(eta));
    values[i] = v;
  }
  WaveGrid untagged(eta_spec, std::move(values));
  const double norm = untagged.trapezoid_norm();
  return WaveGrid(eta_spec, std::vector<std::complex<double>>(untagged.values().begin(),
                                                              untagged.values().end()),
                  norm);
}

GridSpec dual_momentum_grid(const GridSpec& eta_spec) {
  const double n = static_cast<double>(eta_spec.n());
  const double dp = kTwoPi / (n * eta_spec.step());
  return GridSpec(-0.5 * n * dp, (0.5 * n - 1.0) * dp, eta_spec.n(), Axis::PEtaLine);
}

WaveGrid mellin_critical(const WaveGrid& psi_bar, double edge_tol) {
  const GridSpec& spec = psi_bar.spec();
  if (spec.axis() != Axis::EtaLine) throw DomainError("mellin_critical requires an ETA_LINE grid");

  const auto values = psi_bar.values();
  double peak = 0.0;
  for (const auto& v : values) peak = std::max(peak, std::abs(v));
  const double edge = std::max(std::abs(values.front()), std::abs(values.back()));
  if (peak > 0.0 && edge > edge_tol * peak)
    throw TruncationError("psi_bar has not decayed at the eta window ends (edge/peak = " +
                          std::to_string(edge / peak) + "); widen the window");

  const std::size_t n = spec.n();
  std::vector<std::complex<double>> data(values.begin(), values.end());
  forward_dft(data);

  const double d_eta = spec.step();
  const double dp = kTwoPi / (static_cast<double>(n) * d_eta);
  const double prefactor = d_eta / std::sqrt(kTwoPi);
  const auto half = static_cast<long>(n / 2);
  std::vector<std::complex<double>> out(n);
  for (long k = -half; k < half; ++k) {
    const double p = static_cast<double>(k) * dp;
    const std::size_t bin = static_cast<std::size_t>((k + static_cast<long>(n)) % static_cast<long>(n));
    out[static_cast<std::size_t>(k + half)] =
        prefactor * std::polar(1.0, -p * spec.min()) * data[bin];
  }
  return WaveGrid(dual_momentum_grid(spec), std::move(out));
}

std::complex<double> mellin_integral_direct(const Wavefunction& f, std::complex<double> s,
                                            const QuadConfig& quad) {
  const auto integrand = [&](double eta) {
    const double t = std::exp(eta);
    if (t == 0.0 || !std::isfinite(t)) return std::complex<double>{};
    return f(t) * std::exp(s * eta);
  };
  return quadrature::integrate_line(integrand, quad).value;
}

double parseval_check(double psi_x_norm, const WaveGrid& psi_peta) {
  return std::abs(psi_peta.trapezoid_norm() - psi_x_norm);
}

}  // namespace hyperbolic
}  // namespace hyperzeta
