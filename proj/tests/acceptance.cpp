// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "hyperzeta/dposim.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/hyperbolic.hpp"
#include "hyperzeta/specialfn.hpp"
#include "hyperzeta/wigner.hpp"
#include "hyperzeta/zetawave.hpp"

using namespace hyperzeta;
using std::numbers::pi;

namespace {

const double kSqrtTwoPi = std::sqrt(2.0 * pi);

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

GridSpec eta_window(double half_width) { return GridSpec(-half_width, half_width, 65536, Axis::EtaLine); }

Outcome gamma_identity() {
  const auto spectrum = hyperbolic::mellin_critical(hyperbolic::to_eta_representation(
      [](double x) { return cdouble(std::exp(-x)); }, eta_window(40.0)));
  double err = 0.0, ref = 0.0;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const double p = spectrum.spec().at(k);
    if (std::abs(p) > 20.0) continue;
    const cdouble want = specialfn::gamma_complex({0.5, -p}) / kSqrtTwoPi;
    err = std::max(err, std::abs(spectrum[k] - want));
    ref = std::max(ref, std::abs(want));
  }
  return {err / ref <= 1e-7, fmt("sup|err|/sup|ref| = %.3g", err / ref)};
}

Outcome zeta_wave_transform() {
  const double n = zeta_wave_norm();
  const auto spectrum = hyperbolic::mellin_critical(hyperbolic::to_eta_representation(
      [n](double x) { return cdouble(n / (1.0 + std::exp(x))); }, eta_window(40.0)));
  double err = 0.0;
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const double p = spectrum.spec().at(k);
    if (std::abs(p) <= 30.0)
      err = std::max(err, std::abs(spectrum[k] - zetawave::psi_zeta_momentum_closed(p)));
  }
  return {err <= 1e-6, fmt("max abs diff = %.3g", err)};
}

Outcome zero_correspondence() {
  const std::vector<double> oracle = {14.13472514173469379,  21.022039638771554993, 25.010857580145688763,
                                      30.42487612585951321,  32.935061587739189691, 37.586178158825671257,
                                      40.918719012147495187};
  const auto found = zetawave::zero_scan(
      [](double t) { return std::abs(zetawave::psi_zeta_momentum_closed(-t)); }, 10.0, 42.0, 0.01);
  if (found.size() != oracle.size())
    return {false, fmt("found %.0f zeros, expected %.0f", static_cast<double>(found.size()),
                       static_cast<double>(oracle.size()))};
  double err = 0.0;
  for (std::size_t i = 0; i < oracle.size(); ++i) err = std::max(err, std::abs(found[i] - oracle[i]));
  return {err <= 1e-4, fmt("7 zeros, max deviation = %.3g", err)};
}

Outcome eigenfunction() {
  const LerchWave psi(-1.0, 1.0);
  const auto grid = GridSpec::with_step(0.1, 20.0, 1e-3, Axis::XHalfline);
  const double residual = zetawave::schrodinger_residual(
      psi, [](double x) { return zetawave::potential_eval(PotentialProfile::zeta(), x); }, -0.5, grid);
  const double x = 1e-6, h = 1e-7;
  const double log_derivative = ((psi(x + h) - psi(x - h)) / (2.0 * h * psi(x))).real();
  const bool pass = residual <= 1e-6 && std::abs(log_derivative + 0.5) <= 1e-4;
  return {pass, fmt("residual = %.3g, psi'/psi(1e-6) = %.8f", residual, log_derivative)};
}

Outcome unitarity() {
  const SigmaWave sigma(3.0);
  const LerchWave zeta(-1.0, 1.0);
  const LerchWave lerch(0.5, 2.0);
  struct Case {
    hyperbolic::Wavefunction f;
    double half_width;
  };
  const std::vector<Case> cases = {
      {zeta, 40.0},
      {lerch, 40.0},
      {[&](double x) { return cdouble(sigma(x)); }, 50.0},
  };
  double worst = 0.0;
  for (const auto& c : cases) {
    const double norm_x = quadrature::integrate_halfline([&](double x) { return cdouble(std::norm(c.f(x))); })
                              .value.real();
    const auto spectrum =
        hyperbolic::mellin_critical(hyperbolic::to_eta_representation(c.f, eta_window(c.half_width)));
    worst = std::max(worst, hyperbolic::parseval_check(norm_x, spectrum));
  }
  return {worst <= 1e-5, fmt("max Parseval discrepancy = %.3g", worst)};
}

Outcome sum_identity() {
  const SigmaWave w(1.0);
  double worst = 0.0;
  for (double p : {0.0, 2.0, 5.0, 8.0, 10.0}) {
    const cdouble s(0.5, -p);
    const cdouble transform = hyperbolic::mellin_integral_direct([&](double x) { return cdouble(w(x)); }, s);
    const cdouble eta_factor = 1.0 - std::exp((1.0 - s) * std::numbers::ln2);
    const cdouble closed = w.norm() * eta_factor * zetawave::g_mellin_closed(s, 1.0) *
                           specialfn::zeta_critical(-p);
    worst = std::max(worst, std::abs(transform - closed));
  }
  return {worst <= 1e-5, fmt("max abs diff = %.3g", worst)};
}

Outcome closed_mellin_g() {
  double worst = 0.0;
  int pairs = 0;
  for (double phi : {0.0, 1.0, 2.0, 2.8, 3.0})
    for (double t : {-10.0, -4.5, 0.5, 3.0, 10.0}) {
      const cdouble s(0.5, t);
      const cdouble direct = hyperbolic::mellin_integral_direct(
          [phi](double x) { return cdouble(zetawave::g_family_eval(phi, x)); }, s);
      worst = std::max(worst, std::abs(direct - zetawave::g_mellin_closed(s, phi)));
      ++pairs;
    }
  return {worst <= 1e-6 && pairs == 25, fmt("%.0f pairs, max abs diff = %.3g", pairs, worst)};
}

Outcome wigner_marginals() {
  const double n = zeta_wave_norm();
  const GridSpec eta(-12.0, 8.0, 1024, Axis::EtaLine);
  const GridSpec momenta(-45.0, 45.0, 1024, Axis::PEtaLine);
  const auto psi_bar = [n](double e) { return cdouble(std::exp(0.5 * e) * n / (1.0 + std::exp(std::exp(e)))); };
  const auto w = wigner::wigner_from_function(psi_bar, eta, momenta);
  const auto me = wigner::marginal_eta(w);
  const auto mp = wigner::marginal_p(w);
  double eta_err = 0.0, p_err = 0.0;
  for (std::size_t i = 0; i < eta.n(); ++i) eta_err = std::max(eta_err, std::abs(me[i] - std::norm(psi_bar(eta.at(i)))));
  for (std::size_t j = 0; j < momenta.n(); ++j)
    p_err = std::max(p_err, std::abs(mp[j] - std::norm(zetawave::psi_zeta_momentum_closed(momenta.at(j)))));
  const double mass_err = std::abs(w.total_mass() - 1.0);

  const GridSpec geta(-8.0, -8.0 + 1023.0 / 64.0, 1024, Axis::EtaLine);
  const GridSpec gp(-8.0, 8.0, 256, Axis::PEtaLine);
  std::vector<cdouble> g(geta.n());
  for (std::size_t i = 0; i < geta.n(); ++i) g[i] = std::pow(pi, -0.25) * std::exp(-0.5 * geta.at(i) * geta.at(i));
  const WaveGrid gauss(geta, g, WaveGrid(geta, g).trapezoid_norm());
  const auto gw = wigner::wigner_from_state(gauss, gp);
  double gauss_err = 0.0;
  for (std::size_t i = 0; i < geta.n(); ++i)
    for (std::size_t j = 0; j < gp.n(); ++j) {
      const double e = geta.at(i), p = gp.at(j);
      if (std::abs(e) <= 4.0 && std::abs(p) <= 4.0)
        gauss_err = std::max(gauss_err, std::abs(gw(i, j) - std::exp(-e * e - p * p) / pi));
    }

  const bool pass = eta_err <= 2e-3 && p_err <= 2e-3 && mass_err <= 2e-3 && gauss_err <= 1e-6;
  char buf[200];
  std::snprintf(buf, sizeof buf, "eta marginal %.2g, p marginal %.2g, mass %.2g, Gaussian %.2g", eta_err,
                p_err, mass_err, gauss_err);
  return {pass, buf};
}

Outcome dpo_checks() {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  DpoConfig long_run;
  long_run.t_end = 5.0;
  long_run.dt = 1e-4;
  double drift = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double xs = coord(rng), ps = coord(rng);
    const auto traj = dposim::dpo_integrate(dposim::dpo_init(xs, ps), long_run);
    const double c0 = traj.front().state.conserved();
    for (const auto& s : traj) drift = std::max(drift, std::abs(s.state.conserved() - c0) / (1.0 + s.tau));
  }

  DpoConfig short_run;
  short_run.t_end = 0.01;
  short_run.dt = 1e-5;
  double series = 0.0;
  for (auto [xs, ps] : {std::pair{1.0, 1.0}, std::pair{2.0, 1.0}}) {
    const auto end = dposim::dpo_integrate(dposim::dpo_init(xs, ps), short_run).back();
    const double tau = end.tau;
    const double bracket = 1.0 - (xs * xs + ps * ps) * tau * tau / 24.0;
    const double x_series = 0.5 * xs * ps * tau * bracket;
    const double p_series = -0.25 * (xs * xs - ps * ps) * tau * bracket;
    series = std::max(series, std::abs(end.state.x_pb - x_series) / std::abs(x_series));
    if (p_series != 0.0) series = std::max(series, std::abs(end.state.p_pb - p_series) / std::abs(p_series));
    else series = std::max(series, std::abs(end.state.p_pb));
  }

  DpoConfig unit;
  const double central = dposim::central_potential_check(dposim::dpo_integrate(dposim::dpo_init(1.0, 1.0), unit));
  const bool pass = drift <= 1e-9 && series <= 1e-6 && central <= 1e-5;
  char buf[200];
  std::snprintf(buf, sizeof buf, "drift/(1+tau) %.2g, series rel err %.2g, central check %.2g", drift, series,
                central);
  return {pass, buf};
}

Outcome slower_damping() {
  const cdouble s(0.5, -30.0);
  const double ratio = std::abs(zetawave::g_mellin_closed(s, 3.0)) / std::abs(specialfn::gamma_complex(s));
  return {ratio >= 1e3, fmt("|Xi(1/2-30i,3)|/|Gamma(1/2-30i)| = %.3g", ratio)};
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Mellin transform of e^-x equals Gamma", 5.0, gamma_identity},
      {2, "psi_zeta transform matches its closed form", 0.0, zeta_wave_transform},
      {3, "zero correspondence on t in [10, 42]", 60.0, zero_correspondence},
      {4, "eigenfunction and Robin boundary", 0.0, eigenfunction},
      {5, "Parseval for the corpus states", 0.0, unitarity},
      {6, "sum identity for the Sigma(.,1) state", 0.0, sum_identity},
      {7, "closed-form Mellin transform of g", 0.0, closed_mellin_g},
      {8, "Wigner marginals and normalization", 120.0, wigner_marginals},
      {9, "DPO conservation, series and reduction", 0.0, dpo_checks},
      {10, "slower damping of Xi than Gamma", 0.0, slower_damping},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && seconds > c.time_limit) {
      outcome.pass = false;
      outcome.detail += fmt(" (exceeded %.0f s limit)", c.time_limit);
    }
    if (!outcome.pass) ++failures;
    std::printf("%s criterion %2d: %s: %s [%.2f s]\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
