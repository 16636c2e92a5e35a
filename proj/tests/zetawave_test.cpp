#include <cmath>
#include <numbers>

#include "hyperzeta/errors.hpp"
#include "hyperzeta/hyperbolic.hpp"
#include "hyperzeta/specialfn.hpp"
#include "hyperzeta/zetawave.hpp"
#include "support.hpp"

using namespace hyperzeta;
using hyperzeta::test::check_close;
using std::numbers::pi;

namespace {

const double kSqrtTwoPi = std::sqrt(2.0 * pi);

const std::vector<double> kFirstZeros = {14.13472514173469379, 21.022039638771554993,
                                         25.010857580145688763, 30.42487612585951321,
                                         32.935061587739189691, 37.586178158825671257};

double log_derivative(const std::function<cdouble(double)>& psi, double x, double h) {
  return ((psi(x + h) - psi(x - h)) / (2.0 * h * psi(x))).real();
}

}  // namespace

TEST_CASE("zeta wavefunction normalization") {
  CHECK(zeta_wave_norm() == doctest::Approx(2.275389834539167414).epsilon(1e-14));
  const LerchWave w(-1.0, 1.0);
  CHECK(w.norm() == doctest::Approx(zeta_wave_norm()).epsilon(1e-9));
  check_close(zetawave::psi_lerch_eval(w, 0.0), zeta_wave_norm() / 2.0, 1e-9);
  CHECK(w.energy() == -0.5);
}

TEST_CASE("Lerch wavefunction normalization") {
  const LerchWave pure(0.0, 1.7);
  CHECK(pure.norm() == doctest::Approx(std::sqrt(2.0 * 1.7)).epsilon(1e-10));
  check_close(pure(0.8), std::sqrt(3.4) * std::exp(-1.7 * 0.8), 1e-10);
  CHECK(LerchWave(0.5, 2.0).norm() == doctest::Approx(1.171265898682402558).epsilon(1e-9));
  CHECK(LerchWave({0.4, 0.5}, 1.3).norm() == doctest::Approx(1.299183072515067997).epsilon(1e-9));
  CHECK_THROWS_AS(LerchWave(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(LerchWave(0.5, -1.0), DomainError);
}

TEST_CASE("boundary constants") {
  CHECK(zetawave::boundary_kappa(-1.0, 1.0) == -0.5);
  CHECK(zetawave::boundary_kappa(0.0, 2.2) == -2.2);
  CHECK(zetawave::boundary_kappa(0.5, 2.0) == -3.0);
  CHECK_THROWS_AS(zetawave::boundary_kappa(1.0, 2.0), DomainError);
}

TEST_CASE("potentials") {
  const auto vz = PotentialProfile::zeta();
  CHECK(zetawave::potential_eval(vz, 0.0) == doctest::Approx(-0.5));
  const PotentialProfile bar(PotentialKind::VBarGeneral, -1.0, 1.0);
  CHECK(std::abs(zetawave::potential_eval(bar, 50.0)) <= 1e-12);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double x = 30.0 * i / 999.0;
    worst = std::max(worst, std::abs(zetawave::potential_eval(bar, x) - zetawave::potential_eval(vz, x)));
  }
  CHECK(worst <= 1e-12);
  for (double z : {-1.0, -0.5, 0.3, 0.8})
    CHECK(zetawave::potential_eval(PotentialProfile(PotentialKind::VBarGeneral, z, 1.4), 1e-9) ==
          doctest::Approx(zetawave::potential_boundary_limit(z, 1.4)).epsilon(1e-6));
  CHECK(zetawave::potential_boundary_limit(-1.0, 1.0) == doctest::Approx(-0.5));
  CHECK_THROWS_AS(PotentialProfile(PotentialKind::VZeta, 0.5, 1.0), DomainError);
}

TEST_CASE("schrodinger residual") {
  const auto grid = GridSpec::with_step(0.1, 20.0, 1e-3, Axis::XHalfline);
  const LerchWave zeta(-1.0, 1.0);
  const auto vz = [](double x) { return zetawave::potential_eval(PotentialProfile::zeta(), x); };
  CHECK(zetawave::schrodinger_residual(zeta, vz, -0.5, grid) <= 1e-6);
  const double wrong = zetawave::schrodinger_residual(zeta, vz, 0.0, grid);
  CHECK(wrong > 0.2);
  CHECK(wrong < 1.0);

  const LerchWave pure(0.0, 1.5);
  const auto zero = [](double) { return 0.0; };
  CHECK(zetawave::schrodinger_residual(pure, zero, -1.125, grid) <= 1e-6);
}

TEST_CASE("eigenfunction property for random real z") {
  auto rng = test::seeded_rng();
  const auto grid = GridSpec::with_step(0.1, 20.0, 1e-3, Axis::XHalfline);
  for (int i = 0; i < 10; ++i) {
    const double z = test::uniform(rng, -0.9, 0.9);
    const double u = test::uniform(rng, 0.5, 3.0);
    const LerchWave w(z, u);
    const PotentialProfile v(PotentialKind::VBarGeneral, z, u);
    const double r = zetawave::schrodinger_residual(
        w, [&](double x) { return zetawave::potential_eval(v, x); }, w.energy(), grid);
    INFO("z = " << z << " u = " << u);
    CHECK(r <= 1e-6);
    CHECK(log_derivative(w, 1e-6, 1e-7) == doctest::Approx(zetawave::boundary_kappa(z, u)).epsilon(1e-4));
  }
  CHECK(std::abs(log_derivative(LerchWave(-1.0, 1.0), 1e-6, 1e-7) + 0.5) <= 1e-4);
}

TEST_CASE("g family") {
  CHECK(zetawave::g_family_eval(0.0, 3.0) == doctest::Approx(0.25));
  CHECK(zetawave::g_family_eval(pi / 2.0, 2.0) == doctest::Approx(0.2));
  CHECK(zetawave::g_family_eval(3.0, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("closed Mellin transform of g") {
  for (double s : {0.2, 0.5, 0.9}) check_close(zetawave::g_mellin_closed(s, 0.0), pi / std::sin(pi * s), 1e-12);
  check_close(zetawave::g_mellin_closed(0.5, pi / 2.0), pi / std::sqrt(2.0), 1e-12);
  const cdouble s(0.5, -5.0);
  const auto direct =
      hyperbolic::mellin_integral_direct([](double x) { return cdouble(zetawave::g_family_eval(3.0, x)); }, s);
  check_close(zetawave::g_mellin_closed(s, 3.0), direct, 1e-6);
  CHECK_THROWS_AS(zetawave::g_mellin_closed(1.5, 1.0), DomainError);
  CHECK_THROWS_AS(zetawave::g_mellin_closed(1.0, 1.0), DomainError);
}

TEST_CASE("sigma sum values") {
  const SigmaWave half_pi(pi / 2.0);
  CHECK(half_pi.unnormalized(1.0) == doctest::Approx(0.36398547250893341852).epsilon(1e-11));
  CHECK(SigmaWave(3.0).unnormalized(0.37) == doctest::Approx(-3.4198316880641707811).epsilon(1e-11));
  CHECK(SigmaWave(2.5).unnormalized(0.05) == doctest::Approx(0.51001963361324628179).epsilon(1e-10));
  const SigmaWave flat(0.0);
  CHECK(flat.unnormalized(1.0) == doctest::Approx(1.0 - std::numbers::ln2).epsilon(1e-12));
  const SigmaWave one(1.0);
  CHECK(std::abs(zetawave::sigma_eval(one, 50.0)) < 0.02 * one.norm());
  CHECK_THROWS_AS(SigmaWave(3.1), DomainError);
  CHECK_THROWS_AS(one.unnormalized(0.0), DomainError);
}

TEST_CASE("sigma series and summation branches meet") {
  for (double phi : {0.0, 1.0, 2.0, 3.0}) {
    const SigmaWave w(phi);
    const double x = SigmaWave::kSeriesCutoff;
    CHECK(w.unnormalized(x * (1.0 - 1e-9)) == doctest::Approx(w.unnormalized(x * (1.0 + 1e-9))).epsilon(1e-8));
  }
}

TEST_CASE("sigma states are normalized") {
  for (double phi : {0.0, 1.0, 3.0}) {
    const SigmaWave w(phi);
    const auto mass = quadrature::integrate_halfline([&](double x) { return cdouble(w(x) * w(x)); });
    CHECK(mass.value.real() == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("psi_zeta closed-form momentum profile") {
  const cdouble at_zero = zeta_wave_norm() * (1.0 - std::sqrt(2.0)) * std::sqrt(pi) *
                          -1.4603545088095868129 / kSqrtTwoPi;
  check_close(zetawave::psi_zeta_momentum_closed(0.0), at_zero, 1e-10);
  CHECK(std::abs(zetawave::psi_zeta_momentum_closed(-14.134725)) <= 1e-6 * std::abs(at_zero));
  for (double p : {0.5, 3.0, 17.0, 41.0})
    CHECK(std::abs(zetawave::psi_zeta_momentum_closed(-p)) ==
          doctest::Approx(std::abs(zetawave::psi_zeta_momentum_closed(p))).epsilon(1e-10));
}

TEST_CASE("chi closed-form momentum profile") {
  const SigmaWave three(3.0);
  CHECK(std::abs(zetawave::chi_momentum_closed(three, 0.0)) > 0.0);
  CHECK(std::isfinite(std::abs(zetawave::chi_momentum_closed(three, 0.0))));
  const cdouble s(0.5, -30.0);
  CHECK(std::abs(zetawave::g_mellin_closed(s, 3.0)) / std::abs(specialfn::gamma_complex(s)) >= 1e3);

  // the factors other than zeta have no zeros on the scanned line
  const auto factors = [](double p) {
    const cdouble eta_factor = 1.0 - std::exp(cdouble(0.5, p) * std::numbers::ln2);
    return std::abs(eta_factor * zetawave::g_mellin_closed({0.5, -p}, 3.0));
  };
  double smallest = 1e300;
  for (double p = -60.0; p <= 60.0; p += 0.01) smallest = std::min(smallest, factors(p));
  CHECK(smallest > 1e-4);
  CHECK(zetawave::zero_scan(factors, -60.0, 60.0, 0.01).empty());
}

TEST_CASE("sum identity for the Sigma state") {
  const SigmaWave w(1.0);
  QuadConfig quad;
  quad.abs_tol = 1e-10;
  for (double p : {-9.0, -4.0, 0.0, 3.0, 7.5}) {
    const cdouble s(0.5, -p);
    const auto direct = hyperbolic::mellin_integral_direct([&](double x) { return cdouble(w(x)); }, s, quad);
    check_close(direct, zetawave::chi_momentum_closed(w, p), 1e-5);
  }
}

TEST_CASE("zero scanner") {
  const auto sine = zetawave::zero_scan([](double t) { return std::abs(std::sin(t)); }, 1.0, 7.0, 0.05);
  REQUIRE(sine.size() == 2);
  CHECK(std::abs(sine[0] - pi) <= 1e-8);
  CHECK(std::abs(sine[1] - 2.0 * pi) <= 1e-8);

  const auto zeta = zetawave::zero_scan([](double t) { return std::abs(specialfn::zeta_critical(t)); }, 10.0,
                                        30.0, 0.01);
  REQUIRE(zeta.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(zeta[i] - kFirstZeros[i]) <= 1e-5);

  const auto psi = zetawave::zero_scan(
      [](double t) { return std::abs(zetawave::psi_zeta_momentum_closed(-t)); }, 10.0, 30.0, 0.01);
  REQUIRE(psi.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(psi[i] - kFirstZeros[i]) <= 1e-5);

  CHECK_THROWS_AS(zetawave::zero_scan([](double t) { return t; }, 0.0, 1.0, 0.1), DomainError);
}

TEST_CASE("psi_zeta and chi share their zeros") {
  const SigmaWave three(3.0);
  const auto a = zetawave::zero_scan(
      [](double t) { return std::abs(zetawave::psi_zeta_momentum_closed(-t)); }, 10.0, 40.0, 0.01);
  const auto b = zetawave::zero_scan(
      [&](double t) { return std::abs(zetawave::chi_momentum_closed(three, -t)); }, 10.0, 40.0, 0.01);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() == 6);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(std::abs(a[i] - b[i]) <= 1e-5);
    CHECK(std::abs(a[i] - kFirstZeros[i]) <= 1e-5);
  }
}

TEST_CASE("FFT transform of Lerch states matches the special-function route") {
  const GridSpec eta(-40.0, 40.0, 65536, Axis::EtaLine);
  for (cdouble z : {cdouble(0.5, 0.0), cdouble(-0.9, 0.0), cdouble(0.3, 0.6)}) {
    const LerchWave w(z, 2.0);
    const auto spectrum = hyperbolic::mellin_critical(hyperbolic::to_eta_representation(w, eta));
    double worst = 0.0;
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
      const double p = spectrum.spec().at(k);
      if (std::abs(p) > 10.0) continue;
      const cdouble s(0.5, -p);
      const cdouble want = w.norm() * specialfn::gamma_complex(s) *
                           specialfn::lerch_phi(LerchParams(z, s, w.u())) / kSqrtTwoPi;
      worst = std::max(worst, std::abs(spectrum[k] - want));
    }
    INFO("z = " << z);
    CHECK(worst <= 1e-6);
  }
}
