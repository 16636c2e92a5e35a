#pragma once

#include <complex>
#include <random>

#include <doctest.h>

namespace hyperzeta::test {

inline std::mt19937_64 seeded_rng() { return std::mt19937_64(42); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline void check_close(std::complex<double> got, std::complex<double> want, double tol) {
  INFO("got " << got << " want " << want);
  CHECK(std::abs(got - want) <= tol);
}

inline void check_rel(std::complex<double> got, std::complex<double> want, double tol) {
  INFO("got " << got << " want " << want);
  CHECK(std::abs(got - want) <= tol * std::abs(want));
}

}  // namespace hyperzeta::test
