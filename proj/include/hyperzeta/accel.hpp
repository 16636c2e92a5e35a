#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

/// Limits for alternating-series acceleration and direct summation.
struct AccelConfig {
  long max_terms = 1'000'000;
  double abs_tol = 1e-12;

  void validate() const {
    if (max_terms < 1) throw DomainError("AccelConfig.max_terms must be >= 1");
    if (!(abs_tol >= 10.0 * std::numeric_limits<double>::epsilon()))
      throw DomainError("AccelConfig.abs_tol must be >= 10 * machine epsilon");
  }
};

template <typename T>
struct AccelResult {
  T value{};
  double error_estimate = 0.0;
  int terms = 0;
};

/// Cohen-Rodriguez Villegas-Zagier weights applied to sum_{k>=0} (-1)^k a(k)
/// with n terms. For a(k) a moment sequence of a measure on [0,1] the error is
/// bounded by 2 |mu| / (3 + sqrt 8)^n.
template <typename T, typename Term>
T cvz_alternating_sum(Term&& a, int n) {
  double d = std::pow(3.0 + std::sqrt(8.0), n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  T s{};
  for (int k = 0; k < n; ++k) {
    c = b - c;
    s += c * a(k);
    b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b /
        ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

/// Doubles the CVZ order from 64 until two consecutive estimates agree to
/// abs_tol; the larger-order estimate is returned. Orders above 256 would
/// overflow the weight normalization and are never needed for the measures
/// this library feeds in.
template <typename T, typename Term>
AccelResult<T> accelerated_alternating_sum(Term&& a, const AccelConfig& cfg) {
  constexpr int kFirstOrder = 64;
  constexpr int kMaxOrder = 256;
  const long cap = std::min<long>(cfg.max_terms, kMaxOrder);
  int n = static_cast<int>(std::min<long>(kFirstOrder, cap));
  T previous = cvz_alternating_sum<T>(a, n);
  while (2L * n <= cap) {
    n *= 2;
    T current = cvz_alternating_sum<T>(a, n);
    const double diff = std::abs(current - previous);
    if (!std::isfinite(diff)) break;
    if (diff <= cfg.abs_tol) return {current, diff, n};
    previous = current;
  }
  throw ConvergenceError("alternating-series acceleration did not reach tolerance " +
                         std::to_string(cfg.abs_tol) + " within " + std::to_string(n) +
                         " terms");
}

}  // namespace hyperzeta
