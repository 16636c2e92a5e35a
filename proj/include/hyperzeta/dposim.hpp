#pragma once

#include <array>
#include <vector>

namespace hyperzeta {

/// Semiclassical degenerate-parametric-oscillator state in rescaled time tau:
/// probe quadratures (x_pb, p_pb) and the system combinations
/// v = x_s p_s, w = (x_s^2 + p_s^2)/2, u_dpo = (x_s^2 - p_s^2)/2.
struct DpoState {
  double x_pb = 0.0;
  double v = 0.0;
  double w = 0.0;
  double u_dpo = 0.0;
  double p_pb = 0.0;

  /// x_pb^2 + p_pb^2 + w, a constant of the motion.
  double conserved() const { return x_pb * x_pb + p_pb * p_pb + w; }

  std::array<double, 5> as_array() const { return {x_pb, v, w, u_dpo, p_pb}; }
  static DpoState from_array(const std::array<double, 5>& a) { return {a[0], a[1], a[2], a[3], a[4]}; }
  bool operator==(const DpoState&) const = default;
};

enum class DpoMethod { Rk4 };

struct DpoConfig {
  double dt = 1e-4;
  double t_end = 1.0;
  DpoMethod method = DpoMethod::Rk4;

  void validate() const;
};

struct DpoSample {
  double tau;
  DpoState state;
};

using DpoTrajectory = std::vector<DpoSample>;

namespace dposim {

/// Vacuum probe, system at (x_s, p_s).
DpoState dpo_init(double x_s, double p_s);

/// d/dtau of the state: (v/2, -x_pb w, -x_pb v + p_pb u_dpo, p_pb w, -u_dpo/2).
DpoState dpo_rhs(const DpoState& s);

/// One classical RK4 step; a negative dt steps backward.
DpoState rk4_step(const DpoState& s, double dt);

/// Fixed-step RK4 from tau = 0 to t_end. Every step is recorded. Throws
/// StepError if a component exceeds 1e12 in magnitude.
DpoTrajectory dpo_integrate(const DpoState& s0, const DpoConfig& cfg);

/// Residual of the probe-only reduction 2 x'' = -x (K - r^2), 2 p'' = -p (K - r^2)
/// with K = x_pb^2 + p_pb^2 + w at tau = 0: the maximum over interior samples of
/// |2 x'' + x (K - r^2)| + |2 p'' + p (K - r^2)|, second derivatives by central
/// differences. Samples must be uniformly spaced.
double central_potential_check(const DpoTrajectory& traj);

struct WRange {
  double min;
  double max;
};

/// Extremes of w along a trajectory.
WRange w_range(const DpoTrajectory& traj);

}  // namespace dposim
}  // namespace hyperzeta
