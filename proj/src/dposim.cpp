#include "hyperzeta/dposim.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperzeta/errors.hpp"

namespace hyperzeta {

namespace {

constexpr double kBlowUp = 1e12;

DpoState axpy(const DpoState& s, double a, const DpoState& d) {
  return {s.x_pb + a * d.x_pb, s.v + a * d.v, s.w + a * d.w, s.u_dpo + a * d.u_dpo,
          s.p_pb + a * d.p_pb};
}

}  // namespace

void DpoConfig::validate() const {
  if (!(dt > 0.0) || !(t_end > 0.0)) throw DomainError("DpoConfig requires dt > 0 and t_end > 0");
  if (dt > 1e-3 * t_end * (1.0 + 1e-12))
    throw DomainError("DpoConfig requires dt <= 1e-3 * t_end");
}

namespace dposim {

DpoState dpo_init(double x_s, double p_s) {
  return {0.0, x_s * p_s, 0.5 * (x_s * x_s + p_s * p_s), 0.5 * (x_s * x_s - p_s * p_s), 0.0};
}

DpoState dpo_rhs(const DpoState& s) {
  return {0.5 * s.v, -s.x_pb * s.w, -s.x_pb * s.v + s.p_pb * s.u_dpo, s.p_pb * s.w,
          -0.5 * s.u_dpo};
}

DpoState rk4_step(const DpoState& s, double dt) {
  const DpoState k1 = dpo_rhs(s);
  const DpoState k2 = dpo_rhs(axpy(s, 0.5 * dt, k1));
  const DpoState k3 = dpo_rhs(axpy(s, 0.5 * dt, k2));
  const DpoState k4 = dpo_rhs(axpy(s, dt, k3));
  const double sixth = dt / 6.0;
  return {s.x_pb + sixth * (k1.x_pb + 2.0 * k2.x_pb + 2.0 * k3.x_pb + k4.x_pb),
          s.v + sixth * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v),
          s.w + sixth * (k1.w + 2.0 * k2.w + 2.0 * k3.w + k4.w),
          s.u_dpo + sixth * (k1.u_dpo + 2.0 * k2.u_dpo + 2.0 * k3.u_dpo + k4.u_dpo),
          s.p_pb + sixth * (k1.p_pb + 2.0 * k2.p_pb + 2.0 * k3.p_pb + k4.p_pb)};
}

DpoTrajectory dpo_integrate(const DpoState& s0, const DpoConfig& cfg) {
  cfg.validate();
  const auto steps = static_cast<long>(std::llround(cfg.t_end / cfg.dt));
  DpoTrajectory traj;
  traj.reserve(static_cast<std::size_t>(steps) + 1);
  traj.push_back({0.0, s0});
  DpoState s = s0;
  for (long k = 1; k <= steps; ++k) {
    s = rk4_step(s, cfg.dt);
    for (double c : s.as_array())
      if (!(std::abs(c) <= kBlowUp))
        throw StepError("state component exceeded 1e12 at tau = " +
                        std::to_string(static_cast<double>(k) * cfg.dt));
    traj.push_back({static_cast<double>(k) * cfg.dt, s});
  }
  return traj;
}

double central_potential_check(const DpoTrajectory& traj) {
  if (traj.size() < 5) throw DomainError("central_potential_check needs at least 5 samples");
  const double h = traj[1].tau - traj[0].tau;
  const double k = traj.front().state.conserved();
  double worst = 0.0;
  for (std::size_t i = 1; i + 1 < traj.size(); ++i) {
    const DpoState& prev = traj[i - 1].state;
    const DpoState& cur = traj[i].state;
    const DpoState& next = traj[i + 1].state;
    const double xdd = (next.x_pb - 2.0 * cur.x_pb + prev.x_pb) / (h * h);
    const double pdd = (next.p_pb - 2.0 * cur.p_pb + prev.p_pb) / (h * h);
    const double well = k - (cur.x_pb * cur.x_pb + cur.p_pb * cur.p_pb);
    worst = std::max(worst, std::abs(2.0 * xdd + cur.x_pb * well) +
                                std::abs(2.0 * pdd + cur.p_pb * well));
  }
  return worst;
}

WRange w_range(const DpoTrajectory& traj) {
  WRange r{traj.front().state.w, traj.front().state.w};
  for (const auto& sample : traj) {
    r.min = std::min(r.min, sample.state.w);
    r.max = std::max(r.max, sample.state.w);
  }
  return r;
}

}  // namespace dposim
}  // namespace hyperzeta
