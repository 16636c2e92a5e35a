#include "hyperzeta/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "hyperzeta/dposim.hpp"
#include "hyperzeta/errors.hpp"
#include "hyperzeta/hyperbolic.hpp"
#include "hyperzeta/specialfn.hpp"
#include "hyperzeta/wigner.hpp"
#include "hyperzeta/zetawave.hpp"

namespace hyperzeta::cli {

namespace {

using json = nlohmann::ordered_json;
constexpr double kSqrtTwoPi = 2.5066282746310002;

// ---------------------------------------------------------------------------
// Typed access to the per-command key-value parameters.

class Params {
 public:
  Params(const std::map<std::string, std::string>& raw, std::set<std::string> allowed,
         const std::string& command)
      : raw_(raw) {
    for (const auto& [key, value] : raw_)
      if (!allowed.count(key))
        throw DomainError("unknown parameter '" + key + "' for command " + command);
  }

  bool has(const std::string& key) const { return raw_.count(key) > 0; }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto it = raw_.find(key);
    return it == raw_.end() ? fallback : it->second;
  }

  double number(const std::string& key, double fallback) const {
    const auto it = raw_.find(key);
    return it == raw_.end() ? fallback : parse_number(key, it->second);
  }

  long integer(const std::string& key, long fallback) const {
    const double v = number(key, static_cast<double>(fallback));
    if (v != std::floor(v)) throw DomainError("parameter '" + key + "' must be an integer");
    return static_cast<long>(v);
  }

  bool flag(const std::string& key) const {
    const auto it = raw_.find(key);
    return it != raw_.end() && it->second != "false" && it->second != "0";
  }

  std::vector<double> numbers(const std::string& key) const {
    std::vector<double> out;
    const auto it = raw_.find(key);
    if (it == raw_.end()) return out;
    std::string item;
    std::string text = it->second;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    while (in >> item) out.push_back(parse_number(key, item));
    return out;
  }

 private:
  static double parse_number(const std::string& key, const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(v))
      throw DomainError("parameter '" + key + "' is not a number: '" + text + "'");
    return v;
  }

  const std::map<std::string, std::string>& raw_;
};

struct Tolerances {
  AccelConfig accel;
  QuadConfig quad;
};

Tolerances tolerances_for(double tol) {
  if (!(tol > 0.0)) throw DomainError("--tol must be positive");
  Tolerances t;
  t.accel.abs_tol = std::max(1e-2 * tol, 10.0 * std::numeric_limits<double>::epsilon());
  t.quad.abs_tol = tol;
  return t;
}

std::string format_number(double v, int digits = 17) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, v);
  return buffer;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<double> uniform_points(double lo, double hi, long n) {
  if (n < 2) throw DomainError("a sampling grid needs at least 2 points");
  if (!(lo < hi)) throw DomainError("a sampling grid needs min < max");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1.0);
  return out;
}

std::vector<double> stepped_points(double lo, double hi, double step) {
  if (!(step > 0.0)) throw DomainError("step must be positive");
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out;
  for (long i = 0; i < n; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

// ---------------------------------------------------------------------------
// States shared by transform, wavefn and wigner.

struct State {
  hyperbolic::Wavefunction psi;  // x-representation
  double norm_x = 1.0;           // int |psi|^2 dx
  std::function<cdouble(double)> closed_momentum;  // <p_eta|psi>, when known
};

State make_state(const std::string& name, const Params& p, double phi, const Tolerances& tol) {
  State st;
  if (name == "exp") {
    st.psi = [](double x) { return cdouble(std::exp(-x)); };
    st.norm_x = 0.5;
    st.closed_momentum = [](double pe) {
      return specialfn::gamma_complex({0.5, -pe}) / kSqrtTwoPi;
    };
  } else if (name == "box") {
    st.psi = [](double x) { return cdouble(x < 1.0 ? 1.0 : (x == 1.0 ? 0.5 : 0.0)); };
    st.closed_momentum = [](double pe) { return 1.0 / (cdouble(0.5, -pe) * kSqrtTwoPi); };
  } else if (name == "psi-zeta") {
    const double n = zeta_wave_norm();
    st.psi = [n](double x) { return cdouble(n / (1.0 + std::exp(x))); };
    st.closed_momentum = [acc = tol.accel](double pe) {
      return zetawave::psi_zeta_momentum_closed(pe, acc);
    };
  } else if (name == "lerch") {
    const LerchWave w(p.number("z", 0.5), p.number("u", 2.0), tol.quad);
    st.psi = [w](double x) { return w(x); };
    st.closed_momentum = [w, acc = tol.accel](double pe) {
      const cdouble s(0.5, -pe);
      return w.norm() * specialfn::gamma_complex(s) *
             specialfn::lerch_phi(LerchParams(w.z(), s, w.u()), acc) / kSqrtTwoPi;
    };
  } else if (name == "sigma") {
    const SigmaWave w(phi, tol.accel, tol.quad);
    st.psi = [w](double x) { return cdouble(x > 0.0 ? w(x) : 0.5 * w.norm()); };
    st.closed_momentum = [w](double pe) { return zetawave::chi_momentum_closed(w, pe) / kSqrtTwoPi; };
  } else {
    throw DomainError("unknown state '" + name + "'");
  }
  return st;
}

std::vector<double> phi_values(const Params& p, double fallback) {
  auto list = p.numbers("phi-list");
  if (list.empty()) list.push_back(p.number("phi", fallback));
  return list;
}

// ---------------------------------------------------------------------------
// Commands

Table run_transform(const RunConfig& cfg, const Tolerances& tol) {
  const Params p(cfg.params,
                 {"input", "method", "z", "u", "phi", "phi-list", "p-max", "p-step", "eta-min",
                  "eta-max", "n"},
                 "transform");
  const std::string input = p.text("input", "exp");
  const std::string method = p.text("method", "fft");
  const double p_max = p.number("p-max", 20.0);
  const bool sweep = p.has("phi-list");
  const auto phis = phi_values(p, 3.0);

  Table table;
  if (sweep) table.columns.push_back("phi");
  for (const char* c : {"p_eta", "re", "im", "abs"}) table.columns.emplace_back(c);
  table.meta["command"] = "transform";
  table.meta["input"] = input;
  table.meta["method"] = method;

  const auto emit = [&](double phi, double pe, cdouble v) {
    std::vector<double> row;
    if (sweep) row.push_back(phi);
    row.insert(row.end(), {pe, v.real(), v.imag(), std::abs(v)});
    table.rows.push_back(std::move(row));
  };

  json per_phi = json::array();
  for (double phi : phis) {
    if (method == "closed") {
      std::function<cdouble(double)> value;
      if (input == "xi") {
        value = [phi](double pe) { return zetawave::g_mellin_closed({0.5, -pe}, phi); };
      } else {
        value = make_state(input, p, phi, tol).closed_momentum;
      }
      for (double pe : stepped_points(-p_max, p_max, p.number("p-step", 0.05)))
        emit(phi, pe, value(pe));
    } else if (method == "fft") {
      if (input == "xi") throw DomainError("input 'xi' is only available with --method closed");
      const State st = make_state(input, p, phi, tol);
      const double window = input == "sigma" ? 50.0 : 40.0;
      const GridSpec eta(p.number("eta-min", -window), p.number("eta-max", window),
                         static_cast<std::size_t>(p.integer("n", 65536)), Axis::EtaLine);
      const WaveGrid psi_bar = hyperbolic::to_eta_representation(st.psi, eta);
      const WaveGrid spectrum = hyperbolic::mellin_critical(psi_bar);
      for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const double pe = spectrum.spec().at(i);
        if (std::abs(pe) <= p_max) emit(phi, pe, spectrum[i]);
      }
      per_phi.push_back({{"phi", phi},
                         {"norm_x", st.norm_x},
                         {"parseval_discrepancy", hyperbolic::parseval_check(st.norm_x, spectrum)}});
    } else {
      throw DomainError("unknown transform method '" + method + "'");
    }
  }
  if (!per_phi.empty()) table.meta["checks"] = per_phi;
  return table;
}

Table run_wavefn(const RunConfig& cfg, const Tolerances& tol) {
  const Params p(cfg.params, {"state", "z", "u", "phi", "phi-list", "x-min", "x-max", "n"}, "wavefn");
  const std::string state = p.text("state", "psi-zeta");
  const bool sweep = p.has("phi-list");
  const auto xs = uniform_points(p.number("x-min", 0.0), p.number("x-max", 10.0), p.integer("n", 1001));
  if (xs.front() < 0.0) throw DomainError("wavefunctions live on x >= 0");

  Table table;
  table.columns = sweep ? std::vector<std::string>{"phi", "x", "value"}
                        : std::vector<std::string>{"x", "value"};
  table.meta["command"] = "wavefn";
  table.meta["state"] = state;
  for (double phi : phi_values(p, 3.0)) {
    const State st = make_state(state, p, phi, tol);
    for (double x : xs) {
      const double value = st.psi(x).real();
      if (sweep)
        table.rows.push_back({phi, x, value});
      else
        table.rows.push_back({x, value});
    }
  }
  return table;
}

Table run_potential(const RunConfig& cfg, const Tolerances&) {
  const Params p(cfg.params, {"kind", "z", "u", "x-min", "x-max", "n"}, "potential");
  const std::string kind = p.text("kind", "vzeta");
  const PotentialProfile profile = kind == "vzeta"
                                       ? PotentialProfile::zeta()
                                       : kind == "vbar" ? PotentialProfile(PotentialKind::VBarGeneral,
                                                                           p.number("z", -1.0),
                                                                           p.number("u", 1.0))
                                                        : throw DomainError("unknown potential kind '" + kind + "'");
  Table table;
  table.columns = {"x", "value"};
  table.meta["command"] = "potential";
  table.meta["kind"] = kind;
  table.meta["boundary_kappa"] = zetawave::boundary_kappa(profile.z, profile.u);
  table.meta["boundary_limit"] = zetawave::potential_boundary_limit(profile.z, profile.u);
  for (double x : uniform_points(p.number("x-min", 0.0), p.number("x-max", 30.0), p.integer("n", 1001)))
    table.rows.push_back({x, zetawave::potential_eval(profile, x)});
  return table;
}

Table run_zeros(const RunConfig& cfg, const Tolerances& tol) {
  const Params p(cfg.params, {"state", "range", "step", "phi"}, "zeros");
  const std::string state = p.text("state", "psi-zeta");
  auto range = p.numbers("range");
  if (range.empty()) range = {10.0, 30.0};
  if (range.size() != 2) throw DomainError("--range takes two values");

  std::function<double(double)> f;
  if (state == "psi-zeta") {
    f = [acc = tol.accel](double t) { return std::abs(zetawave::psi_zeta_momentum_closed(-t, acc)); };
  } else if (state == "chi") {
    const auto w = std::make_shared<SigmaWave>(p.number("phi", 3.0), tol.accel, tol.quad);
    f = [w](double t) { return std::abs(zetawave::chi_momentum_closed(*w, -t)); };
  } else if (state == "zeta") {
    f = [acc = tol.accel](double t) { return std::abs(specialfn::zeta_critical(t, acc)); };
  } else {
    throw DomainError("unknown zeros state '" + state + "'");
  }
  Table table;
  table.columns = {"t"};
  table.meta["command"] = "zeros";
  table.meta["state"] = state;
  for (double t : zetawave::zero_scan(f, range[0], range[1], p.number("step", 0.01)))
    table.rows.push_back({t});
  return table;
}

Table run_wigner(const RunConfig& cfg, const Tolerances& tol) {
  const Params p(cfg.params,
                 {"state", "z", "u", "phi", "eta-min", "eta-max", "n-eta", "p-max", "n-p", "stride"},
                 "wigner");
  const std::string state = p.text("state", "psi-zeta");
  const GridSpec eta(p.number("eta-min", -12.0), p.number("eta-max", 8.0),
                     static_cast<std::size_t>(p.integer("n-eta", 1024)), Axis::EtaLine);
  const double p_max = p.number("p-max", 45.0);
  const GridSpec momenta(-p_max, p_max, static_cast<std::size_t>(p.integer("n-p", 1024)), Axis::PEtaLine);
  const long stride = p.integer("stride", 1);
  if (stride < 1) throw DomainError("--stride must be >= 1");

  std::function<cdouble(double)> psi_bar;
  if (state == "gauss") {
    psi_bar = [](double e) { return cdouble(std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * e * e)); };
  } else {
    const State st = make_state(state, p, p.number("phi", 3.0), tol);
    psi_bar = [psi = st.psi](double e) { return std::exp(0.5 * e) * psi(std::exp(e)); };
  }
  const WignerGrid w = wigner::wigner_from_function(psi_bar, eta, momenta);
  Table table;
  table.columns = {"eta", "p_eta", "w_value"};
  table.meta["command"] = "wigner";
  table.meta["state"] = state;
  table.meta["total_mass"] = w.total_mass();
  table.meta["max_imag_residue"] = w.max_imag_residue();
  for (std::size_t i = 0; i < eta.n(); i += static_cast<std::size_t>(stride))
    for (std::size_t j = 0; j < momenta.n(); j += static_cast<std::size_t>(stride))
      table.rows.push_back({eta.at(i), momenta.at(j), w(i, j)});
  return table;
}

Table run_dpo(const RunConfig& cfg, const Tolerances&) {
  const Params p(cfg.params, {"xs", "ps", "tend", "dt", "stride"}, "dpo");
  DpoConfig dc;
  dc.t_end = p.number("tend", 1.0);
  dc.dt = p.number("dt", 1e-4);
  const long stride = p.integer("stride", 1);
  if (stride < 1) throw DomainError("--stride must be >= 1");
  const DpoState s0 = dposim::dpo_init(p.number("xs", 1.0), p.number("ps", 1.0));
  const DpoTrajectory traj = dposim::dpo_integrate(s0, dc);

  Table table;
  table.columns = {"tau", "x_pb", "v", "w", "u_dpo", "p_pb", "conserved"};
  double drift = 0.0;
  for (const auto& sample : traj)
    drift = std::max(drift, std::abs(sample.state.conserved() - s0.conserved()));
  const auto wr = dposim::w_range(traj);
  table.meta["command"] = "dpo";
  table.meta["max_conserved_drift"] = drift;
  table.meta["w_min"] = wr.min;
  table.meta["w_max"] = wr.max;
  table.meta["central_potential_check"] = dposim::central_potential_check(traj);
  for (std::size_t i = 0; i < traj.size(); i += static_cast<std::size_t>(stride)) {
    const DpoState& s = traj[i].state;
    table.rows.push_back({traj[i].tau, s.x_pb, s.v, s.w, s.u_dpo, s.p_pb, s.conserved()});
  }
  return table;
}

Table run_lerch(const RunConfig& cfg, const Tolerances& tol) {
  const Params p(cfg.params, {"z", "z-im", "u", "s-re", "t-min", "t-max", "n", "check"}, "lerch");
  const cdouble z(p.number("z", -1.0), p.number("z-im", 0.0));
  const double u = p.number("u", 1.0);
  const double sigma = p.number("s-re", 0.5);
  const bool check = p.flag("check");

  Table table;
  table.columns = {"t", "re", "im", "abs"};
  table.meta["command"] = "lerch";
  double worst = 0.0;
  for (double t : uniform_points(p.number("t-min", 0.0), p.number("t-max", 10.0), p.integer("n", 101))) {
    const cdouble s(sigma, t);
    const cdouble phi = specialfn::lerch_phi(LerchParams(z, s, u), tol.accel);
    table.rows.push_back({t, phi.real(), phi.imag(), std::abs(phi)});
    if (check) {
      const cdouble integral = hyperbolic::mellin_integral_direct(
          [&](double x) { return specialfn::lerch_integrand(z, x, u); }, s, tol.quad);
      worst = std::max(worst, std::abs(specialfn::gamma_complex(s) * phi - integral));
    }
  }
  if (check) table.meta["max_route_diff"] = worst;
  return table;
}

// ---------------------------------------------------------------------------
// Figure scripts

void require_columns(const Table& t, const std::vector<std::string>& expected, FigureId id) {
  if (t.columns != expected) {
    std::string want, got;
    for (const auto& c : expected) want += (want.empty() ? "" : ",") + c;
    for (const auto& c : t.columns) got += (got.empty() ? "" : ",") + c;
    throw SchemaError(figure_name(id) + " expects columns '" + want + "' but the data has '" + got + "'");
  }
}

std::string g(double v) { return format_number(v, 10); }

void datablock(std::ostringstream& out, const std::string& name,
               const std::vector<std::vector<double>>& rows, int block_column = -1) {
  out << '$' << name << " << EOD\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (block_column >= 0 && i > 0 &&
        rows[i][static_cast<std::size_t>(block_column)] != rows[i - 1][static_cast<std::size_t>(block_column)])
      out << '\n';
    for (std::size_t c = 0; c < rows[i].size(); ++c) out << (c ? " " : "") << g(rows[i][c]);
    out << '\n';
  }
  out << "EOD\n";
}

void preamble(std::ostringstream& out, FigureId id, const std::string& size) {
  std::string file = figure_name(id);
  std::transform(file.begin(), file.end(), file.begin(), [](unsigned char c) { return std::tolower(c); });
  out << "# " << figure_name(id) << " generated by hyperzeta\n"
      << "set terminal pngcairo size " << size << "\n"
      << "set output '" << file << ".png'\n";
}

std::vector<std::vector<double>> zeta_modulus_rows(const std::vector<double>& p_values, bool negate) {
  std::vector<std::vector<double>> rows;
  for (double pe : p_values)
    rows.push_back({negate ? -pe : pe, std::abs(specialfn::zeta_critical(-pe))});
  return rows;
}

std::string script_fig1(FigureId id, const Table& t) {
  require_columns(t, {"p_eta", "re", "im", "abs"}, id);
  std::vector<std::vector<double>> psi;
  std::vector<double> ps;
  for (const auto& r : t.rows) {
    if (r[0] < -40.0 || r[0] > 0.0) continue;
    if (id == FigureId::Fig1I) {
      if (r[0] == 0.0 || r[3] <= 0.0) continue;
      psi.push_back({-r[0], std::log(r[3]) / (-r[0])});
    } else {
      psi.push_back({-r[0], r[3]});
    }
    ps.push_back(r[0]);
  }
  std::reverse(psi.begin(), psi.end());
  std::reverse(ps.begin(), ps.end());
  std::ostringstream out;
  preamble(out, id, id == FigureId::Fig1I ? "1000,500" : "1000,900");
  datablock(out, "psi", psi);
  datablock(out, "zeta", zeta_modulus_rows(ps, true));
  out << "set xlabel '-p_eta'\nset grid\n";
  if (id == FigureId::Fig1I) {
    out << "plot $zeta using 1:2 with lines lc rgb 'blue' title '|zeta(1/2 - i p_eta)|', \\\n"
        << "     $psi using 1:2 with lines lc rgb 'red' title 'log|psi(p_eta)| / (-p_eta)'\n";
  } else {
    out << "set multiplot layout 2,1\n"
        << "set title '(IIA)'\n"
        << "plot $zeta using 1:2 with lines lc rgb 'blue' title '|zeta(1/2 - i p_eta)|', \\\n"
        << "     $psi using 1:2 with lines lc rgb 'red' title '|psi(p_eta)|'\n"
        << "set title '(IIB)'\nset logscale y\n"
        << "plot $zeta using 1:2 with lines lc rgb 'blue' title '|zeta(1/2 - i p_eta)|', \\\n"
        << "     $psi using 1:2 with lines lc rgb 'red' title '|psi(p_eta)|'\n"
        << "unset multiplot\n";
  }
  return out.str();
}

std::string script_fig2a(const Table& t) {
  require_columns(t, {"phi", "x", "value"}, FigureId::Fig2A);
  std::ostringstream out;
  preamble(out, FigureId::Fig2A, "900,700");
  datablock(out, "sigma", t.rows, 0);
  out << "set xlabel 'x'\nset ylabel 'phi'\nset zlabel 'Sigma'\n"
      << "splot $sigma using 2:1:3 with lines notitle\n";
  return out.str();
}

std::string script_fig2b(const Table& t) {
  require_columns(t, {"phi", "p_eta", "re", "im", "abs"}, FigureId::Fig2B);
  std::vector<std::vector<double>> rows;
  for (const auto& r : t.rows)
    if (-r[1] >= 0.0 && -r[1] <= 30.0) rows.push_back({r[0], -r[1], r[4]});
  std::ostringstream out;
  preamble(out, FigureId::Fig2B, "900,700");
  datablock(out, "xi", rows, 0);
  out << "set xlabel 't'\nset ylabel 'phi'\nset title '|Xi(1/2 + i t, phi)|'\n"
      << "set view map\nset pm3d map\nset logscale cb\n"
      << "splot $xi using 2:1:3 with pm3d notitle\n";
  return out.str();
}

std::vector<std::vector<double>> p_marginal_rows(const Table& t) {
  std::map<double, std::vector<std::pair<double, double>>> by_p;
  for (const auto& r : t.rows) by_p[r[1]].push_back({r[0], r[2]});
  std::vector<std::vector<double>> rows;
  for (auto& [pe, column] : by_p) {
    std::sort(column.begin(), column.end());
    double sum = 0.0;
    for (std::size_t i = 1; i < column.size(); ++i)
      sum += 0.5 * (column[i].second + column[i - 1].second) * (column[i].first - column[i - 1].first);
    rows.push_back({pe, sum});
  }
  return rows;
}

std::string script_wigner(FigureId id, const Table& t) {
  require_columns(t, {"eta", "p_eta", "w_value"}, id);
  std::ostringstream out;
  const bool details = id == FigureId::Fig8 || id == FigureId::Fig10;
  preamble(out, id, details ? "1800,600" : "800,800");
  datablock(out, "w", t.rows, 0);
  if (!details) {
    out << "set xlabel 'eta'\nset ylabel 'p_eta'\nset view map\nset pm3d map\n"
        << "splot $w using 1:2:3 with pm3d notitle\n";
    return out.str();
  }
  const auto marginal = p_marginal_rows(t);
  std::vector<double> ps;
  for (const auto& r : marginal) ps.push_back(r[0]);
  datablock(out, "marginal", marginal);
  datablock(out, "zeta", zeta_modulus_rows(ps, false));
  out << "set multiplot layout 1,4\nset view map\nset pm3d map\n"
      << "set xlabel 'eta'\nset ylabel 'p_eta'\n"
      << "set title '(A)'\nsplot $w using 1:2:3 with pm3d notitle\n"
      << "set title '(B)'\nsplot $w using 1:2:(abs($3) > 0 ? log(abs($3)) : NaN) with pm3d notitle\n"
      << "set title '(C)'\nset xlabel 'ln int W(eta,p_eta) d eta'\n"
      << "plot $marginal using ($2 > 0 ? log($2) : NaN):1 with lines notitle\n"
      << "set title '(D)'\nset xlabel '|zeta(1/2 - i p_eta)|'\n"
      << "plot $zeta using 2:1 with lines notitle\n"
      << "unset multiplot\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Table input

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

int exit_code_for(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::Domain: return 1;
    case ErrorCategory::Convergence: return 2;
    case ErrorCategory::Io: return 3;
  }
  return 1;
}

}  // namespace

// ---------------------------------------------------------------------------

std::optional<Command> parse_command(const std::string& name) {
  static const std::map<std::string, Command> kNames = {
      {"transform", Command::Transform}, {"wavefn", Command::Wavefn}, {"potential", Command::Potential},
      {"zeros", Command::Zeros},         {"wigner", Command::Wigner}, {"dpo", Command::Dpo},
      {"lerch", Command::Lerch}};
  const auto it = kNames.find(name);
  if (it == kNames.end()) return std::nullopt;
  return it->second;
}

std::optional<FigureId> parse_figure(const std::string& name) {
  for (FigureId id : {FigureId::Fig1I, FigureId::Fig1II, FigureId::Fig2A, FigureId::Fig2B,
                      FigureId::Fig7, FigureId::Fig8, FigureId::Fig9, FigureId::Fig10})
    if (figure_name(id) == name) return id;
  return std::nullopt;
}

std::string figure_name(FigureId id) {
  switch (id) {
    case FigureId::Fig1I: return "FIG1_I";
    case FigureId::Fig1II: return "FIG1_II";
    case FigureId::Fig2A: return "FIG2A";
    case FigureId::Fig2B: return "FIG2B";
    case FigureId::Fig7: return "FIG7";
    case FigureId::Fig8: return "FIG8";
    case FigureId::Fig9: return "FIG9";
    case FigureId::Fig10: return "FIG10";
  }
  return "?";
}

double default_tolerance() {
  if (const char* env = std::getenv("HYPERZETA_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0.0 && std::isfinite(v)) return v;
  }
  return 1e-10;
}

Table execute(const RunConfig& cfg) {
  const Tolerances tol = tolerances_for(cfg.tol);
  Table table;
  switch (cfg.command) {
    case Command::Transform: table = run_transform(cfg, tol); break;
    case Command::Wavefn: table = run_wavefn(cfg, tol); break;
    case Command::Potential: table = run_potential(cfg, tol); break;
    case Command::Zeros: table = run_zeros(cfg, tol); break;
    case Command::Wigner: table = run_wigner(cfg, tol); break;
    case Command::Dpo: table = run_dpo(cfg, tol); break;
    case Command::Lerch: table = run_lerch(cfg, tol); break;
  }
  table.meta["tol"] = cfg.tol;
  table.meta["seed"] = cfg.seed;
  table.meta["columns"] = table.columns;
  return table;
}

void write_table(const Table& table, std::ostream& out, Format format) {
  if (format == Format::Csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      out << (c ? "," : "") << csv_field(table.columns[c]);
    out << "\r\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
      out << "\r\n";
    }
  } else {
    json doc;
    json meta = table.meta;
    meta["columns"] = table.columns;
    doc["meta"] = meta;
    json rows = json::array();
    for (const auto& row : table.rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < row.size(); ++c) obj[table.columns[c]] = row[c];
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(1) << '\n';
  }
  if (!out) throw IoError("failed writing output");
}

void write_table(const Table& table, const std::filesystem::path& path, Format format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  write_table(table, out, format);
}

Table read_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw SchemaError("'" + path.string() + "' is empty");

  Table table;
  if (text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
      table.meta = doc.at("meta");
      table.columns = doc.at("meta").at("columns").get<std::vector<std::string>>();
      for (const auto& obj : doc.at("rows")) {
        std::vector<double> row;
        for (const auto& c : table.columns) row.push_back(obj.at(c).get<double>());
        table.rows.push_back(std::move(row));
      }
    } catch (const json::exception& e) {
      throw SchemaError("malformed JSON table '" + path.string() + "': " + e.what());
    }
    return table;
  }

  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  table.columns = split_csv_line(line);
  while (std::getline(lines, line)) {
    if (line.empty() || line == "\r") continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != table.columns.size())
      throw SchemaError("CSV row has " + std::to_string(fields.size()) + " fields, expected " +
                        std::to_string(table.columns.size()));
    std::vector<double> row;
    for (const auto& f : fields) {
      char* end = nullptr;
      const double v = std::strtod(f.c_str(), &end);
      if (end == f.c_str() || *end != '\0') throw SchemaError("non-numeric CSV field '" + f + "'");
      row.push_back(v);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

std::string figure_script(FigureId id, const Table& data) {
  switch (id) {
    case FigureId::Fig1I:
    case FigureId::Fig1II: return script_fig1(id, data);
    case FigureId::Fig2A: return script_fig2a(data);
    case FigureId::Fig2B: return script_fig2b(data);
    case FigureId::Fig7:
    case FigureId::Fig8:
    case FigureId::Fig9:
    case FigureId::Fig10: return script_wigner(id, data);
  }
  throw SchemaError("unknown figure");
}

void emit_figure_recipe(FigureId id, const std::filesystem::path& data_path,
                        const std::filesystem::path& script_path) {
  const std::string script = figure_script(id, read_table(data_path));
  std::ofstream out(script_path, std::ios::binary);
  if (!out) throw IoError("cannot open '" + script_path.string() + "' for writing");
  out << script;
  if (!out) throw IoError("failed writing '" + script_path.string() + "'");
}

int run(const RunConfig& cfg, std::ostream& err) {
  try {
    const Table table = execute(cfg);
    const bool to_stdout = cfg.output_path.empty() || cfg.output_path == "-";
    if (to_stdout)
      write_table(table, std::cout, cfg.format);
    else
      write_table(table, cfg.output_path, cfg.format);
    if (cfg.emit_plot_script) {
      if (!cfg.figure) throw DomainError("a plot script needs a figure id");
      std::filesystem::path script =
          to_stdout ? std::filesystem::path(figure_name(*cfg.figure) + ".gp")
                    : std::filesystem::path(cfg.output_path.string() + ".gp");
      if (to_stdout) {
        std::ofstream out(script, std::ios::binary);
        if (!out) throw IoError("cannot open '" + script.string() + "'");
        out << figure_script(*cfg.figure, table);
      } else {
        emit_figure_recipe(*cfg.figure, cfg.output_path, script);
      }
    }
    return 0;
  } catch (const Error& e) {
    err << "hyperzeta: " << e.what() << '\n';
    return exit_code_for(e.category());
  } catch (const std::ios_base::failure& e) {
    err << "hyperzeta: I/O failure: " << e.what() << '\n';
    return 3;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "hyperzeta: " << e.what() << '\n';
    return 3;
  }
}

int main_entry(int argc, const char* const* argv) {
  CLI::App app{"hyperzeta: critical-line Mellin transforms of half-line wavefunctions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "-";
  std::string format = "csv";
  std::string plot;
  double tol = default_tolerance();
  unsigned seed = 42;
  app.add_option("-o,--output", output, "output file ('-' for stdout)");
  app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--plot", plot, "also write a gnuplot script for this figure id");
  app.add_option("--tol", tol, "tolerance threaded into series and quadrature (env HYPERZETA_TOL)");
  app.add_option("--seed", seed, "seed recorded for reproducible sweeps");

  struct Spec {
    const char* name;
    const char* help;
    std::vector<std::string> options;
    std::vector<std::string> flags;
  };
  const std::vector<Spec> specs = {
      {"transform", "critical-line Mellin transform <p_eta|psi>",
       {"input", "method", "z", "u", "phi", "phi-list", "p-max", "p-step", "eta-min", "eta-max", "n"}, {}},
      {"wavefn", "sample a wavefunction on the half-line",
       {"state", "z", "u", "phi", "phi-list", "x-min", "x-max", "n"}, {}},
      {"potential", "sample the engineered potential", {"kind", "z", "u", "x-min", "x-max", "n"}, {}},
      {"zeros", "locate zeros of a critical-line profile", {"state", "step", "phi"}, {}},
      {"wigner", "hyperbolic phase-space Wigner function",
       {"state", "z", "u", "phi", "eta-min", "eta-max", "n-eta", "p-max", "n-p", "stride"}, {}},
      {"dpo", "semiclassical parametric-oscillator trajectory", {"xs", "ps", "tend", "dt", "stride"}, {}},
      {"lerch", "Lerch transcendent on a vertical line", {"z", "z-im", "u", "s-re", "t-min", "t-max", "n"},
       {"check"}},
  };

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> flags;
  std::vector<double> range;
  std::map<std::string, CLI::App*> subs;
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    subs[spec.name] = sub;
    for (const auto& opt : spec.options) {
      sub->add_option("--" + opt, values[spec.name][opt])->allow_extra_args(false);
    }
    for (const auto& fl : spec.flags) sub->add_flag("--" + fl, flags[spec.name][fl]);
    if (std::string(spec.name) == "zeros") sub->add_option("--range", range)->expected(2);
  }

  std::string fig_id, fig_data;
  CLI::App* figure = app.add_subcommand("figure", "write a gnuplot script from a data file");
  figure->add_option("figure", fig_id, "figure id, e.g. FIG7")->required();
  figure->add_option("data", fig_data, "CSV or JSON data file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (figure->parsed()) {
    const auto id = parse_figure(fig_id);
    if (!id) {
      std::cerr << "hyperzeta: unknown figure id '" << fig_id << "'\n";
      return 1;
    }
    try {
      const std::filesystem::path script = output == "-" ? std::filesystem::path(fig_id + ".gp")
                                                         : std::filesystem::path(output);
      emit_figure_recipe(*id, fig_data, script);
      return 0;
    } catch (const Error& e) {
      std::cerr << "hyperzeta: " << e.what() << '\n';
      return exit_code_for(e.category());
    }
  }

  RunConfig cfg;
  cfg.output_path = output;
  cfg.format = format == "json" ? Format::Json : Format::Csv;
  cfg.tol = tol;
  cfg.seed = seed;
  if (!plot.empty()) {
    cfg.figure = parse_figure(plot);
    if (!cfg.figure) {
      std::cerr << "hyperzeta: unknown figure id '" << plot << "'\n";
      return 1;
    }
    cfg.emit_plot_script = true;
  }
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    cfg.command = *parse_command(name);
    for (auto* opt : sub->get_options()) {
      if (opt->count() == 0) continue;
      std::string key = opt->get_name();
      if (key.rfind("--", 0) == 0) key = key.substr(2);
      if (key == "help") continue;
      if (key == "range") {
        cfg.params["range"] = format_number(range[0]) + " " + format_number(range[1]);
      } else if (flags[name].count(key)) {
        cfg.params[key] = "true";
      } else {
        cfg.params[key] = values[name][key];
      }
    }
  }
  return run(cfg, std::cerr);
}

}  // namespace hyperzeta::cli
