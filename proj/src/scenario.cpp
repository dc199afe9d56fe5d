#include "rydcav/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <set>
#include <thread>

#include "rydcav/error.hpp"
#include "rydcav/kernels.hpp"
#include "rydcav/units.hpp"

namespace rydcav {
namespace {

// Reads one JSON object, records defaults into `out` and rejects keys it
// was never asked about.
class Section {
 public:
  Section(const json& src, std::string path) : path_(std::move(path)), out_(json::object()) {
    if (src.is_null()) {
      src_ = json::object();
    } else if (!src.is_object()) {
      throw ConfigError("expected an object", path_);
    } else {
      src_ = src;
    }
  }

  double number(const std::string& key, double def) {
    seen_.insert(key);
    double v = def;
    if (src_.contains(key)) {
      const json& j = src_[key];
      if (!j.is_number()) throw ConfigError("expected a number", at(key));
      v = j.get<double>();
      if (!std::isfinite(v)) throw ConfigError("must be finite", at(key));
    }
    out_[key] = v;
    return v;
  }

  std::optional<double> optional_number(const std::string& key) {
    seen_.insert(key);
    if (!src_.contains(key)) return std::nullopt;
    const json& j = src_[key];
    if (!j.is_number()) throw ConfigError("expected a number", at(key));
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError("must be finite", at(key));
    out_[key] = v;
    return v;
  }

  int integer(const std::string& key, int def) {
    seen_.insert(key);
    int v = def;
    if (src_.contains(key)) {
      const json& j = src_[key];
      if (!j.is_number_integer()) throw ConfigError("expected an integer", at(key));
      v = j.get<int>();
    }
    out_[key] = v;
    return v;
  }

  std::string choice(const std::string& key, const std::string& def, std::initializer_list<const char*> allowed) {
    seen_.insert(key);
    std::string v = def;
    if (src_.contains(key)) {
      if (!src_[key].is_string()) throw ConfigError("expected a string", at(key));
      v = src_[key].get<std::string>();
    }
    bool ok = false;
    std::string list;
    for (const char* a : allowed) {
      ok = ok || v == a;
      list += list.empty() ? a : std::string(", ") + a;
    }
    if (!ok) throw ConfigError("'" + v + "' is not one of {" + list + "}", at(key));
    out_[key] = v;
    return v;
  }

  const json& raw(const std::string& key) {
    seen_.insert(key);
    static const json null;
    return src_.contains(key) ? src_[key] : null;
  }

  void put(const std::string& key, json v) { out_[key] = std::move(v); }

  json finish() const {
    for (const auto& [k, v] : src_.items())
      if (!seen_.count(k)) throw ConfigError("unknown key", at(k));
    return out_;
  }

  std::string at(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

 private:
  std::string path_;
  json src_;
  json out_;
  std::set<std::string> seen_;
};

PulseTrain parse_train(const json& src, const std::string& path, const char* default_stage, int n_atoms,
                       const ChirpSchedule& chirp, double delta_s, json& out) {
  PulseTrain train;
  out = json::array();
  if (src.is_null()) return train;
  std::vector<json> items;
  if (src.is_array()) {
    for (const auto& j : src) items.push_back(j);
  } else {
    items.push_back(src);
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    Section sec(items[i], src.is_array() ? path + "[" + std::to_string(i) + "]" : path);
    const auto amp = sec.optional_number("amplitude_2pi_mhz");
    const auto area = sec.optional_number("area_rad");
    SechPulse p;
    p.t0 = sec.number("t0_us", 0.0);
    p.tau = sec.number("tau_us", 0.05);
    const std::string stage = sec.choice("stage", default_stage, {"direct", "first", "second"});
    if (!(p.tau > 0.0)) throw ConfigError("must be positive", sec.at("tau_us"));
    if (amp.has_value() == area.has_value())
      throw ConfigError("give exactly one of amplitude_2pi_mhz and area_rad", path);
    if (amp) {
      if (*amp < 0.0) throw ConfigError("must be non-negative", sec.at("amplitude_2pi_mhz"));
      p.amplitude = units::from_2pi_mhz(*amp);
    } else {
      if (!(*area > 0.0)) throw ConfigError("must be positive", sec.at("area_rad"));
      const PiStage st = stage == "first" ? PiStage::First : stage == "second" ? PiStage::Second : PiStage::Direct;
      try {
        p.amplitude = solve_pi_amplitude(p.tau, *area, n_atoms, st, chirp(p.t0) / delta_s);
      } catch (const std::exception& e) {
        throw ConfigError(e.what(), sec.at("area_rad"));
      }
    }
    train.pulses.push_back(p);
    out.push_back(sec.finish());
  }
  return train;
}

}  // namespace

Scenario scenario_from_json(const json& cfg) {
  if (!cfg.is_object()) throw ConfigError("config must be a JSON object", "");
  Scenario s;
  Section top(cfg, "");
  if (cfg.contains("name")) {
    if (!cfg["name"].is_string()) throw ConfigError("expected a string", "name");
    s.name = cfg["name"].get<std::string>();
  }
  top.raw("name");
  top.put("name", s.name);

  Section sys(top.raw("system"), "system");
  SystemParams& p = s.system;
  p.n_atoms = sys.integer("n_atoms", 1);
  if (p.n_atoms < 1) throw ConfigError("must be at least 1", "system.n_atoms");
  p.g = units::from_2pi_mhz(sys.number("g_2pi_mhz", 0.0));
  p.kappa = units::from_2pi_mhz(sys.number("kappa_2pi_mhz", 0.0));
  p.gamma_r = units::from_2pi_khz(sys.number("gamma_r_2pi_khz", 0.0));
  p.gamma_perp = units::from_2pi_mhz(sys.number("gamma_perp_2pi_mhz", 0.0));
  p.gamma_0 = units::from_2pi_mhz(sys.number("gamma_0_2pi_mhz", 6.0));
  p.delta_c = units::from_2pi_mhz(sys.number("delta_c_2pi_mhz", 0.0));
  const double delta_s = units::from_2pi_mhz(sys.number("delta_s_2pi_mhz", 110.0));
  p.delta_r = units::from_2pi_mhz(sys.number("delta_r_2pi_mhz", 0.0));
  p.gamma_s = units::from_2pi_mhz(sys.number("gamma_s_2pi_mhz", 0.0));
  p.gamma_p = units::from_2pi_mhz(sys.number("gamma_p_2pi_mhz", 0.0));
  p.coupling = sys.choice("coupling_mode", "coherent", {"coherent", "purcell"}) == "purcell" ? CouplingMode::Purcell
                                                                                           : CouplingMode::Coherent;
  p.form = sys.choice("lindblad_form", "sum", {"sum", "split"}) == "split" ? LindbladForm::Split : LindbladForm::Sum;
  p.ladder = sys.choice("ladder_convention", "literal", {"literal", "bosonic"}) == "bosonic" ? Ladder::Bosonic
                                                                                          : Ladder::Literal;
  if (delta_s == 0.0) throw ConfigError("must be nonzero", "system.delta_s_2pi_mhz");
  top.put("system", sys.finish());

  Section deph(top.raw("dephasing"), "dephasing");
  p.deph_r = units::from_2pi_khz(deph.number("gamma_r_khz", 0.0));
  p.deph_rr = units::from_2pi_khz(deph.number("gamma_rr_khz", 0.0));
  top.put("dephasing", deph.finish());
  p.validate();

  Section ch(top.raw("chirp"), "chirp");
  ChirpSchedule& c = s.schedule.chirp;
  const std::string shape = ch.choice("shape", "constant", {"constant", "tanh-ramp", "tanh-window"});
  c.shape = shape == "constant" ? ChirpShape::Constant : shape == "tanh-ramp" ? ChirpShape::TanhRamp : ChirpShape::TanhWindow;
  c.start = units::from_2pi_mhz(ch.number("start_2pi_mhz", -units::to_2pi_mhz(delta_s)));
  c.end = units::from_2pi_mhz(ch.number("end_2pi_mhz", units::to_2pi_mhz(c.start)));
  c.t_c = ch.number("t_c_us", 0.0);
  c.w = ch.number("w_us", 0.01);
  c.t_off = ch.number("t_off_us", c.t_c);
  c.settle = units::from_2pi_mhz(ch.number("settle_2pi_mhz", units::to_2pi_mhz(c.start)));
  c.w_off = ch.number("w_off_us", c.w);
  c.validate();
  top.put("chirp", ch.finish());

  Section pu(top.raw("pulses"), "pulses");
  PulseSchedule& sc = s.schedule;
  sc.delta_s = delta_s;
  sc.mode = pu.choice("mode", "effective", {"effective", "raw"}) == "raw" ? DriveMode::Raw : DriveMode::Effective;
  sc.style = pu.choice("style", "simultaneous", {"simultaneous", "stirap"}) == "stirap" ? PrepStyle::Stirap
                                                                                       : PrepStyle::SimultaneousPi;
  json tmp;
  sc.p1 = parse_train(pu.raw("p1"), "pulses.p1", "direct", p.n_atoms, c, delta_s, tmp);
  pu.put("p1", tmp);
  sc.p2 = parse_train(pu.raw("p2"), "pulses.p2", "direct", p.n_atoms, c, delta_s, tmp);
  pu.put("p2", tmp);
  sc.s = parse_train(pu.raw("s"), "pulses.s", "first", p.n_atoms, c, delta_s, tmp);
  pu.put("s", tmp);
  sc.omega = parse_train(pu.raw("omega"), "pulses.omega", "direct", p.n_atoms, c, delta_s, tmp);
  pu.put("omega", tmp);
  if (sc.mode == DriveMode::Raw && !sc.s.empty())
    throw ConfigError("raw mode takes p1/p2, not s", "pulses.s");
  if (sc.mode == DriveMode::Effective && (!sc.p1.empty() || !sc.p2.empty()))
    throw ConfigError("effective mode takes s, not p1/p2", "pulses.mode");
  sc.validate();
  top.put("pulses", pu.finish());

  Section in(top.raw("integrator"), "integrator");
  s.integrator.dt = in.number("dt_us", 1e-4);
  s.integrator.stride = in.integer("stride", 10);
  s.integrator.t_start = in.number("t_start_us", 0.0);
  s.integrator.t_end = in.number("t_end_us", 1.0);
  s.integrator.validate();
  top.put("integrator", in.finish());

  Section an(top.raw("analysis"), "analysis");
  s.fit_t_min = an.number("fit_t_min_us", 0.0);
  const std::string init = an.choice("initial_state", "G0",
                                     {"G0", "G1", "G2", "R0", "R1", "RR0", "E0", "E1", "EE0", "ER0", "L0"});
  for (int k = 0; k < kDim; ++k)
    if (label(k) == init) s.initial_state = k;
  top.put("analysis", an.finish());

  s.effective = top.finish();
  return s;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

RunResult run_scenario(const Scenario& s) {
  RunResult r;
  r.trajectory = run(s.system, s.schedule, s.integrator, pure_state(s.initial_state));
  r.series = observe(r.trajectory, s.system);
  r.health = checkpoint_health(r.trajectory);
  r.efficiency = r.series.eff_cum.empty() ? 0.0 : r.series.eff_cum.back();
  std::vector<double> g1;
  for (const auto& pop : r.series.populations) {
    g1.push_back(pop[G1]);
    r.max_double = std::max(r.max_double, pop[RR0] + pop[EE0] + pop[ER0]);
  }
  r.fitted_frequency = fit_peak_frequency(r.series.times, g1, s.fit_t_min);
  const bool lit = !s.schedule.s.empty() || !s.schedule.p1.empty();
  r.blockade_margin = lit && s.system.n_atoms >= 2
                          ? blockade_margin(s.schedule, s.system.delta_r, s.system.gamma_s, s.integrator.t_start,
                                            s.integrator.t_end)
                          : std::numeric_limits<double>::infinity();
  if (r.blockade_margin < 10.0)
    r.warnings.push_back("blockade margin " + format_double(r.blockade_margin) + " is below 10");
  if (!r.health.ok()) r.warnings.push_back("health thresholds breached");
  return r;
}

void write_csv(std::ostream& os, const ObservableSeries& o) {
  os << "t_us";
  for (int k = 0; k < kDim; ++k) os << ",P_" << label(k);
  os << ",rate_per_us,eff_cum,re_mu12,im_mu12,ln_g2,S_total,S_atoms,S_photons,araki_lieb_ok\n";
  for (std::size_t i = 0; i < o.times.size(); ++i) {
    os << format_double(o.times[i]);
    for (int k = 0; k < kDim; ++k) os << ',' << format_double(o.populations[i][k]);
    const auto& g2 = o.ln_g2[i];
    os << ',' << format_double(o.rate[i]) << ',' << format_double(o.eff_cum[i]) << ','
       << format_double(o.mu12[i].normalized.real()) << ',' << format_double(o.mu12[i].normalized.imag()) << ','
       << (g2.status == G2Status::Defined ? format_double(g2.value) : g2.status == G2Status::NegInfinity ? "-inf" : "nan")
       << ',' << format_double(o.entropy[i].total) << ',' << format_double(o.entropy[i].atoms) << ','
       << format_double(o.entropy[i].photons) << ',' << (o.entropy[i].araki_lieb_ok ? 1 : 0) << '\n';
  }
}

json summary_json(const Scenario& s, const RunResult& r) {
  json j;
  j["name"] = s.name;
  j["n_atoms"] = s.system.n_atoms;
  j["final_efficiency"] = r.efficiency;
  j["fitted_frequency_2pi_mhz"] = units::to_2pi_mhz(r.fitted_frequency);
  j["max_double_excitation"] = r.max_double;
  j["blockade_margin"] = std::isinf(r.blockade_margin) ? json("inf") : json(r.blockade_margin);
  j["health"] = {{"max_trace_error", r.health.max_trace_error},
                 {"max_hermiticity_error", r.health.max_hermiticity_error},
                 {"min_eigenvalue", r.health.min_eigenvalue},
                 {"ok", r.health.ok()}};
  j["warnings"] = r.warnings;
  j["kernels"] = std::string(kernels::active().name);
  j["samples"] = r.series.times.size();
  return j;
}

double cooperativity(const SystemParams& p) {
  if (p.kappa <= 0.0 || p.gamma_perp <= 0.0) return std::numeric_limits<double>::infinity();
  return p.g * p.g / (2.0 * p.kappa * p.gamma_perp);
}

design::CavityGeometry geometry_from_json(const json& cfg) {
  Section sec(cfg, "geometry");
  design::CavityGeometry g;
  g.length = sec.number("length_um", 50.0) * 1e-6;
  g.mirror_radius = sec.number("mirror_radius_mm", 25.0) * 1e-3;
  g.wavelength = sec.number("wavelength_nm", 780.0) * 1e-9;
  g.r1 = sec.number("r1", 0.999985);
  g.r2 = sec.number("r2", 0.99985);
  g.dipole = sec.number("dipole_cm", design::kRbD2CyclingDipole);
  g.gamma_0 = units::kTwoPi * 1e6 * sec.number("gamma_0_2pi_mhz", 6.0);
  sec.raw("sweep_length_um");
  sec.finish();
  g.validate();
  return g;
}

json design_json(const design::CavityGeometry& g) {
  const auto d = design::cavity_derived(g);
  const auto mhz = [](double rad_s) { return rad_s / units::kTwoPi / 1e6; };
  return {{"length_um", g.length * 1e6},
          {"waist_um", d.waist * 1e6},
          {"mode_volume_m3", d.mode_volume},
          {"g_2pi_mhz", mhz(d.g)},
          {"kappa_2pi_mhz", mhz(d.kappa)},
          {"finesse", d.finesse},
          {"purcell_factor", d.purcell},
          {"gamma_p_2pi_mhz", mhz(d.gamma_p)},
          {"cooperativity", d.cooperativity}};
}

SweepSpec sweep_from_json(const json& cfg) {
  Section top(cfg, "");
  SweepSpec spec;
  spec.base = scenario_from_json(top.raw("base"));
  Section sw(top.raw("sweep"), "sweep");
  const std::string axis = sw.choice("axis", "cooperativity", {"cooperativity", "length", "n_atoms"});
  spec.axis = axis == "cooperativity" ? SweepAxis::Cooperativity : axis == "length" ? SweepAxis::Length : SweepAxis::Atoms;
  const json& vals = sw.raw("values");
  if (!vals.is_array() || vals.empty()) throw ConfigError("expected a non-empty array", "sweep.values");
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (!vals[i].is_number()) throw ConfigError("expected a number", "sweep.values[" + std::to_string(i) + "]");
    const double v = vals[i].get<double>();
    if (!(v > 0.0)) throw ConfigError("must be positive", "sweep.values[" + std::to_string(i) + "]");
    if (spec.axis == SweepAxis::Atoms && v != std::floor(v))
      throw ConfigError("atom counts must be integers", "sweep.values[" + std::to_string(i) + "]");
    spec.values.push_back(v);
  }
  spec.workers = sw.integer("workers", 1);
  if (spec.workers < 1) throw ConfigError("must be at least 1", "sweep.workers");
  if (spec.axis == SweepAxis::Length) spec.geometry = geometry_from_json(sw.raw("geometry"));
  else sw.raw("geometry");
  if (spec.axis == SweepAxis::Cooperativity && !(spec.base.system.gamma_perp > 0.0))
    throw ConfigError("cooperativity sweeps need gamma_perp > 0", "base.system.gamma_perp_2pi_mhz");
  sw.finish();
  top.finish();
  return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  std::vector<SweepRow> rows(spec.values.size());
  std::vector<std::exception_ptr> errors(spec.values.size());
  auto point = [&](std::size_t i) {
    try {
      const double v = spec.values[i];
      Scenario s = spec.base;
      if (spec.axis == SweepAxis::Atoms) {
        json cfg = spec.base.effective;
        cfg["system"]["n_atoms"] = static_cast<int>(v);
        s = scenario_from_json(cfg);
      }
      SystemParams& p = s.system;
      double length_um = std::numeric_limits<double>::quiet_NaN();
      switch (spec.axis) {
        case SweepAxis::Cooperativity:
          p.kappa = p.g * p.g / (2.0 * v * p.gamma_perp);
          break;
        case SweepAxis::Length: {
          design::CavityGeometry g = spec.geometry;
          g.length = v * 1e-6;
          p.g = units::from_rad_per_s(design::coupling_g(g));
          p.kappa = units::from_rad_per_s(design::kappa_from_finesse(g));
          length_um = v;
          break;
        }
        case SweepAxis::Atoms:
          break;
      }
      const RunResult r = run_scenario(s);
      rows[i] = {cooperativity(p), length_um, p.n_atoms, units::to_2pi_mhz(p.kappa), units::to_2pi_mhz(p.g),
                 r.efficiency};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t workers = std::min<std::size_t>(spec.workers, spec.values.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < spec.values.size(); ++i) point(i);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < spec.values.size(); i += workers) point(i);
      });
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "C,L_c_um,N,kappa_2pi_mhz,g_2pi_mhz,efficiency\n";
  for (const auto& r : rows)
    os << format_double(r.cooperativity) << ',' << format_double(r.length_um) << ',' << r.n_atoms << ','
       << format_double(r.kappa_2pi_mhz) << ',' << format_double(r.g_2pi_mhz) << ',' << format_double(r.efficiency)
       << '\n';
}

ValidationReport run_validation(const Scenario& s) {
  ValidationReport v{};
  v.n_atoms = s.system.n_atoms;
  const Trajectory coll = run(s.system, s.schedule, s.integrator, pure_state(s.initial_state));
  const OracleTrajectory orc = oracle_run(s.system, s.schedule, s.integrator, pure_state(s.initial_state));
  std::vector<double> g1c, g1o;
  for (std::size_t i = 0; i < coll.states.size(); ++i) {
    const RealVec pc = populations(coll.states[i]);
    const RealVec po = populations(orc.projected[i]);
    v.max_population_deviation = std::max(v.max_population_deviation, (pc - po).cwiseAbs().maxCoeff());
    v.max_leakage = std::max(v.max_leakage, orc.leakage[i]);
    v.max_double_collective = std::max(v.max_double_collective, pc[RR0] + pc[EE0] + pc[ER0]);
    v.max_double_oracle = std::max(v.max_double_oracle, po[RR0] + po[EE0] + po[ER0]);
    g1c.push_back(pc[G1]);
    g1o.push_back(po[G1]);
  }
  v.collective_frequency = fit_peak_frequency(coll.times, g1c, s.fit_t_min);
  v.oracle_frequency = fit_peak_frequency(orc.times, g1o, s.fit_t_min);
  return v;
}

json validation_json(const ValidationReport& r) {
  return {{"n_atoms", r.n_atoms},
          {"max_population_deviation", r.max_population_deviation},
          {"max_leakage", r.max_leakage},
          {"max_double_collective", r.max_double_collective},
          {"max_double_oracle", r.max_double_oracle},
          {"collective_frequency_2pi_mhz", units::to_2pi_mhz(r.collective_frequency)},
          {"oracle_frequency_2pi_mhz", units::to_2pi_mhz(r.oracle_frequency)}};
}

}  // namespace rydcav
