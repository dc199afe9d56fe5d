#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rydcav/error.hpp"
#include "rydcav/presets.hpp"
#include "rydcav/scenario.hpp"

namespace fs = std::filesystem;
using namespace rydcav;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitDivergence = 3;

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what(), path);
  }
}

void write_file(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

struct Options {
  std::string preset, config, out = ".", kappa_mode, variant;
  int n = 0;
};

PresetOptions preset_options(const Options& o) {
  PresetOptions p;
  if (o.n > 0) p.n_atoms = o.n;
  p.kappa_mode = o.kappa_mode;
  p.variant = o.variant;
  return p;
}

json load_config(const Options& o) {
  if (!o.preset.empty() && !o.config.empty()) throw ConfigError("give --preset or --config, not both");
  if (!o.config.empty()) return read_json(o.config);
  if (!o.preset.empty()) return preset_config(o.preset, preset_options(o));
  throw ConfigError("one of --preset or --config is required");
}

int cmd_run(const Options& o) {
  const Scenario s = scenario_from_json(load_config(o));
  const RunResult r = run_scenario(s);
  const fs::path dir(o.out);
  std::ostringstream csv;
  write_csv(csv, r.series);
  write_file(dir / (s.name + ".csv"), csv.str());
  const json summary = summary_json(s, r);
  write_file(dir / (s.name + ".summary.json"), summary.dump(2) + "\n");
  write_file(dir / (s.name + ".config.json"), s.effective.dump(2) + "\n");
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << summary.dump(2) << '\n';
  return 0;
}

int cmd_sweep(const Options& o) {
  json cfg;
  if (!o.config.empty()) cfg = read_json(o.config);
  else if (!o.preset.empty()) cfg = sweep_preset_config(o.preset);
  else throw ConfigError("one of --preset or --config is required");
  const SweepSpec spec = sweep_from_json(cfg);
  const auto rows = run_sweep(spec);
  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  write_file(fs::path(o.out) / (spec.base.name + "-sweep.csv"), csv.str());
  std::cout << csv.str();
  return 0;
}

int cmd_design(const Options& o) {
  const json cfg = o.config.empty() ? json::object() : read_json(o.config);
  const auto geo = geometry_from_json(cfg);
  const json derived = design_json(geo);
  write_file(fs::path(o.out) / "design.json", derived.dump(2) + "\n");
  if (cfg.contains("sweep_length_um")) {
    std::ostringstream csv;
    csv << "length_um,waist_um,g_2pi_mhz,kappa_2pi_mhz,finesse,purcell_factor,cooperativity\n";
    for (const auto& v : cfg["sweep_length_um"]) {
      if (!v.is_number()) throw ConfigError("expected numbers", "geometry.sweep_length_um");
      auto g = geo;
      g.length = v.get<double>() * 1e-6;
      const json d = design_json(g);
      for (const char* k : {"length_um", "waist_um", "g_2pi_mhz", "kappa_2pi_mhz", "finesse", "purcell_factor"})
        csv << format_double(d[k].get<double>()) << ',';
      csv << format_double(d["cooperativity"].get<double>()) << '\n';
    }
    write_file(fs::path(o.out) / "design-sweep.csv", csv.str());
  }
  std::cout << derived.dump(2) << '\n';
  return 0;
}

int cmd_validate(const Options& o) {
  Options v = o;
  if (v.preset.empty() && v.config.empty()) v.preset = "fig2";
  json cfg = load_config(v);
  cfg["system"]["gamma_perp_2pi_mhz"] = 0.0;
  cfg["system"]["gamma_r_2pi_khz"] = 0.0;
  const Scenario s = scenario_from_json(cfg);
  const json report = validation_json(run_validation(s));
  write_file(fs::path(o.out) / (s.name + ".validate.json"), report.dump(2) + "\n");
  std::cout << report.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rydberg-blockade superatom in a cavity: master-equation simulator"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--preset", o.preset, "named preset");
    c->add_option("--config", o.config, "JSON config file");
    c->add_option("--out", o.out, "output directory");
  };
  auto add_preset_opts = [&](CLI::App* c) {
    c->add_option("--n", o.n, "atom count override")->check(CLI::Range(1, 1000));
    c->add_option("--kappa-mode", o.kappa_mode, "weak | strong");
    c->add_option("--variant", o.variant, "preset variant");
  };

  auto* run = app.add_subcommand("run", "run one scenario, write CSV and summary JSON");
  add_common(run);
  add_preset_opts(run);
  auto* sweep = app.add_subcommand("sweep", "run a parameter sweep");
  add_common(sweep);
  auto* des = app.add_subcommand("design", "derive cavity parameters from geometry");
  des->add_option("--config", o.config, "geometry JSON");
  des->add_option("--out", o.out, "output directory");
  auto* val = app.add_subcommand("validate", "compare the collective model against the product-space oracle");
  add_common(val);
  add_preset_opts(val);
  auto* list = app.add_subcommand("presets", "list presets and their variants");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(o);
    if (sweep->parsed()) return cmd_sweep(o);
    if (des->parsed()) return cmd_design(o);
    if (val->parsed()) return cmd_validate(o);
    if (list->parsed()) {
      for (const auto& n : preset_names()) {
        std::cout << n;
        for (const auto& v : preset_variants(n))
          if (!v.empty()) std::cout << ' ' << v;
        std::cout << '\n';
      }
      for (const auto& n : sweep_preset_names()) std::cout << n << " (sweep)\n";
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DivergenceError& e) {
    std::cerr << "divergence: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return 0;
}
