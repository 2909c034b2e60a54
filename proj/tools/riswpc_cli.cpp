// riswpc: sweeps, figure data, optimizer runs and Monte Carlo checks as CSV.
//
// Configuration precedence, lowest first: built-in defaults, --config file,
// --set key=value (in order), then --seed / --samples / --quadrature-points.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "riswpc/config.hpp"
#include "riswpc/errors.hpp"
#include "riswpc/figures.hpp"
#include "riswpc/sweep.hpp"

namespace {

using namespace riswpc;

struct Common {
  std::string config_path;
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> samples;
  std::optional<int> quadrature_points;
  std::string out_dir;
  unsigned threads = 0;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "key = value configuration file");
    app->add_option("--set", overrides, "override one key, e.g. --set M=16 (repeatable)");
    app->add_option("--seed", seed, "RNG seed (default 1)");
    app->add_option("--samples", samples, "Monte Carlo draws per estimate");
    app->add_option("--quadrature-points", quadrature_points, "Gauss-Chebyshev nodes");
    app->add_option("--out-dir", out_dir, "write CSV files here instead of stdout");
    app->add_option("--threads", threads, "worker threads, 0 = all cores");
  }

  SystemConfig config() const {
    KeyValues kv;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw ValidationError("config", "cannot open '" + config_path + "'");
      std::stringstream ss;
      ss << in.rdbuf();
      kv = parse_document(ss.str());
    }
    for (const auto& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos) throw ValidationError("set", "expected key=value, got '" + o + "'");
      // Reuse the document parser so whitespace and value syntax match files.
      for (auto& [k, v] : parse_document(o.substr(0, eq) + " = " + o.substr(eq + 1))) kv[k] = v;
    }
    if (samples) kv["mc_samples"] = std::to_string(*samples);
    if (quadrature_points) kv["quadrature_points"] = std::to_string(*quadrature_points);
    return build_config(kv);
  }

  RunOptions run_options() const { return {seed.value_or(1), threads}; }
};

void emit(const std::vector<CsvFile>& files, const std::string& out_dir) {
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    for (const auto& f : files) f.table.write(std::filesystem::path(out_dir) / f.name);
    return;
  }
  for (const auto& f : files) {
    if (files.size() > 1) std::cout << "# " << f.name << "\n";
    std::cout << f.table.to_string();
  }
}

int fail(const std::string& kind, const std::string& message, const std::string& field = {}) {
  nlohmann::ordered_json j;
  j["error"] = kind;
  if (!field.empty()) j["field"] = field;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Active-RIS wireless-powered link simulator. Prints CSV.\n"
      "Precedence: defaults < --config < --set < --seed/--samples/--quadrature-points."};
  app.require_subcommand(1);

  Common common;

  auto* sweep = app.add_subcommand("sweep", "sweep one parameter and tabulate outputs");
  std::string variable;
  std::string values;
  std::vector<std::string> outputs;
  sweep->add_option("--variable", variable, "P_p_dbm | M | alpha | b | rho | P_R_mw")->required();
  sweep->add_option("--values", values, "start:stop:step (inclusive) or v1,v2,...")->required();
  sweep->add_option("--outputs", outputs,
                    "ergodic_cf ergodic_mc outage_cf outage_mc effective power alpha_star alpha_dagger")
      ->required()
      ->delimiter(',');
  common.attach(sweep);

  auto* figure = app.add_subcommand(
      "figure",
      "figure data: fig2 rate vs P_p, fig3 outage vs P_p, fig4 rates vs alpha,\n"
      "fig5 power over rho in [1,6] x P_p in [0,30] dBm, fig6 power over M in [4,64] x alpha in {0.1,0.9}");
  std::string fig_name;
  figure->add_option("name", fig_name, "fig2 | fig3 | fig4 | fig5 | fig6")->required();
  common.attach(figure);

  auto* optimize = app.add_subcommand("optimize", "optimal time-switching factor, with and without budget");
  common.attach(optimize);

  auto* compare = app.add_subcommand("compare", "active surface vs its passive counterpart");
  common.attach(compare);

  auto* mc = app.add_subcommand("mc", "closed forms next to Monte Carlo estimates");
  common.attach(mc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what());
  }

  try {
    const SystemConfig cfg = common.config();
    const RunOptions opts = common.run_options();
    std::vector<CsvFile> files;
    if (*sweep) {
      SweepSpec spec;
      spec.variable = parse_sweep_variable(variable);
      spec.values = parse_values(values);
      for (const auto& o : outputs) spec.outputs.push_back(parse_sweep_output(o));
      spec.seed = opts.seed;
      files.push_back({std::string("sweep_") + to_string(spec.variable) + ".csv",
                       run_sweep(cfg, spec, opts.threads)});
    } else if (*figure) {
      files = reproduce_figure(parse_figure(fig_name), cfg, opts);
    } else if (*optimize) {
      files.push_back({"optimize.csv", optimization_report(cfg)});
    } else if (*compare) {
      files.push_back({"compare.csv", compare_active_passive(cfg, opts)});
    } else if (*mc) {
      files.push_back({"mc.csv", mc_report(cfg, opts)});
    }
    emit(files, common.out_dir);
  } catch (const ValidationError& e) {
    return fail(e.kind(), e.what(), e.field());
  } catch (const Error& e) {
    return fail(e.kind(), e.what());
  } catch (const std::exception& e) {
    return fail("io", e.what());
  }
  return 0;
}
