#include "riswpc/figures.hpp"

#include <algorithm>
#include <functional>

#include "parallel.hpp"
#include "riswpc/closedform.hpp"
#include "riswpc/errors.hpp"
#include "riswpc/montecarlo.hpp"
#include "riswpc/optimize.hpp"
#include "riswpc/power.hpp"

namespace riswpc {

namespace {

struct Curve {
  std::string name;
  std::function<SystemConfig(const SystemConfig&)> adjust;
};

std::vector<double> grid(double start, double stop, double step) {
  std::vector<double> out;
  const auto n = static_cast<int>((stop - start) / step + 1e-9) + 1;
  for (int i = 0; i < n; ++i) out.push_back(start + i * step);
  return out;
}

SystemConfig active_with_b(const SystemConfig& c, int b) {
  SystemConfig out = c;
  out.ris_mode = RisMode::Active;
  out.b = b;
  return out;
}

SystemConfig with_mode(const SystemConfig& c, RisMode mode, int elements) {
  SystemConfig out = c;
  out.ris_mode = mode;
  out.set_elements(elements);
  return out;
}

// One row per P_p value; every curve contributes cf, mc and mc_stderr columns.
CsvTable pp_curves(const SystemConfig& base, RunOptions opts, const std::vector<Curve>& curves,
                   bool outage) {
  const auto pp = grid(0.0, 30.0, 2.0);
  const char* unit = outage ? "-" : "bit/s/Hz";
  CsvTable table;
  table.header.push_back("P_p_dbm[dBm]");
  for (const auto& c : curves) {
    table.header.push_back(c.name + "_cf[" + unit + "]");
    table.header.push_back(c.name + "_mc[" + unit + "]");
    table.header.push_back(c.name + "_mc_stderr[" + unit + "]");
  }
  table.rows.resize(pp.size());
  detail::parallel_for(pp.size(), opts.threads, [&](std::size_t i) {
    std::vector<std::string> row{format_number(pp[i])};
    for (const auto& c : curves) {
      SystemConfig cfg = c.adjust(base);
      cfg.P_p_dbm = pp[i];
      validate(cfg);
      const double cf = outage ? outage_probability(cfg, cfg.alpha) : ergodic_rate(cfg, cfg.alpha);
      const Estimate e = outage ? mc_outage(cfg, cfg.alpha, cfg.mc_samples, opts.seed, McOptions{1})
                                : mc_ergodic_rate(cfg, cfg.alpha, cfg.mc_samples, opts.seed, McOptions{1});
      row.push_back(format_number(cf));
      row.push_back(format_number(e.value));
      row.push_back(format_number(e.std_error));
    }
    table.rows[i] = std::move(row);
  });
  return table;
}

CsvTable fig2(const SystemConfig& base, RunOptions opts) {
  const std::vector<Curve> curves = {
      {"active_b1", [](const SystemConfig& c) { return active_with_b(c, 1); }},
      {"active_b4", [](const SystemConfig& c) { return active_with_b(c, 4); }},
      {"active_b16", [](const SystemConfig& c) { return active_with_b(c, 16); }},
      {"passive", [](const SystemConfig& c) {
         SystemConfig out = c;
         out.ris_mode = RisMode::Passive;
         return out;
       }}};
  return pp_curves(base, opts, curves, false);
}

CsvTable fig3(const SystemConfig& base, RunOptions opts) {
  std::vector<Curve> curves;
  for (int m : {16, 32}) {
    curves.push_back({"active_M" + std::to_string(m),
                      [m](const SystemConfig& c) { return with_mode(c, RisMode::Active, m); }});
    curves.push_back({"passive_M" + std::to_string(m),
                      [m](const SystemConfig& c) { return with_mode(c, RisMode::Passive, m); }});
  }
  return pp_curves(base, opts, curves, true);
}

CsvTable fig4(const SystemConfig& base) {
  struct Row {
    double alpha;
    std::string marker;
  };
  std::vector<Row> rows;
  for (double a : grid(0.01, 0.99, 0.01)) rows.push_back({a, ""});
  const OptResult star = optimize_alpha_ergodic(base);
  const OptResult dagger = optimize_alpha_effective(base);
  rows.push_back({star.alpha_opt, "alpha_star"});
  rows.push_back({*dagger.alpha_closed_form, "alpha_dagger"});
  rows.push_back({dagger.alpha_opt, "alpha_dagger_numeric"});
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.alpha < b.alpha; });

  CsvTable table;
  table.header = {"alpha[-]", "ergodic_cf[bit/s/Hz]", "effective[bit/s/Hz]", "marker"};
  for (const Row& r : rows) {
    table.rows.push_back({format_number(r.alpha), format_number(ergodic_rate(base, r.alpha)),
                          format_number(effective_rate(base, r.alpha)), r.marker.empty() ? "grid" : r.marker});
  }
  return table;
}

CsvTable fig5(const SystemConfig& base) {
  CsvTable table;
  table.header = {"rho[-]", "P_p_dbm[dBm]", "power[mW]"};
  for (double rho : grid(1.0, 6.0, 0.5)) {
    for (double pp : grid(0.0, 30.0, 5.0)) {
      SystemConfig cfg = base;
      cfg.ris_mode = RisMode::Active;
      cfg.set_uniform_rho(rho);
      cfg.P_p_dbm = pp;
      validate(cfg);
      table.rows.push_back({format_number(rho), format_number(pp), format_number(expected_power(cfg, cfg.alpha))});
    }
  }
  return table;
}

CsvTable fig6(const SystemConfig& base) {
  CsvTable table;
  table.header = {"M[-]", "alpha[-]", "power[mW]"};
  for (double m : grid(4.0, 64.0, 4.0)) {
    for (double alpha : {0.1, 0.9}) {
      SystemConfig cfg = base;
      cfg.ris_mode = RisMode::Active;
      cfg.set_elements(static_cast<int>(m));
      validate(cfg);
      table.rows.push_back({format_number(m), format_number(alpha), format_number(expected_power(cfg, alpha))});
    }
  }
  return table;
}

}  // namespace

Figure parse_figure(const std::string& name) {
  for (Figure f : {Figure::fig2, Figure::fig3, Figure::fig4, Figure::fig5, Figure::fig6})
    if (name == to_string(f)) return f;
  throw ValidationError("figure", "unknown figure '" + name + "' (expected fig2..fig6)");
}

const char* to_string(Figure fig) {
  switch (fig) {
    case Figure::fig2: return "fig2";
    case Figure::fig3: return "fig3";
    case Figure::fig4: return "fig4";
    case Figure::fig5: return "fig5";
    case Figure::fig6: return "fig6";
  }
  return "?";
}

std::vector<CsvFile> reproduce_figure(Figure fig, const SystemConfig& base, RunOptions opts) {
  validate(base);
  const std::string stem = to_string(fig);
  switch (fig) {
    case Figure::fig2: return {{stem + "_ergodic.csv", fig2(base, opts)}};
    case Figure::fig3: return {{stem + "_outage.csv", fig3(base, opts)}};
    case Figure::fig4: return {{stem + "_rates.csv", fig4(base)}};
    case Figure::fig5: return {{stem + "_power.csv", fig5(base)}};
    case Figure::fig6: return {{stem + "_power.csv", fig6(base)}};
  }
  return {};
}

}  // namespace riswpc
