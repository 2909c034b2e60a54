#include "riswpc/sweep.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "parallel.hpp"
#include "riswpc/closedform.hpp"
#include "riswpc/errors.hpp"
#include "riswpc/montecarlo.hpp"
#include "riswpc/optimize.hpp"
#include "riswpc/power.hpp"

namespace riswpc {

namespace {

const std::map<std::string, SweepVariable>& variable_names() {
  static const std::map<std::string, SweepVariable> names = {
      {"P_p_dbm", SweepVariable::P_p_dbm}, {"M", SweepVariable::M},
      {"alpha", SweepVariable::alpha},     {"b", SweepVariable::b},
      {"rho", SweepVariable::rho},         {"P_R_mw", SweepVariable::P_R_mw}};
  return names;
}

const std::map<std::string, SweepOutput>& output_names() {
  static const std::map<std::string, SweepOutput> names = {
      {"ergodic_cf", SweepOutput::ergodic_cf}, {"ergodic_mc", SweepOutput::ergodic_mc},
      {"outage_cf", SweepOutput::outage_cf},   {"outage_mc", SweepOutput::outage_mc},
      {"effective", SweepOutput::effective},   {"power", SweepOutput::power},
      {"alpha_star", SweepOutput::alpha_star}, {"alpha_dagger", SweepOutput::alpha_dagger}};
  return names;
}

const char* variable_unit(SweepVariable v) {
  switch (v) {
    case SweepVariable::P_p_dbm: return "dBm";
    case SweepVariable::b: return "bit";
    case SweepVariable::P_R_mw: return "mW";
    default: return "-";
  }
}

std::string col(const std::string& name, const char* unit) { return name + "[" + unit + "]"; }

std::vector<std::string> output_columns(SweepOutput o) {
  switch (o) {
    case SweepOutput::ergodic_cf: return {col("ergodic_cf", "bit/s/Hz")};
    case SweepOutput::ergodic_mc:
      return {col("ergodic_mc", "bit/s/Hz"), col("ergodic_mc_stderr", "bit/s/Hz")};
    case SweepOutput::outage_cf: return {col("outage_cf", "-")};
    case SweepOutput::outage_mc: return {col("outage_mc", "-"), col("outage_mc_stderr", "-")};
    case SweepOutput::effective: return {col("effective", "bit/s/Hz")};
    case SweepOutput::power: return {col("power", "mW")};
    case SweepOutput::alpha_star: return {col("alpha_star", "-"), col("alpha_star_budget", "-")};
    case SweepOutput::alpha_dagger:
      return {col("alpha_dagger_cf", "-"), col("alpha_dagger_num", "-"),
              col("alpha_dagger_budget", "-")};
  }
  return {};
}

template <class Fn>
std::string budget_cell(Fn fn) {
  try {
    return format_number(fn());
  } catch (const InfeasibleBudget&) {
    return "infeasible";
  }
}

std::vector<std::string> output_cells(const SystemConfig& cfg, SweepOutput o, std::uint64_t seed) {
  const McOptions single{1};
  switch (o) {
    case SweepOutput::ergodic_cf: return {format_number(ergodic_rate(cfg, cfg.alpha))};
    case SweepOutput::ergodic_mc: {
      auto e = mc_ergodic_rate(cfg, cfg.alpha, cfg.mc_samples, seed, single);
      return {format_number(e.value), format_number(e.std_error)};
    }
    case SweepOutput::outage_cf: return {format_number(outage_probability(cfg, cfg.alpha))};
    case SweepOutput::outage_mc: {
      auto e = mc_outage(cfg, cfg.alpha, cfg.mc_samples, seed, single);
      return {format_number(e.value), format_number(e.std_error)};
    }
    case SweepOutput::effective: return {format_number(effective_rate(cfg, cfg.alpha))};
    case SweepOutput::power: return {format_number(expected_power(cfg, cfg.alpha))};
    case SweepOutput::alpha_star:
      return {format_number(optimize_alpha_ergodic(cfg).alpha_opt),
              budget_cell([&] { return optimize_alpha_ergodic_constrained(cfg, cfg.P_R_mw).alpha_opt; })};
    case SweepOutput::alpha_dagger: {
      auto r = optimize_alpha_effective(cfg);
      return {format_number(*r.alpha_closed_form), format_number(r.alpha_opt),
              budget_cell([&] { return optimize_alpha_effective_constrained(cfg, cfg.P_R_mw).alpha_opt; })};
    }
  }
  return {};
}

std::string describe(SweepVariable v, double value) {
  std::ostringstream ss;
  ss << to_string(v) << "=" << value;
  return ss.str();
}

}  // namespace

SweepVariable parse_sweep_variable(const std::string& name) {
  auto it = variable_names().find(name);
  if (it == variable_names().end()) throw ValidationError("variable", "unknown sweep variable '" + name + "'");
  return it->second;
}

SweepOutput parse_sweep_output(const std::string& name) {
  auto it = output_names().find(name);
  if (it == output_names().end()) throw ValidationError("outputs", "unknown output '" + name + "'");
  return it->second;
}

const char* to_string(SweepVariable v) {
  for (const auto& [name, value] : variable_names())
    if (value == v) return name.c_str();
  return "?";
}

const char* to_string(SweepOutput o) {
  for (const auto& [name, value] : output_names())
    if (value == o) return name.c_str();
  return "?";
}

std::vector<double> parse_values(const std::string& text) {
  auto number = [](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw ValidationError("values", "not a number: '" + s + "'");
    }
    if (pos != s.size()) throw ValidationError("values", "not a number: '" + s + "'");
    return v;
  };
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    if (parts.size() != 3) throw ValidationError("values", "range must be start:stop:step");
    const double start = number(parts[0]);
    const double stop = number(parts[1]);
    const double step = number(parts[2]);
    if (!(step != 0.0) || (stop - start) / step < 0.0)
      throw ValidationError("values", "step does not lead from start to stop");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) throw ValidationError("values", "range too long");
    for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  } else {
    std::stringstream ss(text);
    std::string p;
    while (std::getline(ss, p, ','))
      if (!p.empty()) out.push_back(number(p));
  }
  return out;
}

void validate(const SweepSpec& spec) {
  if (spec.values.empty()) throw ValidationError("values", "sweep needs at least one value");
  if (spec.outputs.empty()) throw ValidationError("outputs", "sweep needs at least one output");
  if (spec.values.size() > 1) {
    const bool up = spec.values[1] > spec.values[0];
    for (std::size_t i = 1; i < spec.values.size(); ++i) {
      if (up ? !(spec.values[i] > spec.values[i - 1]) : !(spec.values[i] < spec.values[i - 1]))
        throw ValidationError("values", "sweep values must be strictly monotone");
    }
  }
}

SystemConfig with_sweep_value(const SystemConfig& cfg, SweepVariable variable, double value) {
  SystemConfig out = cfg;
  auto integral = [&](const char* field) {
    if (value != std::floor(value) || std::abs(value) > 1e9)
      throw ValidationError(field, "sweep value must be an integer");
    return static_cast<int>(value);
  };
  switch (variable) {
    case SweepVariable::P_p_dbm: out.P_p_dbm = value; break;
    case SweepVariable::M: {
      int m = integral("M");
      if (m < 1) throw ValidationError("M", "must be >= 1");
      out.set_elements(m);
      break;
    }
    case SweepVariable::alpha: out.alpha = value; break;
    case SweepVariable::b: out.b = integral("b"); break;
    case SweepVariable::rho: out.set_uniform_rho(value); break;
    case SweepVariable::P_R_mw: out.P_R_mw = value; break;
  }
  validate(out);
  return out;
}

CsvTable run_sweep(const SystemConfig& cfg, const SweepSpec& spec, unsigned threads) {
  validate(spec);
  CsvTable table;
  table.header.push_back(col(to_string(spec.variable), variable_unit(spec.variable)));
  for (SweepOutput o : spec.outputs)
    for (auto& c : output_columns(o)) table.header.push_back(std::move(c));

  table.rows.resize(spec.values.size());
  detail::parallel_for(spec.values.size(), threads, [&](std::size_t i) {
    const double value = spec.values[i];
    try {
      const SystemConfig point = with_sweep_value(cfg, spec.variable, value);
      std::vector<std::string> row{format_number(value)};
      for (SweepOutput o : spec.outputs)
        for (auto& c : output_cells(point, o, spec.seed)) row.push_back(std::move(c));
      table.rows[i] = std::move(row);
    } catch (const Error& e) {
      throw AnnotatedError(e, describe(spec.variable, value));
    }
  });
  return table;
}

CsvTable compare_active_passive(const SystemConfig& cfg, RunOptions opts) {
  CsvTable table;
  table.header = {"mode",
                  col("rho", "-"),
                  col("sigma_v2", "mW"),
                  col("ergodic_cf", "bit/s/Hz"),
                  col("ergodic_mc", "bit/s/Hz"),
                  col("ergodic_mc_stderr", "bit/s/Hz"),
                  col("outage_cf", "-"),
                  col("outage_mc", "-"),
                  col("outage_mc_stderr", "-"),
                  col("power", "mW")};
  SystemConfig active = cfg;
  active.ris_mode = RisMode::Active;
  SystemConfig passive = cfg;
  passive.ris_mode = RisMode::Passive;
  const McOptions mc{opts.threads};
  for (const SystemConfig* c : {&active, &passive}) {
    const auto rho = c->effective_rho();
    double mean_rho = 0.0;
    for (double r : rho) mean_rho += r;
    if (!rho.empty()) mean_rho /= static_cast<double>(rho.size());
    const auto erg = mc_ergodic_rate(*c, c->alpha, c->mc_samples, opts.seed, mc);
    const auto out = mc_outage(*c, c->alpha, c->mc_samples, opts.seed, mc);
    table.rows.push_back({to_string(c->ris_mode), format_number(mean_rho), format_number(c->sigma_v2_mw()),
                          format_number(ergodic_rate(*c, c->alpha)), format_number(erg.value),
                          format_number(erg.std_error), format_number(outage_probability(*c, c->alpha)),
                          format_number(out.value), format_number(out.std_error),
                          format_number(expected_power(*c, c->alpha))});
  }
  return table;
}

CsvTable optimization_report(const SystemConfig& cfg) {
  CsvTable table;
  table.header = {"problem",        col("alpha_opt", "-"), col("objective", "bit/s/Hz"),
                  "binding",        "iterations",          col("residual", "-"),
                  col("alpha_closed_form", "-"), "grid_consistent", col("P_R", "mW")};
  auto add = [&](const char* name, bool budgeted, auto solve) {
    const std::string budget = budgeted ? format_number(cfg.P_R_mw) : "inf";
    try {
      const OptResult r = solve();
      table.rows.push_back({name, format_number(r.alpha_opt), format_number(r.objective_value),
                            to_string(r.binding), std::to_string(r.iterations), format_number(r.residual),
                            r.alpha_closed_form ? format_number(*r.alpha_closed_form) : "nan",
                            r.grid_consistent ? "true" : "false", budget});
    } catch (const InfeasibleBudget&) {
      table.rows.push_back({name, "nan", "nan", "infeasible", "0", "nan", "nan", "false", budget});
    }
  };
  add("ergodic", false, [&] { return optimize_alpha_ergodic(cfg); });
  add("ergodic_budget", true, [&] { return optimize_alpha_ergodic_constrained(cfg, cfg.P_R_mw); });
  add("effective", false, [&] { return optimize_alpha_effective(cfg); });
  add("effective_budget", true, [&] { return optimize_alpha_effective_constrained(cfg, cfg.P_R_mw); });
  return table;
}

CsvTable mc_report(const SystemConfig& cfg, RunOptions opts) {
  CsvTable table;
  table.header = {"quantity", "closed_form", "monte_carlo", "stderr", "n"};
  const McOptions mc{opts.threads};
  const std::int64_t n = cfg.mc_samples;
  auto add = [&](const std::string& name, double cf, double value, double se, std::int64_t count) {
    table.rows.push_back({name, format_number(cf), format_number(value), format_number(se), std::to_string(count)});
  };
  const auto erg = mc_ergodic_rate(cfg, cfg.alpha, n, opts.seed, mc);
  add(col("ergodic_rate", "bit/s/Hz"), ergodic_rate(cfg, cfg.alpha), erg.value, erg.std_error, erg.n);
  const auto out = mc_outage(cfg, cfg.alpha, n, opts.seed, mc);
  add(col("outage", "-"), outage_probability(cfg, cfg.alpha), out.value, out.std_error, out.n);
  const auto terms = ergodic_terms(cfg);
  const auto te = mc_ergodic_terms(cfg, n, opts.seed, mc);
  add(col("signal_term", "-"), terms.signal(), te.signal.value, te.signal.std_error, te.signal.n);
  add(col("noise_term", "mW"), terms.t6, te.noise.value, te.noise.std_error, te.noise.n);
  const auto fit = gamma_fit(cfg);
  const auto mx = mc_moments_x(cfg, std::max<std::int64_t>(n, 1000), opts.seed, mc);
  add(col("mean_x", "-"), fit.mean_x, mx.mean, mx.mean_stderr, mx.n);
  add(col("var_x", "-"), fit.var_x, mx.variance, mx.variance_stderr, mx.n);
  const auto pw = mc_expected_power(cfg, cfg.alpha, n, opts.seed, mc);
  add(col("power", "mW"), expected_power(cfg, cfg.alpha), pw.value, pw.std_error, pw.n);
  return table;
}

}  // namespace riswpc
