#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riswpc/config.hpp"
#include "riswpc/csv.hpp"

namespace riswpc {

enum class SweepVariable { P_p_dbm, M, alpha, b, rho, P_R_mw };

enum class SweepOutput {
  ergodic_cf,
  ergodic_mc,
  outage_cf,
  outage_mc,
  effective,
  power,
  alpha_star,
  alpha_dagger
};

struct SweepSpec {
  SweepVariable variable = SweepVariable::P_p_dbm;
  std::vector<double> values;
  std::vector<SweepOutput> outputs;
  std::uint64_t seed = 1;
};

struct RunOptions {
  std::uint64_t seed = 1;
  /// Sweep points evaluated concurrently; 0 means hardware concurrency.
  unsigned threads = 0;
};

SweepVariable parse_sweep_variable(const std::string& name);
SweepOutput parse_sweep_output(const std::string& name);
const char* to_string(SweepVariable v);
const char* to_string(SweepOutput o);

/// "a:b:step" (inclusive range) or "v1,v2,...".
std::vector<double> parse_values(const std::string& text);

/// Throws ValidationError for an empty or non-monotone value list, or no outputs.
void validate(const SweepSpec& spec);

/// Copy of `cfg` with the swept variable set to `value`, validated.
SystemConfig with_sweep_value(const SystemConfig& cfg, SweepVariable variable, double value);

/// One row per sweep value, in order. Columns: the swept value, then each
/// requested output; Monte Carlo outputs add a stderr column. Budget-limited
/// outputs print "infeasible" when the budget is below the power floor.
CsvTable run_sweep(const SystemConfig& cfg, const SweepSpec& spec, unsigned threads = 0);

/// Side-by-side rows for the configured active surface and its passive
/// counterpart (rho = 1, sigma_v^2 = 0) at identical M and alpha.
CsvTable compare_active_passive(const SystemConfig& cfg, RunOptions opts = {});

/// One row per optimization problem at the config's budget P_R_mw.
CsvTable optimization_report(const SystemConfig& cfg);

/// Closed form next to Monte Carlo for every validated quantity.
CsvTable mc_report(const SystemConfig& cfg, RunOptions opts = {});

}  // namespace riswpc
