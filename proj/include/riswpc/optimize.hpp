#pragma once

#include <functional>
#include <optional>

#include "riswpc/config.hpp"

namespace riswpc {

enum class Binding { Interior, PowerConstrained };

const char* to_string(Binding binding);

struct OptResult {
  double alpha_opt = 0.0;
  double objective_value = 0.0;
  Binding binding = Binding::Interior;
  int iterations = 0;
  /// |dR/dalpha| at an interior optimum, |P_c - P_R| at a binding one.
  double residual = 0.0;
  /// 1 / (ln2 r_v + 1); set by the effective-rate optimizers only.
  std::optional<double> alpha_closed_form;
  /// A grid scan found no feasible alpha with a better objective. False
  /// flags a violated unimodality assumption.
  bool grid_consistent = true;
};

/// Search interval for alpha; the endpoints 0 and 1 give zero rate.
inline constexpr double kAlphaLow = 1e-6;
inline constexpr double kAlphaHigh = 1.0 - 1e-6;
inline constexpr double kAlphaTolerance = 1e-9;

/// dR/dalpha of the approximated ergodic rate with q = t7 / t6:
/// (1/ln2) [ (1-a)(q a/(1-a)^2 + q/(1-a)) / (q a/(1-a) + 1) - ln(q a/(1-a) + 1) ].
double ergodic_rate_derivative(const SystemConfig& cfg, double alpha);

/// Maximizer of a unimodal f on [lo, hi] by golden-section search.
struct GoldenResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};
GoldenResult golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                     double tol);

/// Root of the ergodic-rate derivative by bisection on [kAlphaLow, kAlphaHigh].
/// Throws NoInteriorMaximum when the derivative does not change sign.
OptResult optimize_alpha_ergodic(const SystemConfig& cfg);

/// Unconstrained optimum if it fits the budget, else inverse_power(P_R).
OptResult optimize_alpha_ergodic_constrained(const SystemConfig& cfg, double P_R_mw);

/// Closed form 1/(ln2 r_v + 1) alongside a grid + golden-section maximizer of
/// (1 - P_O(alpha)) r_v; objective_value is taken at the numeric maximizer.
OptResult optimize_alpha_effective(const SystemConfig& cfg);

OptResult optimize_alpha_effective_constrained(const SystemConfig& cfg, double P_R_mw);

}  // namespace riswpc
