#pragma once

#include "riswpc/channel.hpp"
#include "riswpc/config.hpp"

namespace riswpc {

/// Expected RIS power draw split by its dependence on alpha:
/// P(alpha) = nu1(alpha) * amp_signal_term + amp_noise_term + static_term.
struct PowerModel {
  double amp_signal_term = 0.0;  ///< sum rho^2 zeta_h (times zeta_p in physical mode)
  double amp_noise_term = 0.0;   ///< sigma_v^2 sum rho^2, mW
  double static_term = 0.0;      ///< M (P1 + P2), mW

  /// Consumption as alpha -> 0+.
  double floor() const { return amp_noise_term + static_term; }
};

/// Passive surfaces carry only the static term.
PowerModel power_model(const SystemConfig& cfg);

double expected_power(const SystemConfig& cfg, double alpha);

/// One realization of nu1 s sum rho^2 |h_m|^2 + sigma_v^2 sum rho^2 + M (P1 + P2),
/// with s = 1 in paper-literal mode and s = |h_p|^2 in physical mode.
double instantaneous_power(const SystemConfig& cfg, const ChannelDraw& draw, double alpha);
double instantaneous_power(const SystemConfig& cfg, const LinkParams& link, const ChannelDraw& draw,
                           double alpha);

struct PowerInverse {
  double alpha = 0.0;
  /// The budget is never reached for any alpha in (0, 1); alpha is then 1.
  bool saturated = false;
};

/// Alpha at which the expected power equals `P_R_mw`, in closed form:
/// nu = (P_R - floor) / amp_signal_term, alpha = nu / (eta P_p + nu).
/// Throws InfeasibleBudget when P_R_mw <= floor.
PowerInverse inverse_power(const SystemConfig& cfg, double P_R_mw);

}  // namespace riswpc
