#include "riswpc/power.hpp"

#include <cmath>

#include "riswpc/errors.hpp"

namespace riswpc {

namespace {

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError(std::string(who) + ": alpha must lie in (0, 1)");
}

}  // namespace

PowerModel power_model(const SystemConfig& cfg) {
  const LinkParams link = link_params(cfg);
  PowerModel pm;
  pm.static_term = static_cast<double>(link.elements()) * (link.P1_mw + link.P2_mw);
  if (cfg.ris_mode == RisMode::Passive) return pm;
  double rho2_zeta_h = 0.0;
  double rho2 = 0.0;
  for (std::size_t m = 0; m < link.elements(); ++m) {
    const double r2 = link.rho[m] * link.rho[m];
    rho2_zeta_h += r2 * link.zeta_h[m];
    rho2 += r2;
  }
  pm.amp_signal_term = rho2_zeta_h;
  if (cfg.power_mode == PowerMode::Physical) pm.amp_signal_term *= link.zeta_p;
  pm.amp_noise_term = link.sigma_v2_mw * rho2;
  return pm;
}

double expected_power(const SystemConfig& cfg, double alpha) {
  check_alpha(alpha, "expected_power");
  const PowerModel pm = power_model(cfg);
  return harvest_coefficient(cfg.eta, cfg.P_p_mw(), alpha) * pm.amp_signal_term + pm.floor();
}

double instantaneous_power(const SystemConfig& cfg, const LinkParams& link, const ChannelDraw& draw,
                           double alpha) {
  check_alpha(alpha, "instantaneous_power");
  if (draw.elements() != link.elements())
    throw DimensionMismatch("instantaneous_power: draw has " + std::to_string(draw.elements()) +
                            " elements, config has " + std::to_string(link.elements()));
  const double static_term = static_cast<double>(link.elements()) * (link.P1_mw + link.P2_mw);
  if (cfg.ris_mode == RisMode::Passive) return static_term;
  double signal = 0.0;
  double rho2 = 0.0;
  for (std::size_t m = 0; m < link.elements(); ++m) {
    const double r2 = link.rho[m] * link.rho[m];
    signal += r2 * draw.h_mag[m] * draw.h_mag[m];
    rho2 += r2;
  }
  if (cfg.power_mode == PowerMode::Physical) signal *= draw.h_p_mag * draw.h_p_mag;
  return harvest_coefficient(link.eta, link.P_p_mw, alpha) * signal + link.sigma_v2_mw * rho2 +
         static_term;
}

double instantaneous_power(const SystemConfig& cfg, const ChannelDraw& draw, double alpha) {
  return instantaneous_power(cfg, link_params(cfg), draw, alpha);
}

PowerInverse inverse_power(const SystemConfig& cfg, double P_R_mw) {
  const PowerModel pm = power_model(cfg);
  if (!(P_R_mw > pm.floor()))
    throw InfeasibleBudget("power budget " + std::to_string(P_R_mw) +
                           " mW does not exceed the alpha-independent floor " +
                           std::to_string(pm.floor()) + " mW");
  const double harvest_scale = cfg.eta * cfg.P_p_mw();
  if (!(pm.amp_signal_term > 0.0) || !(harvest_scale > 0.0) || std::isinf(P_R_mw))
    return {1.0, true};
  const double nu = (P_R_mw - pm.floor()) / pm.amp_signal_term;
  return {nu / (harvest_scale + nu), false};
}

}  // namespace riswpc
