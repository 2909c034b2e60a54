#include "riswpc/optimize.hpp"

#include <cmath>
#include <numbers>

#include "riswpc/closedform.hpp"
#include "riswpc/errors.hpp"
#include "riswpc/power.hpp"

namespace riswpc {

namespace {

constexpr int kCheckGrid = 1000;
constexpr int kEffectiveGrid = 400;

double derivative(double q, double a) {
  const double z = q * a / (1.0 - a);
  const double dz = q * a / ((1.0 - a) * (1.0 - a)) + q / (1.0 - a);
  return ((1.0 - a) * dz / (z + 1.0) - std::log1p(z)) / std::numbers::ln2;
}

double rate(double q, double a) { return (1.0 - a) * std::log2(1.0 + q * a / (1.0 - a)); }

double signal_to_noise_slope(const SystemConfig& cfg) {
  const ErgodicTerms t = ergodic_terms(cfg);
  return t.t7 / t.t6;
}

// True when no grid point of [lo, hi] beats `best` by more than a rounding margin.
bool grid_check(const std::function<double(double)>& f, double lo, double hi, double best) {
  for (int i = 0; i <= kCheckGrid; ++i) {
    const double a = lo + (hi - lo) * i / kCheckGrid;
    if (f(a) > best + 1e-12 * std::max(1.0, std::abs(best))) return false;
  }
  return true;
}

}  // namespace

const char* to_string(Binding binding) {
  return binding == Binding::Interior ? "interior" : "power_constrained";
}

double ergodic_rate_derivative(const SystemConfig& cfg, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("ergodic_rate_derivative: alpha must lie in (0, 1)");
  return derivative(signal_to_noise_slope(cfg), alpha);
}

GoldenResult golden_section_maximize(const std::function<double(double)>& f, double lo, double hi,
                                     double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while (b - a > tol && it < 500) {
    ++it;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  const double x = fc >= fd ? c : d;
  return {x, std::max(fc, fd), it};
}

OptResult optimize_alpha_ergodic(const SystemConfig& cfg) {
  const double q = signal_to_noise_slope(cfg);
  if (!(q > 0.0) || !std::isfinite(q))
    throw NoInteriorMaximum("optimize_alpha_ergodic: t7/t6 must be positive and finite");
  double lo = kAlphaLow;
  double hi = kAlphaHigh;
  if (!(derivative(q, lo) > 0.0) || !(derivative(q, hi) < 0.0))
    throw NoInteriorMaximum("optimize_alpha_ergodic: derivative has no sign change on (0, 1)");
  int it = 0;
  while (hi - lo > 1e-3 * kAlphaTolerance && it < 200) {
    const double mid = 0.5 * (lo + hi);
    if (derivative(q, mid) > 0.0) lo = mid;
    else hi = mid;
    ++it;
  }
  OptResult res;
  res.alpha_opt = 0.5 * (lo + hi);
  res.objective_value = ergodic_rate(cfg, res.alpha_opt);
  res.iterations = it;
  res.residual = std::abs(derivative(q, res.alpha_opt));
  res.grid_consistent = grid_check([&](double a) { return rate(q, a); }, kAlphaLow, kAlphaHigh,
                                   rate(q, res.alpha_opt));
  return res;
}

OptResult optimize_alpha_ergodic_constrained(const SystemConfig& cfg, double P_R_mw) {
  const PowerInverse inv = inverse_power(cfg, P_R_mw);
  OptResult res = optimize_alpha_ergodic(cfg);
  if (inv.saturated || expected_power(cfg, res.alpha_opt) < P_R_mw) return res;

  const double q = signal_to_noise_slope(cfg);
  res.alpha_opt = inv.alpha;
  res.binding = Binding::PowerConstrained;
  res.objective_value = ergodic_rate(cfg, inv.alpha);
  res.residual = std::abs(expected_power(cfg, inv.alpha) - P_R_mw);
  res.grid_consistent = grid_check([&](double a) { return rate(q, a); }, kAlphaLow,
                                   std::max(kAlphaLow, inv.alpha), rate(q, inv.alpha));
  return res;
}

OptResult optimize_alpha_effective(const SystemConfig& cfg) {
  if (!(cfg.r_v > 0.0)) throw DomainError("optimize_alpha_effective: r_v must be > 0");
  auto objective = [&](double a) { return effective_rate(cfg, a); };

  int best_i = 1;
  double best = -INFINITY;
  for (int i = 1; i <= kEffectiveGrid; ++i) {
    const double v = objective(static_cast<double>(i) / (kEffectiveGrid + 1));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  const double lo = static_cast<double>(best_i - 1) / (kEffectiveGrid + 1);
  const double hi = static_cast<double>(best_i + 1) / (kEffectiveGrid + 1);
  GoldenResult g = golden_section_maximize(objective, std::max(lo, kAlphaLow),
                                           std::min(hi, kAlphaHigh), 1e-3 * kAlphaTolerance);

  OptResult res;
  res.alpha_closed_form = 1.0 / (std::numbers::ln2 * cfg.r_v + 1.0);
  if (g.value >= best) {
    res.alpha_opt = g.x;
    res.objective_value = g.value;
  } else {
    res.alpha_opt = static_cast<double>(best_i) / (kEffectiveGrid + 1);
    res.objective_value = best;
  }
  res.iterations = kEffectiveGrid + g.iterations;
  const double h = std::min({1e-6, res.alpha_opt / 2.0, (1.0 - res.alpha_opt) / 2.0});
  res.residual = std::abs(objective(res.alpha_opt + h) - objective(res.alpha_opt - h)) / (2.0 * h);
  res.grid_consistent = grid_check(objective, kAlphaLow, kAlphaHigh, res.objective_value);
  return res;
}

OptResult optimize_alpha_effective_constrained(const SystemConfig& cfg, double P_R_mw) {
  const PowerInverse inv = inverse_power(cfg, P_R_mw);
  OptResult res = optimize_alpha_effective(cfg);
  if (inv.saturated || expected_power(cfg, res.alpha_opt) <= P_R_mw) return res;

  res.alpha_opt = inv.alpha;
  res.binding = Binding::PowerConstrained;
  res.objective_value = effective_rate(cfg, inv.alpha);
  res.residual = std::abs(expected_power(cfg, inv.alpha) - P_R_mw);
  res.grid_consistent = grid_check([&](double a) { return effective_rate(cfg, a); }, kAlphaLow,
                                   std::max(kAlphaLow, inv.alpha), res.objective_value);
  return res;
}

}  // namespace riswpc
