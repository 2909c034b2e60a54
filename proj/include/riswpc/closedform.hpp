#pragma once

#include <cstdint>

#include "riswpc/config.hpp"
#include "riswpc/montecarlo.hpp"

namespace riswpc {

/// Closed-form aggregates of the approximated ergodic rate.
///
/// With sinc = sin(tau)/tau and kappa_m = rho_m sqrt(zeta_g zeta_h):
///   t1 = zeta_p zeta_f
///   t2 = zeta_p sqrt(pi zeta_f)
///   t3 = sum (pi/4) sinc kappa_m
///   t4 = sum zeta_p kappa_m^2 (1 - (pi^2/16) sinc^2)
///   t5 = zeta_p t3^2
///   t6 = sigma_v^2 sum rho_m^2 zeta_g + sigma_n^2
///   t7 = eta P_p (t1 + t2 t3 + t4 + t5)
struct ErgodicTerms {
  double t1 = 0.0;
  double t2 = 0.0;
  double t3 = 0.0;
  double t4 = 0.0;
  double t5 = 0.0;
  double t6 = 0.0;
  double t7 = 0.0;
  double tau = 0.0;
  double nu1 = 0.0;  ///< harvest coefficient at the config's alpha, mW

  /// E{T1 + T2} = t1 + t2 t3 + t4 + t5.
  double signal() const { return t1 + t2 * t3 + t4 + t5; }
};

/// Gamma(shape s, scale r) matched to the mean and variance of
/// X = |f| + sum rho |g| |h| cos(phi).
struct GammaFit {
  double s = 0.0;
  double r = 0.0;
  double mean_x = 0.0;
  double var_x = 0.0;

  double log_pdf(double x) const;
  double pdf(double x) const;
  double cdf(double x) const;
};

ErgodicTerms ergodic_terms(const SystemConfig& cfg);
ErgodicTerms ergodic_terms(const LinkParams& link, double alpha);

/// (1 - alpha) log2(1 + nu1(alpha) (t1 + t2 t3 + t4 + t5) / t6).
double ergodic_rate(const SystemConfig& cfg, double alpha);
double ergodic_rate(const ErgodicTerms& terms, double eta, double P_p_mw, double alpha);

/// Throws DegenerateError when the variance (or mean) is zero.
GammaFit gamma_fit(const SystemConfig& cfg);

/// SINR threshold of the outage event. Corrected: 2^(r_v/(1-alpha)) - 1;
/// literal: 2^(r_v/(1-alpha) - 1).
double outage_kappa(double r_v, double alpha, bool literal);

/// Everything the outage integral depends on:
///   P_O = 1 - int_0^inf exp(-threshold / t^2) f_X(t; s, r) dt,
///   threshold = kappa t6 / (nu1 zeta_p).
struct OutageIntegral {
  double kappa = 0.0;
  double threshold = 0.0;
  GammaFit fit;
};

OutageIntegral outage_integral(const SystemConfig& cfg, double alpha);

/// Gauss-Chebyshev evaluation of the outage integral with cfg.quadrature_points
/// nodes under t = c tan(pi/4 (x + 1)). Node u has x_u = cos((2u-1) pi / 2U) and
/// weight c (pi/U)(pi/4) sec^2(pi/4 (x_u + 1)) sqrt(1 - x_u^2). The result is
/// clamped to [0, 1].
double outage_probability(const SystemConfig& cfg, double alpha);

/// (1 - P_O(alpha)) r_v.
double effective_rate(const SystemConfig& cfg, double alpha);

/// Monte Carlo moment ratios for x = nu1 (T1 + T2), y = T3 + sigma_n^2.
struct ApproximationReport {
  double sum_ratio = 0.0;          ///< V{x + y} / E^2{x + y}
  double denominator_ratio = 0.0;  ///< V{y} / E^2{y}
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};

ApproximationReport approximation_diagnostics(const SystemConfig& cfg, double alpha, std::int64_t n,
                                              std::uint64_t seed, McOptions opts = {});

}  // namespace riswpc
