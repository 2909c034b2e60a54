#include "riswpc/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "riswpc/errors.hpp"
#include "riswpc/ris.hpp"
#include "riswpc/special.hpp"

namespace riswpc {

namespace {

constexpr double kPi = std::numbers::pi;

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError(std::string(who) + ": alpha must lie in (0, 1)");
}

}  // namespace

double GammaFit::log_pdf(double x) const {
  if (!(x > 0.0)) return -INFINITY;
  return (s - 1.0) * std::log(x) - x / r - s * std::log(r) - special::log_gamma(s);
}

double GammaFit::pdf(double x) const { return std::exp(log_pdf(x)); }

double GammaFit::cdf(double x) const { return special::gamma_p(s, x / r); }

ErgodicTerms ergodic_terms(const LinkParams& link, double alpha) {
  const PhaseErrorStats ph = phase_error_stats(link.b);
  const double pi_sinc_4 = kPi * ph.e_cos / 4.0;
  const double residual = 1.0 - pi_sinc_4 * pi_sinc_4;

  ErgodicTerms t;
  t.tau = ph.tau;
  t.t1 = link.zeta_p * link.zeta_f;
  t.t2 = link.zeta_p * std::sqrt(kPi * link.zeta_f);
  double cascade_sum = 0.0;
  double amplified = 0.0;
  for (std::size_t m = 0; m < link.elements(); ++m) {
    const double rho = link.rho[m];
    const double gh = link.zeta_g[m] * link.zeta_h[m];
    t.t3 += pi_sinc_4 * rho * std::sqrt(gh);
    t.t4 += rho * rho * link.zeta_p * gh * residual;
    cascade_sum += pi_sinc_4 * rho * std::sqrt(link.zeta_p * gh);
    amplified += rho * rho * link.zeta_g[m];
  }
  t.t5 = cascade_sum * cascade_sum;
  t.t6 = link.sigma_v2_mw * amplified + link.sigma_n2_mw;
  t.t7 = link.eta * link.P_p_mw * t.signal();
  t.nu1 = harvest_coefficient(link.eta, link.P_p_mw, alpha);
  return t;
}

ErgodicTerms ergodic_terms(const SystemConfig& cfg) { return ergodic_terms(link_params(cfg), cfg.alpha); }

double ergodic_rate(const ErgodicTerms& terms, double eta, double P_p_mw, double alpha) {
  check_alpha(alpha, "ergodic_rate");
  const double nu1 = harvest_coefficient(eta, P_p_mw, alpha);
  return (1.0 - alpha) * std::log2(1.0 + nu1 * terms.signal() / terms.t6);
}

double ergodic_rate(const SystemConfig& cfg, double alpha) {
  check_alpha(alpha, "ergodic_rate");
  const LinkParams link = link_params(cfg);
  return ergodic_rate(ergodic_terms(link, alpha), link.eta, link.P_p_mw, alpha);
}

GammaFit gamma_fit(const SystemConfig& cfg) {
  const LinkParams link = link_params(cfg);
  const PhaseErrorStats ph = phase_error_stats(link.b);
  const double pi_sinc_4 = kPi * ph.e_cos / 4.0;
  GammaFit fit;
  fit.mean_x = rayleigh_moment(link.zeta_f, 1);
  fit.var_x = link.zeta_f * (1.0 - kPi / 4.0);
  for (std::size_t m = 0; m < link.elements(); ++m) {
    const double rho = link.rho[m];
    const double gh = link.zeta_g[m] * link.zeta_h[m];
    fit.mean_x += pi_sinc_4 * rho * std::sqrt(gh);
    fit.var_x += rho * rho * gh * (ph.e_cos2 - pi_sinc_4 * pi_sinc_4);
  }
  if (!(fit.var_x > 0.0) || !(fit.mean_x > 0.0))
    throw DegenerateError("gamma_fit: amplitude has zero mean or variance");
  fit.s = fit.mean_x * fit.mean_x / fit.var_x;
  fit.r = fit.var_x / fit.mean_x;
  return fit;
}

double outage_kappa(double r_v, double alpha, bool literal) {
  const double exponent = r_v / (1.0 - alpha);
  return literal ? std::exp2(exponent - 1.0) : std::exp2(exponent) - 1.0;
}

OutageIntegral outage_integral(const SystemConfig& cfg, double alpha) {
  check_alpha(alpha, "outage_probability");
  const LinkParams link = link_params(cfg);
  const ErgodicTerms terms = ergodic_terms(link, alpha);
  OutageIntegral oi;
  oi.kappa = outage_kappa(cfg.r_v, alpha, cfg.kappa_literal);
  oi.threshold = oi.kappa * terms.t6 / (terms.nu1 * link.zeta_p);
  oi.fit = gamma_fit(cfg);
  return oi;
}

double outage_probability(const SystemConfig& cfg, double alpha) {
  const OutageIntegral oi = outage_integral(cfg, alpha);
  if (oi.kappa == 0.0) return 0.0;
  if (cfg.quadrature_points < 2) throw DomainError("outage_probability: needs at least 2 nodes");

  const int nodes = cfg.quadrature_points;
  const double scale =
      cfg.quadrature_substitution == QuadratureSubstitution::MeanScaled ? oi.fit.mean_x : 1.0;
  const double base_weight = scale * (kPi / nodes) * (kPi / 4.0);
  double covered = 0.0;
  for (int u = 1; u <= nodes; ++u) {
    const double angle = (2.0 * u - 1.0) * kPi / (2.0 * nodes);
    const double x = std::cos(angle);
    const double theta = (kPi / 4.0) * (x + 1.0);
    const double sec = 1.0 / std::cos(theta);
    const double t = scale * std::tan(theta);
    if (!(t > 0.0) || std::isinf(t)) continue;
    // sqrt(1 - x^2) == sin(angle) on (0, pi)
    const double weight = base_weight * sec * sec * std::sin(angle);
    covered += weight * std::exp(-oi.threshold / (t * t) + oi.fit.log_pdf(t));
  }
  return std::clamp(1.0 - covered, 0.0, 1.0);
}

double effective_rate(const SystemConfig& cfg, double alpha) {
  return (1.0 - outage_probability(cfg, alpha)) * cfg.r_v;
}

ApproximationReport approximation_diagnostics(const SystemConfig& cfg, double alpha, std::int64_t n,
                                              std::uint64_t seed, McOptions opts) {
  check_alpha(alpha, "approximation_diagnostics");
  if (n < 2) throw DomainError("approximation_diagnostics: needs at least 2 samples");
  const LinkParams link = link_params(cfg);
  const double nu1 = harvest_coefficient(link.eta, link.P_p_mw, alpha);

  struct Acc {
    RunningStats sum;
    RunningStats denom;
    void merge(const Acc& o) {
      sum.merge(o.sum);
      denom.merge(o.denom);
    }
  };
  auto acc = mc::run_chunked<Acc>(link, n, seed, opts, [&](const ChannelDraw& d, Acc& a) {
    double re = d.f_mag;
    double im = 0.0;
    double amplified = 0.0;
    for (std::size_t m = 0; m < link.elements(); ++m) {
      const double cascade = link.rho[m] * d.g_mag[m] * d.h_mag[m];
      re += cascade * std::cos(d.phase_err[m]);
      im += cascade * std::sin(d.phase_err[m]);
      amplified += link.rho[m] * link.rho[m] * d.g_mag[m] * d.g_mag[m];
    }
    const double x = nu1 * d.h_p_mag * d.h_p_mag * (re * re + im * im);
    const double y = link.sigma_v2_mw * amplified + link.sigma_n2_mw;
    a.sum.push(x + y);
    a.denom.push(y);
  });

  auto ratio = [](const RunningStats& s) {
    const double m = s.mean();
    return m != 0.0 ? s.variance() / (m * m) : 0.0;
  };
  return {ratio(acc.sum), ratio(acc.denom), acc.sum.count(), seed};
}

}  // namespace riswpc
