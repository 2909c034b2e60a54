#include "riswpc/montecarlo.hpp"

#include <cmath>

#include "riswpc/errors.hpp"
#include "riswpc/power.hpp"

namespace riswpc {

namespace {

void check_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError(std::string(who) + ": alpha must lie in (0, 1)");
}

void check_samples(std::int64_t n, std::int64_t minimum, const char* who) {
  if (n < minimum)
    throw DomainError(std::string(who) + ": needs at least " + std::to_string(minimum) + " samples");
}

struct CountAcc {
  std::int64_t hits = 0;
  std::int64_t n = 0;
  void merge(const CountAcc& o) {
    hits += o.hits;
    n += o.n;
  }
};

struct PairAcc {
  RunningStats first;
  RunningStats second;
  void merge(const PairAcc& o) {
    first.merge(o.first);
    second.merge(o.second);
  }
};

Estimate to_estimate(const RunningStats& s, std::uint64_t seed) {
  return {s.mean(), s.mean_stderr(), s.count(), seed};
}

struct SinrParts {
  double re = 0.0;
  double im = 0.0;
  double amplified = 0.0;  // sum rho^2 |g|^2
};

SinrParts sinr_parts(const LinkParams& link, const ChannelDraw& draw) {
  SinrParts p;
  p.re = draw.f_mag;
  for (std::size_t m = 0; m < link.elements(); ++m) {
    const double cascade = link.rho[m] * draw.g_mag[m] * draw.h_mag[m];
    p.re += cascade * std::cos(draw.phase_err[m]);
    p.im += cascade * std::sin(draw.phase_err[m]);
    const double rg = link.rho[m] * draw.g_mag[m];
    p.amplified += rg * rg;
  }
  return p;
}

double sinr(const LinkParams& link, const ChannelDraw& draw, double nu1) {
  const SinrParts p = sinr_parts(link, draw);
  const double num = nu1 * draw.h_p_mag * draw.h_p_mag * (p.re * p.re + p.im * p.im);
  if (num == 0.0) return 0.0;
  return num / (link.sigma_v2_mw * p.amplified + link.sigma_n2_mw);
}

}  // namespace

double simulate_sinr(const LinkParams& link, const ChannelDraw& draw, double alpha) {
  check_alpha(alpha, "simulate_sinr");
  if (draw.elements() != link.elements() || draw.g_mag.size() != link.elements() ||
      draw.phase_err.size() != link.elements())
    throw DimensionMismatch("simulate_sinr: draw dimensions do not match M=" +
                            std::to_string(link.elements()));
  return sinr(link, draw, harvest_coefficient(link.eta, link.P_p_mw, alpha));
}

double simulate_sinr(const SystemConfig& cfg, const ChannelDraw& draw, double alpha) {
  return simulate_sinr(link_params(cfg), draw, alpha);
}

Estimate mc_ergodic_rate(const SystemConfig& cfg, double alpha, std::int64_t n, std::uint64_t seed,
                         McOptions opts) {
  check_alpha(alpha, "mc_ergodic_rate");
  check_samples(n, 100, "mc_ergodic_rate");
  const LinkParams link = link_params(cfg);
  const double nu1 = harvest_coefficient(link.eta, link.P_p_mw, alpha);
  auto stats = mc::run_chunked<RunningStats>(link, n, seed, opts, [&](const ChannelDraw& d, RunningStats& acc) {
    acc.push((1.0 - alpha) * std::log2(1.0 + sinr(link, d, nu1)));
  });
  return to_estimate(stats, seed);
}

Estimate mc_outage(const SystemConfig& cfg, double alpha, std::int64_t n, std::uint64_t seed,
                   McOptions opts) {
  check_alpha(alpha, "mc_outage");
  check_samples(n, 100, "mc_outage");
  const LinkParams link = link_params(cfg);
  const double nu1 = harvest_coefficient(link.eta, link.P_p_mw, alpha);
  const double target = cfg.r_v;
  auto counts = mc::run_chunked<CountAcc>(link, n, seed, opts, [&](const ChannelDraw& d, CountAcc& acc) {
    ++acc.n;
    if ((1.0 - alpha) * std::log2(1.0 + sinr(link, d, nu1)) < target) ++acc.hits;
  });
  const double p = static_cast<double>(counts.hits) / static_cast<double>(counts.n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(counts.n)), counts.n, seed};
}

MomentEstimate mc_moments_x(const SystemConfig& cfg, std::int64_t n, std::uint64_t seed,
                            McOptions opts) {
  check_samples(n, 1000, "mc_moments_x");
  const LinkParams link = link_params(cfg);
  auto stats = mc::run_chunked<RunningStats>(link, n, seed, opts, [&](const ChannelDraw& d, RunningStats& acc) {
    acc.push(sinr_parts(link, d).re);
  });
  return {stats.mean(), stats.variance(), stats.mean_stderr(), stats.variance_stderr(), stats.count(), seed};
}

ErgodicTermEstimate mc_ergodic_terms(const SystemConfig& cfg, std::int64_t n, std::uint64_t seed,
                                     McOptions opts) {
  check_samples(n, 100, "mc_ergodic_terms");
  const LinkParams link = link_params(cfg);
  auto acc = mc::run_chunked<PairAcc>(link, n, seed, opts, [&](const ChannelDraw& d, PairAcc& a) {
    const SinrParts p = sinr_parts(link, d);
    a.first.push(d.h_p_mag * d.h_p_mag * (p.re * p.re + p.im * p.im));
    a.second.push(link.sigma_v2_mw * p.amplified + link.sigma_n2_mw);
  });
  return {to_estimate(acc.first, seed), to_estimate(acc.second, seed)};
}

Estimate mc_expected_power(const SystemConfig& cfg, double alpha, std::int64_t n,
                           std::uint64_t seed, McOptions opts) {
  check_alpha(alpha, "mc_expected_power");
  check_samples(n, 100, "mc_expected_power");
  const LinkParams link = link_params(cfg);
  auto stats = mc::run_chunked<RunningStats>(link, n, seed, opts, [&](const ChannelDraw& d, RunningStats& acc) {
    acc.push(instantaneous_power(cfg, link, d, alpha));
  });
  return to_estimate(stats, seed);
}

}  // namespace riswpc
