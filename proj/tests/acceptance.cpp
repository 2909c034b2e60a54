// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance               run every criterion
//   acceptance --criterion N run criterion N only
//
// Exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "riswpc/closedform.hpp"
#include "riswpc/montecarlo.hpp"
#include "riswpc/optimize.hpp"
#include "riswpc/power.hpp"
#include "riswpc/ris.hpp"
#include "riswpc/stats.hpp"

using namespace riswpc;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [" << what << "]";
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// 1. Closed-form ergodic rate against Monte Carlo at the reference point.
void ergodic_vs_mc(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const SystemConfig cfg;
  for (double alpha : {0.1, 0.419, 0.9}) {
    const double cf = ergodic_rate(cfg, alpha);
    const Estimate mc = mc_ergodic_rate(cfg, alpha, 100000, 1);
    const double gap = std::abs(cf - mc.value);
    const double rel = gap / mc.value;
    o.detail << " alpha=" << alpha << " cf=" << fmt(cf) << " mc=" << fmt(mc.value) << " rel=" << fmt(rel);
    o.require(rel <= 0.05, "relative gap > 0.05 at alpha=" + fmt(alpha));
    o.require(gap <= std::max(0.05 * mc.value, 3.0 * mc.std_error), "outside band at alpha=" + fmt(alpha));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail << " runtime=" << fmt(secs) << "s";
  o.require(secs < 10.0, "runtime >= 10 s");
}

// 2. Closed-form outage against Monte Carlo and adaptive integration.
void outage_vs_mc(Outcome& o) {
  for (int b : {4, 1}) {
    const double tolerance = b == 4 ? 0.03 : 0.06;
    double worst_mc = 0.0;
    double worst_quad = 0.0;
    for (int m : {16, 32}) {
      for (double pp = 0.0; pp <= 30.0; pp += 5.0) {
        for (double alpha : {0.1, 0.419}) {
          SystemConfig cfg;
          cfg.set_elements(m);
          cfg.b = b;
          cfg.P_p_dbm = pp;
          const double cf = outage_probability(cfg, alpha);
          const Estimate mc = mc_outage(cfg, alpha, 100000, 1);
          worst_mc = std::max(worst_mc, std::abs(cf - mc.value));
          const OutageIntegral oi = outage_integral(cfg, alpha);
          worst_quad = std::max(worst_quad, std::abs(cf - oracle::outage_integral(oi.threshold, oi.fit.s, oi.fit.r)));
        }
      }
    }
    o.detail << " b=" << b << " max|cf-mc|=" << fmt(worst_mc) << " max|cf-adaptive|=" << fmt(worst_quad);
    o.require(worst_mc <= tolerance, "Monte Carlo gap at b=" + std::to_string(b));
    o.require(worst_quad <= 1e-6, "quadrature gap at b=" + std::to_string(b));
  }
}

// 3. Sixteen active elements beat thirty-two passive ones at 20 dBm.
void sixteen_beats_thirty_two(Outcome& o) {
  for (double alpha : {0.1, 0.419}) {
    SystemConfig active;
    active.set_elements(16);
    SystemConfig passive;
    passive.set_elements(32);
    passive.ris_mode = RisMode::Passive;
    const double a_cf = outage_probability(active, alpha);
    const double p_cf = outage_probability(passive, alpha);
    const double a_mc = mc_outage(active, alpha, 100000, 1).value;
    const double p_mc = mc_outage(passive, alpha, 100000, 1).value;
    o.detail << " alpha=" << alpha << " cf " << fmt(a_cf) << "<=" << fmt(p_cf) << " mc " << fmt(a_mc) << "<="
             << fmt(p_mc);
    o.require(a_cf <= p_cf, "closed form");
    o.require(a_mc <= p_mc, "Monte Carlo");
  }
}

// 4. Closed-form effective-rate optimum and its invariance.
void effective_closed_form(Outcome& o) {
  const double expected = 1.0 / (1.0 + 2.0 * std::numbers::ln2);
  const SystemConfig base;
  const double got = *optimize_alpha_effective(base).alpha_closed_form;
  o.detail << " alpha_dagger=" << std::to_string(got);
  o.require(std::abs(got - expected) <= 1e-12, "value");
  std::vector<SystemConfig> variants(4, base);
  variants[0].set_elements(9);
  variants[1].P_p_dbm = 3.0;
  variants[2].b = 1;
  variants[3].d_p = 7.0;
  variants[3].d_f = 55.0;
  variants[3].d_h.assign(36, 12.0);
  for (const auto& v : variants) o.require(*optimize_alpha_effective(v).alpha_closed_form == got, "invariance");
}

// 5. Phase-error moment identities.
void phase_identities(Outcome& o) {
  double worst_sum = 0.0;
  double worst_recombine = 0.0;
  for (int b = 1; b <= 10; ++b) {
    const PhaseErrorStats st = phase_error_stats(b);
    worst_sum = std::max(worst_sum, std::abs(st.e_cos2 + st.e_sin2 - 1.0));
    const double s = kPi * st.e_cos / 4.0;
    const double sinc = std::sin(st.tau) / st.tau;
    worst_recombine = std::max(worst_recombine, std::abs((st.e_cos2 - s * s) + st.e_sin2 -
                                                         (1.0 - kPi * kPi * sinc * sinc / 16.0)));
  }
  o.detail << " max|sum-1|=" << fmt(worst_sum) << " max|recombined-target|=" << fmt(worst_recombine);
  o.require(worst_sum <= 1e-12, "cos^2 + sin^2");
  o.require(worst_recombine <= 1e-12, "recombination");
}

// 6. Gamma moment fit.
void gamma_fit_checks(Outcome& o) {
  const SystemConfig cfg;
  const GammaFit fit = gamma_fit(cfg);
  o.require(std::abs(fit.s * fit.r - fit.mean_x) <= 1e-12 * fit.mean_x, "s r = mean");
  o.require(std::abs(fit.s * fit.r * fit.r - fit.var_x) <= 1e-12 * fit.var_x, "s r^2 = var");

  const LinkParams link = link_params(cfg);
  Rng rng(mc::chunk_seed(6, 0));
  ChannelDraw d;
  std::vector<double> xs(1000000);
  RunningStats stats;
  for (double& x : xs) {
    sample_realization(link, rng, d);
    x = d.f_mag;
    for (std::size_t m = 0; m < d.elements(); ++m) x += link.rho[m] * d.g_mag[m] * d.h_mag[m] * std::cos(d.phase_err[m]);
    stats.push(x);
  }
  const double z_mean = std::abs(stats.mean() - fit.mean_x) / stats.mean_stderr();
  const double z_var = std::abs(stats.variance() - fit.var_x) / stats.variance_stderr();
  o.require(z_mean <= 3.0, "mean");
  o.require(z_var <= 3.0, "variance");
  std::sort(xs.begin(), xs.end());
  double worst = 0.0;
  for (int k = 1; k <= 9; ++k) worst = std::max(worst, std::abs(fit.cdf(xs[xs.size() * k / 10]) - k / 10.0));
  o.require(worst <= 0.02, "deciles");
  o.detail << " z_mean=" << fmt(z_mean) << " z_var=" << fmt(z_var) << " max decile gap=" << fmt(worst);
}

// 7. Cascade moments.
void cascade_checks(Outcome& o) {
  const double rho = 6.0, zg = 1.25e-4, zh = 1.25e-4;
  Rng rng(mc::chunk_seed(7, 0));
  std::array<RunningStats, 4> powers;
  SystemConfig one;
  one.set_elements(1);
  const LinkParams link = link_params(one);
  ChannelDraw d;
  for (int i = 0; i < 1000000; ++i) {
    sample_realization(link, rng, d);
    const double c = rho * d.g_mag[0] * d.h_mag[0];
    double p = 1.0;
    for (auto& s : powers) {
      p *= c;
      s.push(p);
    }
  }
  for (int n = 1; n <= 4; ++n) {
    const double value = cascade_moment(n, rho, zg, zh);
    const double rel = std::abs(value / oracle::cascade_moment(n, rho, zg, zh) - 1.0);
    const RunningStats& s = powers[n - 1];
    const double z = std::abs(s.mean() - value) / s.mean_stderr();
    o.detail << " n=" << n << " rel=" << fmt(rel) << " z=" << fmt(z);
    o.require(rel <= 1e-6, "integration n=" + std::to_string(n));
    o.require(z <= 3.0, "sampling n=" + std::to_string(n));
  }
}

// 8. Power model.
void power_checks(Outcome& o) {
  const SystemConfig cfg;
  bool increasing = true;
  double prev = -INFINITY;
  for (int i = 1; i <= 100; ++i) {
    const double p = expected_power(cfg, i / 101.0);
    increasing = increasing && p > prev;
    prev = p;
  }
  o.require(increasing, "monotone");
  double worst = 0.0;
  for (int i = 1; i <= 99; ++i) {
    const double a = i / 100.0;
    worst = std::max(worst, std::abs(inverse_power(cfg, expected_power(cfg, a)).alpha - a));
  }
  o.require(worst <= 1e-9, "inverse round trip");
  double worst_z = 0.0;
  for (double alpha : {0.1, 0.5, 0.9}) {
    const Estimate e = mc_expected_power(cfg, alpha, 1000000, 8);
    worst_z = std::max(worst_z, std::abs(e.value - expected_power(cfg, alpha)) / e.std_error);
  }
  o.require(worst_z <= 3.0, "Monte Carlo mean");
  o.detail << " max round-trip error=" << fmt(worst) << " max z=" << fmt(worst_z);
}

// 9. Optimizers.
void optimizer_checks(Outcome& o) {
  const SystemConfig cfg;
  double worst_fd = 0.0;
  for (int i = 1; i <= 9; ++i) {
    const double a = i / 10.0;
    const double h = 1e-6;
    const double fd = (ergodic_rate(cfg, a + h) - ergodic_rate(cfg, a - h)) / (2.0 * h);
    worst_fd = std::max(worst_fd, std::abs(ergodic_rate_derivative(cfg, a) / fd - 1.0));
  }
  o.require(worst_fd <= 1e-4, "derivative");
  const OptResult star = optimize_alpha_ergodic(cfg);
  o.require(star.residual <= 1e-6, "stationarity");

  auto grid = [&](auto objective) {
    double best_a = 0.0, best_v = -INFINITY;
    for (int i = 1; i <= 10000; ++i) {
      const double a = i / 10001.0;
      if (expected_power(cfg, a) > cfg.P_R_mw) continue;
      const double v = objective(a);
      if (v > best_v) {
        best_v = v;
        best_a = a;
      }
    }
    return std::pair{best_a, best_v};
  };
  const OptResult ce = optimize_alpha_ergodic_constrained(cfg, cfg.P_R_mw);
  const auto [ge_a, ge_v] = grid([&](double a) { return ergodic_rate(cfg, a); });
  const OptResult cr = optimize_alpha_effective_constrained(cfg, cfg.P_R_mw);
  const auto [gr_a, gr_v] = grid([&](double a) { return effective_rate(cfg, a); });
  o.require(std::abs(ce.alpha_opt - ge_a) <= 1e-4 && std::abs(ce.objective_value - ge_v) <= 1e-4,
            "constrained ergodic vs grid");
  o.require(std::abs(cr.alpha_opt - gr_a) <= 1e-4 && std::abs(cr.objective_value - gr_v) <= 1e-4,
            "constrained effective vs grid");
  o.detail << " max fd rel=" << fmt(worst_fd) << " residual=" << fmt(star.residual)
           << " ergodic dalpha=" << fmt(std::abs(ce.alpha_opt - ge_a))
           << " effective dalpha=" << fmt(std::abs(cr.alpha_opt - gr_a));
}

// 10. Monotone trends across the transmit-power grid.
void trend_checks(Outcome& o) {
  std::array<double, 3> prev{-1.0, -1.0, -1.0};
  bool in_power = true, in_bits = true, active_wins = true;
  for (double pp = 0.0; pp <= 30.0; pp += 2.0) {
    std::array<double, 3> rates{};
    const std::array<int, 3> bits{1, 4, 16};
    for (int k = 0; k < 3; ++k) {
      SystemConfig c;
      c.P_p_dbm = pp;
      c.b = bits[k];
      rates[k] = ergodic_rate(c, c.alpha);
      in_power = in_power && rates[k] > prev[k];
    }
    in_bits = in_bits && rates[0] < rates[1] && rates[1] < rates[2];
    SystemConfig passive;
    passive.P_p_dbm = pp;
    passive.ris_mode = RisMode::Passive;
    active_wins = active_wins && rates[1] > ergodic_rate(passive, passive.alpha);
    prev = rates;
  }
  o.require(in_power, "increasing in P_p");
  o.require(in_bits, "increasing in b");
  o.require(active_wins, "active above passive");
}

// 11. Byte-identical reruns of the command-line tool.
void reproducibility(Outcome& o) {
  auto capture = [](const std::string& args) {
    const std::string cmd = std::string(RISWPC_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    if (!pipe) return out;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    pclose(pipe);
    return out;
  };
  const std::vector<std::string> commands = {
      "sweep --variable P_p_dbm --values 0:30:5 --outputs ergodic_cf,ergodic_mc,outage_cf,outage_mc,power --samples 20000 --seed 3",
      "figure fig3 --samples 5000 --seed 9",
      "figure fig4",
      "compare --samples 20000 --seed 2",
      "mc --samples 20000 --seed 11",
      "optimize",
  };
  for (const auto& c : commands) {
    const std::string first = capture(c);
    const std::string second = capture(c + " --threads 1");
    o.require(!first.empty() && first == second, c);
  }
  o.detail << " commands=" << commands.size();
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "closed-form vs Monte Carlo ergodic rate", ergodic_vs_mc},
      {2, "closed-form vs Monte Carlo outage, quadrature accuracy", outage_vs_mc},
      {3, "16 active elements vs 32 passive at 20 dBm", sixteen_beats_thirty_two},
      {4, "closed-form effective-rate optimum", effective_closed_form},
      {5, "phase-error moment identities", phase_identities},
      {6, "gamma moment fit", gamma_fit_checks},
      {7, "cascade moments", cascade_checks},
      {8, "power model", power_checks},
      {9, "optimizers", optimizer_checks},
      {10, "monotone rate trends", trend_checks},
      {11, "reproducible command output", reproducibility},
  };
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--criterion") only = std::atoi(argv[i + 1]);

  int failed = 0;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    Outcome o;
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("C%-2d %s  %s:%s\n", c.id, o.pass ? "PASS" : "FAIL", c.name, o.detail.str().c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed ? 1 : 0;
}
