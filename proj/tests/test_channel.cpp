#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "riswpc/channel.hpp"
#include "riswpc/errors.hpp"
#include "riswpc/stats.hpp"

using namespace riswpc;

namespace {

LinkParams unit_link(int elements, int b = 4) {
  LinkParams link;
  link.zeta_p = 1.0;
  link.zeta_f = 1.0;
  link.rho.assign(elements, 1.0);
  link.zeta_h.assign(elements, 1.0);
  link.zeta_g.assign(elements, 1.0);
  link.b = b;
  return link;
}

}  // namespace

TEST_CASE("uniform variates lie in [0, 1)") {
  Rng rng(7);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("fixed seed reproduces the draw sequence") {
  SystemConfig cfg;
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 10; ++i) {
    const ChannelDraw da = sample_realization(cfg, a);
    const ChannelDraw db = sample_realization(cfg, b);
    CHECK(da.h_p_mag == db.h_p_mag);
    CHECK(da.f_mag == db.f_mag);
    CHECK(da.h_mag == db.h_mag);
    CHECK(da.g_mag == db.g_mag);
    CHECK(da.phase_err == db.phase_err);
  }
  CHECK(sample_realization(cfg, a).f_mag != sample_realization(cfg, c).f_mag);
}

TEST_CASE("draws respect their supports") {
  SystemConfig cfg;
  cfg.b = 2;
  Rng rng(3);
  const double tau = std::numbers::pi / 4.0;
  for (int i = 0; i < 2000; ++i) {
    const ChannelDraw d = sample_realization(cfg, rng);
    REQUIRE(d.elements() == 36);
    CHECK(d.h_p_mag >= 0.0);
    CHECK(d.f_mag >= 0.0);
    for (std::size_t m = 0; m < d.elements(); ++m) {
      CHECK(d.h_mag[m] >= 0.0);
      CHECK(d.g_mag[m] >= 0.0);
      CHECK(d.phase_err[m] >= -tau);
      CHECK(d.phase_err[m] < tau);
    }
  }
}

TEST_CASE("zero path-loss coefficient gives identically zero magnitude") {
  LinkParams link = unit_link(2);
  link.zeta_f = 0.0;
  link.zeta_g[1] = 0.0;
  Rng rng(1);
  ChannelDraw d;
  for (int i = 0; i < 1000; ++i) {
    sample_realization(link, rng, d);
    CHECK(d.f_mag == 0.0);
    CHECK(d.g_mag[1] == 0.0);
  }
}

TEST_CASE("Rayleigh magnitudes match their moments over 1e6 draws") {
  const LinkParams link = unit_link(1);
  Rng rng(2024);
  ChannelDraw d;
  RunningStats f, f2, hp, h, g;
  std::vector<double> xs(4);
  double cross_fh = 0.0, cross_hg = 0.0, cross_phf = 0.0;
  constexpr int n = 1000000;
  for (int i = 0; i < n; ++i) {
    sample_realization(link, rng, d);
    f.push(d.f_mag);
    f2.push(d.f_mag * d.f_mag);
    hp.push(d.h_p_mag);
    h.push(d.h_mag[0]);
    g.push(d.g_mag[0]);
    cross_fh += d.f_mag * d.h_mag[0];
    cross_hg += d.h_mag[0] * d.g_mag[0];
    cross_phf += d.h_p_mag * d.f_mag;
  }
  const double mean1 = std::sqrt(std::numbers::pi) / 2.0;
  CHECK(std::abs(f.mean() - mean1) <= 3.0 * f.mean_stderr());
  CHECK(std::abs(f2.mean() - 1.0) <= 3.0 * f2.mean_stderr());
  CHECK(std::abs(f.variance() - (1.0 - std::numbers::pi / 4.0)) <= 3.0 * f.variance_stderr());

  auto corr = [&](double cross, const RunningStats& a, const RunningStats& b) {
    return (cross / n - a.mean() * b.mean()) / (a.stddev() * b.stddev());
  };
  CHECK(std::abs(corr(cross_fh, f, h)) <= 0.01);
  CHECK(std::abs(corr(cross_hg, h, g)) <= 0.01);
  CHECK(std::abs(corr(cross_phf, hp, f)) <= 0.01);
}

TEST_CASE("rayleigh_moment") {
  CHECK(rayleigh_moment(1.0, 1) == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-15));
  CHECK(rayleigh_moment(1.0, 2) == 1.0);
  CHECK(rayleigh_moment(0.0, 1) == 0.0);
  CHECK(rayleigh_moment(4.0, 1) == doctest::Approx(std::sqrt(std::numbers::pi)));
  CHECK_THROWS_AS(rayleigh_moment(1.0, 3), DomainError);
  CHECK_THROWS_AS(rayleigh_moment(1.0, 0), DomainError);
  CHECK_THROWS_AS(rayleigh_moment(-1.0, 1), DomainError);
}

TEST_CASE("RunningStats merge equals sequential accumulation") {
  Rng rng(9);
  RunningStats all, left, right;
  for (int i = 0; i < 5000; ++i) {
    const double x = rng.exponential();
    all.push(x);
    (i < 1234 ? left : right).push(x);
  }
  left.merge(right);
  CHECK(left.count() == all.count());
  CHECK(left.mean() == doctest::Approx(all.mean()).epsilon(1e-13));
  CHECK(left.variance() == doctest::Approx(all.variance()).epsilon(1e-12));
  CHECK(left.variance_stderr() == doctest::Approx(all.variance_stderr()).epsilon(1e-10));
}
