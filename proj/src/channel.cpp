#include "riswpc/channel.hpp"

#include <cmath>
#include <numbers>

#include "riswpc/errors.hpp"
#include "riswpc/ris.hpp"

namespace riswpc {

double Rng::exponential() { return -std::log1p(-uniform()); }

namespace {

double rayleigh(double zeta, Rng& rng) { return std::sqrt(zeta * rng.exponential()); }

}  // namespace

void sample_realization(const LinkParams& link, Rng& rng, ChannelDraw& out) {
  const std::size_t m_count = link.elements();
  const double tau = phase_half_width(link.b);
  out.h_mag.resize(m_count);
  out.g_mag.resize(m_count);
  out.phase_err.resize(m_count);
  out.h_p_mag = rayleigh(link.zeta_p, rng);
  out.f_mag = rayleigh(link.zeta_f, rng);
  for (std::size_t m = 0; m < m_count; ++m) {
    out.h_mag[m] = rayleigh(link.zeta_h[m], rng);
    out.g_mag[m] = rayleigh(link.zeta_g[m], rng);
    out.phase_err[m] = tau * (2.0 * rng.uniform() - 1.0);
  }
}

ChannelDraw sample_realization(const SystemConfig& cfg, Rng& rng) {
  ChannelDraw draw;
  sample_realization(link_params(cfg), rng, draw);
  return draw;
}

double rayleigh_moment(double zeta, int order) {
  if (zeta < 0.0) throw DomainError("rayleigh_moment: zeta must be >= 0");
  switch (order) {
    case 1:
      return std::sqrt(std::numbers::pi * zeta) / 2.0;
    case 2:
      return zeta;
    default:
      throw DomainError("rayleigh_moment: unsupported order " + std::to_string(order));
  }
}

}  // namespace riswpc
