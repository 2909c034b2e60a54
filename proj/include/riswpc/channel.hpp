#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "riswpc/config.hpp"

namespace riswpc {

/// Seedable random source with a platform-independent output stream.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// Uniform variates take the top 53 bits of one engine output, and every
/// other variate is built from those by explicit inversion, so no
/// implementation-defined std:: distribution is involved.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Unit-mean exponential, -log(1 - U).
  double exponential();

 private:
  std::mt19937_64 engine_;
};

/// One joint realization of the fading magnitudes and phase residuals.
/// Path loss is folded into the magnitudes.
struct ChannelDraw {
  double h_p_mag = 0.0;
  double f_mag = 0.0;
  std::vector<double> h_mag;
  std::vector<double> g_mag;
  std::vector<double> phase_err;

  std::size_t elements() const { return h_mag.size(); }
};

/// Draw |h_p|, |f|, then (|h_m|, |g_m|, phi_m) for m = 1..M, in that order.
///
/// A magnitude with path-loss coefficient zeta is sqrt(zeta * E) with E a
/// unit exponential, i.e. the modulus of CN(0, zeta). Phase residuals are
/// uniform on [-pi 2^-b, pi 2^-b).
ChannelDraw sample_realization(const SystemConfig& cfg, Rng& rng);
void sample_realization(const LinkParams& link, Rng& rng, ChannelDraw& out);

/// E|x|^n for x ~ CN(0, zeta): sqrt(pi zeta)/2 for n = 1, zeta for n = 2.
double rayleigh_moment(double zeta, int order);

}  // namespace riswpc
