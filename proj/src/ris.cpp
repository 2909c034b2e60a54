#include "riswpc/ris.hpp"

#include <cmath>
#include <numbers>

#include "riswpc/errors.hpp"
#include "riswpc/special.hpp"

namespace riswpc {

double phase_half_width(int b) {
  if (b < 1) throw DomainError("phase quantization needs b >= 1");
  return std::ldexp(std::numbers::pi, -b);
}

PhaseErrorStats phase_error_stats(int b) {
  PhaseErrorStats st;
  st.tau = phase_half_width(b);
  const double half_sinc2 = std::sin(2.0 * st.tau) / (4.0 * st.tau);
  st.e_cos = std::sin(st.tau) / st.tau;
  st.e_cos2 = half_sinc2 + 0.5;
  st.e_sin2 = 0.5 - half_sinc2;
  return st;
}

double quantize_phase(double theta, int b) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double step = 2.0 * phase_half_width(b);
  const double levels = std::ldexp(1.0, b);
  double wrapped = std::fmod(theta, two_pi);
  if (wrapped < 0.0) wrapped += two_pi;
  const double q = wrapped / step;
  double k = std::floor(q);
  const double frac = q - k;
  if (frac > 0.5) {
    k += 1.0;
  } else if (frac == 0.5 && k + 1.0 >= levels) {
    // tie between the top level and the wrap-around to 0: 0 is smaller
    k = levels;
  }
  if (k >= levels) k -= levels;
  return k * step;
}

double cascade_moment(int n, double rho, double zeta_g, double zeta_h) {
  if (n < 1) throw DomainError("cascade_moment: order must be >= 1");
  const double half = 0.5 * n;
  const double g = special::gamma(half + 1.0);
  return std::pow(rho, n) * std::pow(zeta_g, half) * std::pow(zeta_h, half) * g * g;
}

}  // namespace riswpc
