#pragma once

namespace riswpc {

/// Quantization half-width pi * 2^-b of a b-bit phase shifter.
double phase_half_width(int b);

/// Moments of a phase residual uniform on [-tau, tau).
struct PhaseErrorStats {
  double tau = 0.0;
  double e_cos = 0.0;   ///< E{cos phi} = sin(tau) / tau
  double e_cos2 = 0.0;  ///< E{cos^2 phi} = sin(2 tau) / (4 tau) + 1/2
  double e_sin2 = 0.0;  ///< E{sin^2 phi} = 1/2 - sin(2 tau) / (4 tau)
};

PhaseErrorStats phase_error_stats(int b);

/// Nearest point of {0, 2pi/2^b, ..., (2^b - 1) 2pi/2^b} to theta (mod 2pi)
/// in circular distance. Ties go to the smaller phase value.
double quantize_phase(double theta, int b);

/// n-th moment of rho |g| |h| with independent Rayleigh |g|, |h| of
/// second moments zeta_g, zeta_h:
/// rho^n zeta_g^(n/2) zeta_h^(n/2) Gamma(n/2 + 1)^2.
double cascade_moment(int n, double rho, double zeta_g, double zeta_h);

}  // namespace riswpc
