#pragma once

namespace riswpc::special {

/// ln Gamma(x) for x > 0 via the Lanczos approximation (g = 7, 9 terms);
/// relative error below 1e-13 on (0, 170].
double log_gamma(double x);

/// Gamma(x) for real x not a non-positive integer. Uses the same Lanczos
/// series, with reflection for x < 1/2.
double gamma(double x);

/// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s).
/// Power series for x < s + 1, Lentz continued fraction otherwise.
double gamma_p(double s, double x);

}  // namespace riswpc::special
