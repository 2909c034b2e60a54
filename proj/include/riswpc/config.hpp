#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace riswpc {

enum class RisMode { Active, Passive };

/// How the amplified-signal term of the RIS power draw is scaled.
/// PaperLiteral uses nu1 * ||Theta h||^2; Physical adds the |h_p|^2 that the
/// transmit power actually carries.
enum class PowerMode { PaperLiteral, Physical };

/// Scale c of the tangent substitution t = c * tan(pi/4 (x + 1)) used by the
/// outage quadrature. Unit is c = 1; MeanScaled sets c to the mean of the
/// Gamma-approximated amplitude.
enum class QuadratureSubstitution { MeanScaled, Unit };

/// Every physical and numerical parameter of the link.
///
/// Absolute powers are carried in dBm and converted on demand; distances are
/// in metres. Per-element vectors (rho, d_h, d_g) have length M.
struct SystemConfig {
  double P_p_dbm = 20.0;
  double eta = 0.8;
  double tau_c = 1.0;
  double alpha = 0.1;
  int M = 36;
  std::vector<double> rho = std::vector<double>(36, 6.0);
  double rho_max = 6.0;
  int b = 4;
  double d_p = 20.0;
  double d_f = 30.0;
  std::vector<double> d_h = std::vector<double>(36, 20.0);
  std::vector<double> d_g = std::vector<double>(36, 20.0);
  double epsilon = 3.0;
  double sigma_v2_dbm = -80.0;
  double sigma_n2_dbm = -80.0;
  double r_v = 2.0;
  double P1_dbm = -10.0;
  double P2_dbm = -10.0;
  double P_R_mw = 10.0;
  RisMode ris_mode = RisMode::Active;
  int quadrature_points = 100;
  std::int64_t mc_samples = 100000;
  bool kappa_literal = false;
  PowerMode power_mode = PowerMode::PaperLiteral;
  QuadratureSubstitution quadrature_substitution = QuadratureSubstitution::MeanScaled;

  bool operator==(const SystemConfig&) const = default;

  /// Amplification of element m after the passive-mode override.
  double effective_rho(std::size_t m) const;
  std::vector<double> effective_rho() const;
  /// RIS amplifier noise in mW; zero in passive mode.
  double sigma_v2_mw() const;
  double sigma_n2_mw() const;
  double P_p_mw() const;

  /// Resize the per-element vectors to `elements`, broadcasting each vector's
  /// last value (or its default when empty).
  void set_elements(int elements);
  void set_uniform_rho(double value);
};

/// Linear-unit view of a configuration: everything the evaluators consume.
struct LinkParams {
  double P_p_mw = 0.0;
  double eta = 0.0;
  double sigma_v2_mw = 0.0;
  double sigma_n2_mw = 0.0;
  double P1_mw = 0.0;
  double P2_mw = 0.0;
  double zeta_p = 0.0;
  double zeta_f = 0.0;
  std::vector<double> rho;
  std::vector<double> zeta_h;
  std::vector<double> zeta_g;
  int b = 1;

  std::size_t elements() const { return rho.size(); }
};

LinkParams link_params(const SystemConfig& cfg);

double dbm_to_linear(double dbm);
double linear_to_dbm(double mw);
/// Path-loss coefficient d^(-epsilon). Throws DomainError for d <= 0.
double path_loss(double distance, double epsilon);

/// Harvested-power coefficient eta * alpha * P_p / (1 - alpha), in mW.
double harvest_coefficient(double eta, double P_p_mw, double alpha);

/// Ordered key/value pairs of a config document.
using KeyValues = std::map<std::string, std::string>;

/// Parse the flat `key = value` format (see README). Throws ParseError.
KeyValues parse_document(std::string_view text);
/// Build a validated config from defaults overlaid with `values`.
SystemConfig build_config(const KeyValues& values);
SystemConfig load_config(std::string_view text);
SystemConfig load_config_file(const std::filesystem::path& path);
/// Serialize to a document that load_config reads back unchanged.
std::string format_config(const SystemConfig& cfg);

/// Throws ValidationError naming the first offending field.
void validate(const SystemConfig& cfg);

const char* to_string(RisMode mode);
const char* to_string(PowerMode mode);
const char* to_string(QuadratureSubstitution sub);

}  // namespace riswpc
