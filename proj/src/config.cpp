#include "riswpc/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>

#include "riswpc/errors.hpp"

namespace riswpc {

namespace {

std::string trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

double parse_double(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || std::isnan(v))
    throw ValidationError(key, "expected a number, got '" + text + "'");
  return v;
}

std::int64_t parse_int(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
    // accept integral values written in floating notation, e.g. 1e5
    double d = parse_double(key, text);
    if (d != std::floor(d) || std::abs(d) > 9.0e15)
      throw ValidationError(key, "expected an integer, got '" + text + "'");
    return static_cast<std::int64_t>(d);
  }
  return v;
}

int parse_small_int(const std::string& key, const std::string& text) {
  auto v = parse_int(key, text);
  if (v < -1000000000 || v > 1000000000) throw ValidationError(key, "integer out of range");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& text) {
  auto t = lower(text);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ValidationError(key, "expected true/false, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, trim(item)));
  if (out.empty()) throw ValidationError(key, "empty list");
  return out;
}

std::string fmt_double(double v) {
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_list(const std::vector<double>& v) {
  if (v.empty()) return "";
  if (std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); }))
    return fmt_double(v.front());
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += fmt_double(v[i]);
  }
  return out;
}

void broadcast(std::vector<double>& v, int elements, double fallback) {
  double fill = v.empty() ? fallback : v.back();
  v.resize(static_cast<std::size_t>(std::max(elements, 0)), fill);
}

// Vector-valued keys are applied after M so that a scalar broadcasts to the
// final element count.
void assign_vector(std::vector<double>& dst, const std::string& key, const std::string& text,
                   int elements) {
  auto list = parse_list(key, text);
  if (list.size() == 1) {
    dst.assign(static_cast<std::size_t>(std::max(elements, 0)), list.front());
  } else if (static_cast<int>(list.size()) == elements) {
    dst = std::move(list);
  } else {
    throw ValidationError(key, "expected 1 or M=" + std::to_string(elements) + " values, got " +
                                   std::to_string(list.size()));
  }
}

using Setter = std::function<void(SystemConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& scalar_setters() {
  static const std::map<std::string, Setter> setters = {
      {"P_p_dbm", [](auto& c, auto& k, auto& v) { c.P_p_dbm = parse_double(k, v); }},
      {"eta", [](auto& c, auto& k, auto& v) { c.eta = parse_double(k, v); }},
      {"tau_c", [](auto& c, auto& k, auto& v) { c.tau_c = parse_double(k, v); }},
      {"alpha", [](auto& c, auto& k, auto& v) { c.alpha = parse_double(k, v); }},
      {"rho_max", [](auto& c, auto& k, auto& v) { c.rho_max = parse_double(k, v); }},
      {"b", [](auto& c, auto& k, auto& v) { c.b = parse_small_int(k, v); }},
      {"d_p", [](auto& c, auto& k, auto& v) { c.d_p = parse_double(k, v); }},
      {"d_f", [](auto& c, auto& k, auto& v) { c.d_f = parse_double(k, v); }},
      {"epsilon", [](auto& c, auto& k, auto& v) { c.epsilon = parse_double(k, v); }},
      {"sigma_v2_dbm", [](auto& c, auto& k, auto& v) { c.sigma_v2_dbm = parse_double(k, v); }},
      {"sigma_n2_dbm", [](auto& c, auto& k, auto& v) { c.sigma_n2_dbm = parse_double(k, v); }},
      {"r_v", [](auto& c, auto& k, auto& v) { c.r_v = parse_double(k, v); }},
      {"P1_dbm", [](auto& c, auto& k, auto& v) { c.P1_dbm = parse_double(k, v); }},
      {"P2_dbm", [](auto& c, auto& k, auto& v) { c.P2_dbm = parse_double(k, v); }},
      {"P_R_mw", [](auto& c, auto& k, auto& v) { c.P_R_mw = parse_double(k, v); }},
      {"quadrature_points",
       [](auto& c, auto& k, auto& v) { c.quadrature_points = parse_small_int(k, v); }},
      {"mc_samples", [](auto& c, auto& k, auto& v) { c.mc_samples = parse_int(k, v); }},
      {"kappa_literal", [](auto& c, auto& k, auto& v) { c.kappa_literal = parse_bool(k, v); }},
      {"ris_mode",
       [](auto& c, auto& k, auto& v) {
         auto t = lower(v);
         if (t == "active") c.ris_mode = RisMode::Active;
         else if (t == "passive") c.ris_mode = RisMode::Passive;
         else throw ValidationError(k, "expected active|passive, got '" + v + "'");
       }},
      {"power_mode",
       [](auto& c, auto& k, auto& v) {
         auto t = lower(v);
         if (t == "paper_literal") c.power_mode = PowerMode::PaperLiteral;
         else if (t == "physical") c.power_mode = PowerMode::Physical;
         else throw ValidationError(k, "expected paper_literal|physical, got '" + v + "'");
       }},
      {"quadrature_substitution",
       [](auto& c, auto& k, auto& v) {
         auto t = lower(v);
         if (t == "mean_scaled") c.quadrature_substitution = QuadratureSubstitution::MeanScaled;
         else if (t == "unit") c.quadrature_substitution = QuadratureSubstitution::Unit;
         else throw ValidationError(k, "expected mean_scaled|unit, got '" + v + "'");
       }},
  };
  return setters;
}

}  // namespace

double SystemConfig::effective_rho(std::size_t m) const {
  return ris_mode == RisMode::Passive ? 1.0 : rho.at(m);
}

std::vector<double> SystemConfig::effective_rho() const {
  if (ris_mode == RisMode::Passive) return std::vector<double>(rho.size(), 1.0);
  return rho;
}

double SystemConfig::sigma_v2_mw() const {
  return ris_mode == RisMode::Passive ? 0.0 : dbm_to_linear(sigma_v2_dbm);
}

double SystemConfig::sigma_n2_mw() const { return dbm_to_linear(sigma_n2_dbm); }

double SystemConfig::P_p_mw() const { return dbm_to_linear(P_p_dbm); }

void SystemConfig::set_elements(int elements) {
  M = elements;
  broadcast(rho, elements, rho_max);
  broadcast(d_h, elements, 20.0);
  broadcast(d_g, elements, 20.0);
}

void SystemConfig::set_uniform_rho(double value) {
  rho.assign(static_cast<std::size_t>(std::max(M, 0)), value);
}

LinkParams link_params(const SystemConfig& cfg) {
  LinkParams p;
  p.P_p_mw = cfg.P_p_mw();
  p.eta = cfg.eta;
  p.sigma_v2_mw = cfg.sigma_v2_mw();
  p.sigma_n2_mw = cfg.sigma_n2_mw();
  p.P1_mw = dbm_to_linear(cfg.P1_dbm);
  p.P2_mw = dbm_to_linear(cfg.P2_dbm);
  p.zeta_p = path_loss(cfg.d_p, cfg.epsilon);
  p.zeta_f = path_loss(cfg.d_f, cfg.epsilon);
  if (cfg.rho.size() != cfg.d_h.size() || cfg.rho.size() != cfg.d_g.size())
    throw DimensionMismatch("per-element vectors rho, d_h, d_g differ in length");
  p.rho = cfg.effective_rho();
  p.zeta_h.reserve(cfg.d_h.size());
  p.zeta_g.reserve(cfg.d_g.size());
  for (double d : cfg.d_h) p.zeta_h.push_back(path_loss(d, cfg.epsilon));
  for (double d : cfg.d_g) p.zeta_g.push_back(path_loss(d, cfg.epsilon));
  p.b = cfg.b;
  return p;
}

double dbm_to_linear(double dbm) { return std::pow(10.0, dbm / 10.0); }

double linear_to_dbm(double mw) { return 10.0 * std::log10(mw); }

double path_loss(double distance, double epsilon) {
  if (!(distance > 0.0)) throw DomainError("path_loss: distance must be > 0");
  return std::pow(distance, -epsilon);
}

double harvest_coefficient(double eta, double P_p_mw, double alpha) {
  return eta * alpha * P_p_mw / (1.0 - alpha);
}

KeyValues parse_document(std::string_view text) {
  KeyValues kv;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto body = trim(line);
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
    auto key = trim(std::string_view(body).substr(0, eq));
    auto value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) throw ParseError(lineno, "missing key");
    if (value.empty()) throw ParseError(lineno, "missing value for '" + key + "'");
    if (!kv.emplace(key, value).second) throw ParseError(lineno, "duplicate key '" + key + "'");
  }
  return kv;
}

SystemConfig build_config(const KeyValues& values) {
  SystemConfig cfg;
  const auto& setters = scalar_setters();
  for (const auto& [key, value] : values) {
    if (key == "M" || key == "rho" || key == "d_h" || key == "d_g") continue;
    auto it = setters.find(key);
    if (it == setters.end()) throw ValidationError(key, "unknown key");
    it->second(cfg, key, value);
  }
  if (auto it = values.find("M"); it != values.end()) {
    int m = parse_small_int("M", it->second);
    if (m < 1) throw ValidationError("M", "must be >= 1");
    cfg.set_elements(m);
  }
  if (auto it = values.find("rho"); it != values.end()) assign_vector(cfg.rho, "rho", it->second, cfg.M);
  if (auto it = values.find("d_h"); it != values.end()) assign_vector(cfg.d_h, "d_h", it->second, cfg.M);
  if (auto it = values.find("d_g"); it != values.end()) assign_vector(cfg.d_g, "d_g", it->second, cfg.M);
  validate(cfg);
  return cfg;
}

SystemConfig load_config(std::string_view text) { return build_config(parse_document(text)); }

SystemConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_config(ss.str());
}

std::string format_config(const SystemConfig& c) {
  std::ostringstream out;
  auto put = [&](const char* key, const std::string& value) { out << key << " = " << value << '\n'; };
  put("P_p_dbm", fmt_double(c.P_p_dbm));
  put("eta", fmt_double(c.eta));
  put("tau_c", fmt_double(c.tau_c));
  put("alpha", fmt_double(c.alpha));
  put("M", std::to_string(c.M));
  put("rho", fmt_list(c.rho));
  put("rho_max", fmt_double(c.rho_max));
  put("b", std::to_string(c.b));
  put("d_p", fmt_double(c.d_p));
  put("d_f", fmt_double(c.d_f));
  put("d_h", fmt_list(c.d_h));
  put("d_g", fmt_list(c.d_g));
  put("epsilon", fmt_double(c.epsilon));
  put("sigma_v2_dbm", fmt_double(c.sigma_v2_dbm));
  put("sigma_n2_dbm", fmt_double(c.sigma_n2_dbm));
  put("r_v", fmt_double(c.r_v));
  put("P1_dbm", fmt_double(c.P1_dbm));
  put("P2_dbm", fmt_double(c.P2_dbm));
  put("P_R_mw", fmt_double(c.P_R_mw));
  put("ris_mode", to_string(c.ris_mode));
  put("quadrature_points", std::to_string(c.quadrature_points));
  put("mc_samples", std::to_string(c.mc_samples));
  put("kappa_literal", c.kappa_literal ? "true" : "false");
  put("power_mode", to_string(c.power_mode));
  put("quadrature_substitution", to_string(c.quadrature_substitution));
  return out.str();
}

void validate(const SystemConfig& c) {
  auto require = [](bool ok, const char* field, const char* what) {
    if (!ok) throw ValidationError(field, what);
  };
  require(std::isfinite(c.P_p_dbm), "P_p_dbm", "must be finite");
  require(c.eta > 0.0 && c.eta <= 1.0, "eta", "must lie in (0, 1]");
  require(c.tau_c > 0.0 && std::isfinite(c.tau_c), "tau_c", "must be > 0");
  require(c.alpha > 0.0 && c.alpha < 1.0, "alpha", "must lie in (0, 1)");
  require(c.M >= 1, "M", "must be >= 1");
  require(c.rho_max >= 0.0 && std::isfinite(c.rho_max), "rho_max", "must be >= 0");
  require(c.rho.size() == static_cast<std::size_t>(c.M), "rho", "length must equal M");
  for (double r : c.rho) require(r >= 0.0 && r <= c.rho_max, "rho", "each value must lie in [0, rho_max]");
  require(c.b >= 1 && c.b <= 52, "b", "must lie in [1, 52]");
  require(c.d_p > 0.0 && std::isfinite(c.d_p), "d_p", "must be > 0");
  require(c.d_f > 0.0 && std::isfinite(c.d_f), "d_f", "must be > 0");
  require(c.d_h.size() == static_cast<std::size_t>(c.M), "d_h", "length must equal M");
  require(c.d_g.size() == static_cast<std::size_t>(c.M), "d_g", "length must equal M");
  for (double d : c.d_h) require(d > 0.0 && std::isfinite(d), "d_h", "must be > 0");
  for (double d : c.d_g) require(d > 0.0 && std::isfinite(d), "d_g", "must be > 0");
  require(c.epsilon > 0.0 && std::isfinite(c.epsilon), "epsilon", "must be > 0");
  // -inf dBm is accepted and means a noiseless node.
  require(!std::isnan(c.sigma_v2_dbm) && c.sigma_v2_dbm < HUGE_VAL, "sigma_v2_dbm", "must be < +inf");
  require(!std::isnan(c.sigma_n2_dbm) && c.sigma_n2_dbm < HUGE_VAL, "sigma_n2_dbm", "must be < +inf");
  require(c.r_v >= 0.0 && std::isfinite(c.r_v), "r_v", "must be >= 0");
  require(!std::isnan(c.P1_dbm) && c.P1_dbm < HUGE_VAL, "P1_dbm", "must be < +inf");
  require(!std::isnan(c.P2_dbm) && c.P2_dbm < HUGE_VAL, "P2_dbm", "must be < +inf");
  require(c.P_R_mw > 0.0, "P_R_mw", "must be > 0");
  require(c.quadrature_points >= 2, "quadrature_points", "must be >= 2");
  require(c.mc_samples >= 1, "mc_samples", "must be >= 1");
}

const char* to_string(RisMode mode) { return mode == RisMode::Active ? "active" : "passive"; }

const char* to_string(PowerMode mode) {
  return mode == PowerMode::PaperLiteral ? "paper_literal" : "physical";
}

const char* to_string(QuadratureSubstitution sub) {
  return sub == QuadratureSubstitution::MeanScaled ? "mean_scaled" : "unit";
}

}  // namespace riswpc
