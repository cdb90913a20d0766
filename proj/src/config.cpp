#include "ucfv/config.hpp"

#include <fstream>
#include <sstream>

namespace ucfv {

namespace {

double parse_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    throw ConfigError("config: key '" + key + "': not a number: '" + v + "'");
  }
}

int parse_int(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument("");
    return x;
  } catch (...) {
    throw ConfigError("config: key '" + key + "': not an integer: '" + v + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("config: key '" + key + "': not a boolean: '" + v + "'");
}

}  // namespace

NadMargins margin_preset(const std::string& name) {
  NadMargins m;  // default: alpha_m=1e-4, beta_m=0.5, alpha_w=0, beta_w=0
  if (name == "default") return m;
  if (name == "relaxed") {
    m.alpha_m = 1e-4;
    m.beta_m = 1e-1;
    m.alpha_w = 1e-4;
    m.beta_w = 1e-3;
    return m;
  }
  if (name == "linear-cwenoz") {
    m.alpha_m = 1e6;
    m.beta_m = 1e9;
    m.alpha_w = 0.0;
    m.beta_w = 0.0;
    return m;
  }
  if (name == "linear-muscl") {
    m.alpha_m = 0.0;
    m.beta_m = 0.0;
    m.alpha_w = 0.0;
    m.beta_w = 0.0;
    return m;
  }
  if (name == "muscl-cwenoz") {
    m.alpha_m = 0.0;
    m.beta_m = 0.0;
    m.alpha_w = 0.0;
    m.beta_w = -0.5;
    return m;
  }
  throw ConfigError("config: unknown margin preset '" + name + "'");
}

void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "case") {
    cfg.case_name = value;
  } else if (key == "order") {
    const int r = parse_int(key, value);
    if (r < 1 || r > 8) throw ConfigError("config: order must be in [1, 8], got " + value);
    cfg.order = r;
  } else if (key == "scheme") {
    if (value == "linear")
      cfg.mode = SchemeMode::Linear;
    else if (value == "muscl")
      cfg.mode = SchemeMode::Muscl;
    else if (value == "cwenoz")
      cfg.mode = SchemeMode::Cwenoz;
    else if (value == "hybrid")
      cfg.mode = SchemeMode::Hybrid;
    else if (value == "first")
      cfg.mode = SchemeMode::First;
    else
      throw ConfigError("config: unknown scheme '" + value + "'");
  } else if (key == "limiter") {
    if (value == "barth-jespersen")
      cfg.limiter = LimiterKind::BarthJespersen;
    else if (value == "venkatakrishnan")
      cfg.limiter = LimiterKind::Venkatakrishnan;
    else
      throw ConfigError("config: unknown limiter '" + value + "'");
  } else if (key == "margins") {
    cfg.margins = margin_preset(value);
  } else if (key == "alpha_m") {
    cfg.margins.alpha_m = parse_double(key, value);
  } else if (key == "beta_m") {
    cfg.margins.beta_m = parse_double(key, value);
  } else if (key == "alpha_w") {
    cfg.margins.alpha_w = parse_double(key, value);
  } else if (key == "beta_w") {
    cfg.margins.beta_w = parse_double(key, value);
  } else if (key == "kappa") {
    cfg.margins.kappa = parse_double(key, value);
  } else if (key == "deact_n") {
    cfg.margins.deact_n = parse_double(key, value);
  } else if (key == "lambda1p") {
    const double l = parse_double(key, value);
    if (!(l > 1.0)) throw ConfigError("config: lambda1p must exceed 1, got " + value);
    cfg.lambda1p = l;
  } else if (key == "epsilon") {
    const double e = parse_double(key, value);
    if (!(e > 0.0)) throw ConfigError("config: epsilon must be positive, got " + value);
    cfg.weno_eps = e;
  } else if (key == "b") {
    const double b = parse_double(key, value);
    if (!(b >= 1.0)) throw ConfigError("config: b must be >= 1, got " + value);
    cfg.weno_b = b;
  } else if (key == "venkat_kappa") {
    const double k = parse_double(key, value);
    if (!(k > 0.0)) throw ConfigError("config: venkat_kappa must be positive");
    cfg.venkat_kappa = k;
  } else if (key == "si_exponent") {
    if (value == "paper")
      cfg.si_exponent = SiExponent::Paper;
    else if (value == "legacy")
      cfg.si_exponent = SiExponent::Legacy;
    else
      throw ConfigError("config: si_exponent must be 'paper' or 'legacy'");
  } else if (key == "detect_every_stage") {
    cfg.detect_every_stage = parse_bool(key, value);
  } else if (key == "cfl") {
    const double c = parse_double(key, value);
    if (!(c > 0.0 && c <= 2.0)) throw ConfigError("config: cfl must be in (0, 2], got " + value);
    cfg.cfl = c;
  } else if (key == "tend") {
    const double t = parse_double(key, value);
    if (!(t > 0.0)) throw ConfigError("config: tend must be positive, got " + value);
    cfg.t_end = t;
  } else if (key == "riemann") {
    if (value == "hllc")
      cfg.riemann = RiemannKind::Hllc;
    else if (value == "hll")
      cfg.riemann = RiemannKind::Hll;
    else
      throw ConfigError("config: riemann must be 'hllc' or 'hll'");
  } else if (key == "resolution") {
    const int r = parse_int(key, value);
    if (r < 1) throw ConfigError("config: resolution must be >= 1");
    cfg.resolution = r;
  } else if (key == "mesh") {
    cfg.mesh_spec = value;
  } else if (key == "out") {
    cfg.out_dir = value;
  } else if (key == "output_every") {
    const int n = parse_int(key, value);
    if (n < 0) throw ConfigError("config: output_every must be >= 0");
    cfg.output_every = n;
  } else if (key == "threads") {
    const int n = parse_int(key, value);
    if (n < 1) throw ConfigError("config: threads must be >= 1");
    cfg.threads = n;
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

RunConfig parse_config(const std::string& text,
                       const std::map<std::string, std::string>& overrides) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return (a == std::string::npos) ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
    apply_config_key(cfg, key, value);
  }
  for (const auto& [k, v] : overrides) apply_config_key(cfg, k, v);
  if (cfg.case_name.empty()) throw ConfigError("config: missing case");
  return cfg;
}

RunConfig parse_config_file(const std::string& path,
                            const std::map<std::string, std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), overrides);
}

}  // namespace ucfv
