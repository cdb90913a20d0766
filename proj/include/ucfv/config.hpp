#ifndef UCFV_CONFIG_HPP
#define UCFV_CONFIG_HPP

#include <map>
#include <optional>
#include <string>

#include "ucfv/solver.hpp"

namespace ucfv {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Full run description. Case-dependent fields stay unset until resolved
// against the CaseSpec defaults.
struct RunConfig {
  std::string case_name;
  int order = 3;
  SchemeMode mode = SchemeMode::Hybrid;
  LimiterKind limiter = LimiterKind::BarthJespersen;
  NadMargins margins;  // Fig-1(a) defaults
  double weno_eps = 1e-3;
  double weno_b = 4.0;
  double venkat_kappa = 5.0;
  SiExponent si_exponent = SiExponent::Paper;
  bool detect_every_stage = true;

  std::optional<double> cfl;
  std::optional<double> t_end;
  std::optional<double> lambda1p;
  std::optional<RiemannKind> riemann;
  std::optional<int> resolution;
  std::string mesh_spec;  // "auto" | "tri:NX[:NY][:alt]" | "quad:NX[:NY]" | "file:PATH"

  std::string out_dir;  // empty: no file output
  int output_every = 0; // VTK cadence in steps; 0 = final snapshot only
  int threads = 1;

  SolverOptions solver_options(const struct CaseDefaults* defaults = nullptr) const;
};

// key=value configuration text; `overrides` (from CLI flags) win.
RunConfig parse_config(const std::string& text, const std::map<std::string, std::string>& overrides);
RunConfig parse_config_file(const std::string& path,
                            const std::map<std::string, std::string>& overrides);

// apply one key=value pair (shared between file parsing and flag overrides)
void apply_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

// named margin presets from the paper's margin-configuration figure
NadMargins margin_preset(const std::string& name);

}  // namespace ucfv

#endif
