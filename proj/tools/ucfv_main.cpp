#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "ucfv/run.hpp"
#include "ucfv/study.hpp"

using namespace ucfv;

namespace {

// CLI flags become config overrides so file and command line share one parser
void add_override(std::map<std::string, std::string>& ov, const std::string& key,
                  const std::string& value) {
  if (!value.empty()) ov[key] = value;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ucfv: 2D unstructured finite-volume Euler solver with hybrid "
               "Linear/CWENOZ/MUSCL reconstruction"};
  app.require_subcommand(1);

  // ---- run ----
  auto* run_cmd = app.add_subcommand("run", "execute one configured simulation");
  std::string config_path;
  std::map<std::string, std::string> flag_keys;
  run_cmd->add_option("--config", config_path, "key=value configuration file");
  for (const char* key :
       {"case", "order", "scheme", "limiter", "margins", "alpha_m", "beta_m", "alpha_w", "beta_w",
        "kappa", "deact_n", "lambda1p", "epsilon", "b", "venkat_kappa", "si_exponent",
        "detect_every_stage", "cfl", "tend", "riemann", "resolution", "mesh", "out",
        "output_every", "threads"}) {
    run_cmd->add_option("--" + std::string(key), flag_keys[key]);
  }

  // ---- study ----
  auto* study_cmd = app.add_subcommand("study", "convergence/efficiency study");
  std::string study_case = "vortex", study_orders = "3,5", study_res = "16,32,64";
  std::string study_schemes = "linear,cwenoz,hybrid", study_out = "study.csv";
  std::map<std::string, std::string> study_keys;
  study_cmd->add_option("--case", study_case, "benchmark case");
  study_cmd->add_option("--orders", study_orders, "comma-separated polynomial orders");
  study_cmd->add_option("--resolutions", study_res, "comma-separated mesh resolutions");
  study_cmd->add_option("--schemes", study_schemes, "comma-separated scheme modes");
  study_cmd->add_option("--out", study_out, "output CSV path");
  for (const char* key : {"cfl", "tend", "lambda1p", "limiter", "riemann", "threads"})
    study_cmd->add_option("--" + std::string(key), study_keys[key]);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      std::map<std::string, std::string> overrides;
      for (const auto& [k, v] : flag_keys) add_override(overrides, k, v);
      const RunConfig cfg = config_path.empty()
                                ? parse_config("", overrides)
                                : parse_config_file(config_path, overrides);
      const RunResult result = run_simulation(cfg);
      std::printf("case %s: %d steps to t = %g in %.3f s\n", cfg.case_name.c_str(), result.steps,
                  result.t_end, result.wall_seconds);
      if (!result.census.empty()) {
        const auto& last = result.census.back();
        std::printf("final census: linear %ld, cwenoz %ld, muscl %ld, first %ld\n",
                    last.counts[0], last.counts[1], last.counts[2], last.counts[3]);
      }
      if (result.errors) {
        std::printf("errors (density): Linf %.6e, L2 %.6e\n", result.errors->linf[0],
                    result.errors->l2[0]);
      }
      return 0;
    }

    // study
    std::map<std::string, std::string> overrides;
    overrides["case"] = study_case;
    for (const auto& [k, v] : study_keys) add_override(overrides, k, v);
    const RunConfig base = parse_config("", overrides);
    std::vector<SchemeMode> modes;
    {
      std::stringstream ss(study_schemes);
      std::string item;
      while (std::getline(ss, item, ',')) {
        std::map<std::string, std::string> one{{"case", study_case}, {"scheme", item}};
        modes.push_back(parse_config("", one).mode);
      }
    }
    const StudyResult study =
        run_convergence_study(base, parse_int_list(study_orders), parse_int_list(study_res), modes);
    write_study_csv(study, study_out);
    std::printf("study written to %s (%zu rows)\n", study_out.c_str(), study.rows.size());
    for (const auto& r : study.rows) {
      if (r.ok)
        std::printf("%-7s P%d res %4d  L2(rho) %.4e  order %5.2f  wall %8.3fs (x%.2f)\n",
                    r.scheme.c_str(), r.order, r.resolution, r.l2_rho, r.order_l2, r.wall_seconds,
                    r.wall_normalized);
      else
        std::printf("%-7s P%d res %4d  FAILED: %s\n", r.scheme.c_str(), r.order, r.resolution,
                    r.error_message.c_str());
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
