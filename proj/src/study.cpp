#include "ucfv/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace ucfv {

std::string scheme_mode_name(SchemeMode m) {
  switch (m) {
    case SchemeMode::Linear: return "linear";
    case SchemeMode::Muscl: return "muscl";
    case SchemeMode::Cwenoz: return "cwenoz";
    case SchemeMode::Hybrid: return "hybrid";
    default: return "first";
  }
}

StudyResult run_convergence_study(const RunConfig& base, const std::vector<int>& orders,
                                  const std::vector<int>& resolutions,
                                  const std::vector<SchemeMode>& modes) {
  StudyResult study;
  double norm_time = 0.0;
  for (SchemeMode mode : modes) {
    for (int order : orders) {
      const StudyRow* prev = nullptr;
      for (int res : resolutions) {
        RunConfig cfg = base;
        cfg.mode = mode;
        cfg.order = order;
        cfg.resolution = res;
        cfg.out_dir.clear();

        StudyRow row;
        row.scheme = scheme_mode_name(mode);
        row.order = order;
        row.resolution = res;
        try {
          const RunResult r = run_simulation(cfg);
          row.ok = true;
          row.n_cells = r.mesh.n_cells();
          row.wall_seconds = r.wall_seconds;
          if (r.errors) {
            row.linf_rho = r.errors->linf[0];
            row.l2_rho = r.errors->l2[0];
            if (prev && prev->ok) {
              row.order_linf = std::log2(prev->linf_rho / row.linf_rho);
              row.order_l2 = std::log2(prev->l2_rho / row.l2_rho);
            }
          }
        } catch (const std::exception& e) {
          row.error_message = e.what();
        }
        study.rows.push_back(row);
        prev = &study.rows.back();
      }
    }
  }
  // normalization run: linear scheme, lowest order, coarsest mesh (first such
  // row, falling back to the first successful row)
  for (const auto& r : study.rows) {
    if (r.ok && r.scheme == "linear") {
      norm_time = r.wall_seconds;
      break;
    }
  }
  if (norm_time == 0.0)
    for (const auto& r : study.rows)
      if (r.ok) {
        norm_time = r.wall_seconds;
        break;
      }
  if (norm_time > 0.0)
    for (auto& r : study.rows) r.wall_normalized = r.wall_seconds / norm_time;
  return study;
}

void write_study_csv(const StudyResult& study, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "scheme,order,resolution,ncells,status,linf_rho,l2_rho,order_linf,order_l2,"
         "wall_seconds,wall_normalized\n";
  char buf[64];
  auto f = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  for (const auto& r : study.rows) {
    out << r.scheme << "," << r.order << "," << r.resolution << "," << r.n_cells << ","
        << (r.ok ? "ok" : ("failed: " + r.error_message)) << "," << f(r.linf_rho) << ","
        << f(r.l2_rho) << "," << f(r.order_linf) << "," << f(r.order_l2) << ","
        << f(r.wall_seconds) << "," << f(r.wall_normalized) << "\n";
  }
}

}  // namespace ucfv
