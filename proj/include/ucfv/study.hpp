#ifndef UCFV_STUDY_HPP
#define UCFV_STUDY_HPP

#include <string>
#include <vector>

#include "ucfv/run.hpp"

namespace ucfv {

struct StudyRow {
  std::string scheme;
  int order = 0;
  int resolution = 0;
  int n_cells = 0;
  bool ok = false;
  std::string error_message;  // when !ok
  double linf_rho = 0.0, l2_rho = 0.0;
  double order_linf = 0.0, order_l2 = 0.0;  // vs previous resolution, 0 on first
  double wall_seconds = 0.0;
  double wall_normalized = 0.0;  // vs (linear, min order, min resolution)
};

struct StudyResult {
  std::vector<StudyRow> rows;
};

// Cross-product convergence/efficiency study; failed runs are recorded and
// the study continues.
StudyResult run_convergence_study(const RunConfig& base, const std::vector<int>& orders,
                                  const std::vector<int>& resolutions,
                                  const std::vector<SchemeMode>& modes);

void write_study_csv(const StudyResult& study, const std::string& path);

std::string scheme_mode_name(SchemeMode m);

}  // namespace ucfv

#endif
