#ifndef UCFV_RUN_HPP
#define UCFV_RUN_HPP

#include <array>
#include <optional>
#include <vector>

#include "ucfv/cases.hpp"
#include "ucfv/config.hpp"
#include "ucfv/norms.hpp"

namespace ucfv {

struct CensusRow {
  int step;
  double t, dt;
  std::array<long, 4> counts;  // Linear, CWENOZ, MUSCL, FirstOrder
};

struct TimingRow {
  int step;
  double wall;
  PhaseTimes phases;  // per-step deltas
};

struct RunResult {
  Mesh mesh;
  StateField state;
  std::vector<Scheme> final_labels;
  std::vector<CensusRow> census;
  std::vector<TimingRow> timing;
  double wall_seconds = 0.0;
  PhaseTimes phases;
  int steps = 0;
  double t_end = 0.0;
  std::optional<ErrorReport> errors;
};

// Execute one configured run; writes fields/census/errors/timing files when
// cfg.out_dir is set. Solver errors carry step and time context.
RunResult run_simulation(const RunConfig& cfg);

// Build the mesh a config describes (recipe "auto", "tri:N[:alt]", "quad:N",
// or "file:PATH") at the face-quadrature count the order requires.
Mesh build_case_mesh(const CaseSpec& cs, const RunConfig& cfg);

// Legacy-VTK ASCII snapshot with density, pressure, velocity and the
// per-cell scheme label.
void write_field_snapshot(const Mesh& mesh, const StateField& state,
                          const std::vector<Scheme>& labels, double gamma,
                          const std::string& path);

void write_census_csv(const std::vector<CensusRow>& rows, int n_cells, const std::string& path);
void write_timing_csv(const std::vector<TimingRow>& rows, const std::string& path);
void write_errors_csv(const ErrorReport& rep, const std::string& path);

}  // namespace ucfv

#endif
