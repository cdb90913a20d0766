#ifndef UCFV_SOLVER_HPP
#define UCFV_SOLVER_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ucfv/detector.hpp"
#include "ucfv/euler.hpp"
#include "ucfv/mesh.hpp"
#include "ucfv/reconstruct.hpp"
#include "ucfv/stencil.hpp"
#include "ucfv/time_integrator.hpp"

namespace ucfv {

enum class SchemeMode { Linear, Muscl, Cwenoz, Hybrid, First };
enum class LimiterKind { BarthJespersen, Venkatakrishnan };
enum class RiemannKind { Hllc, Hll };

// ghost state at a boundary quadrature point
using BoundaryFn = std::function<State(const Vec2& x, double t, const State& inner, const Vec2& n)>;

BoundaryFn bc_fixed(const State& s);
BoundaryFn bc_outflow();
BoundaryFn bc_wall();

struct SolverOptions {
  int order = 3;
  SchemeMode mode = SchemeMode::Hybrid;
  LimiterKind limiter = LimiterKind::BarthJespersen;
  RiemannKind riemann = RiemannKind::Hllc;
  NadMargins margins;
  double lambda1p = 1e3;
  double weno_eps = 1e-3;
  double weno_b = 4.0;
  double cfl = 0.6;
  double venkat_kappa = 5.0;
  SiExponent si_exponent = SiExponent::Paper;
  bool detect_every_stage = true;
  double gamma = 1.4;
};

struct PhaseTimes {
  double reconstruct = 0.0;
  double detect = 0.0;
  double weights = 0.0;
  double flux = 0.0;
};

class Solver {
 public:
  Solver(const Mesh& mesh, SolverOptions opt, std::map<std::string, BoundaryFn> bcs);

  StateField& state() { return state_; }
  const StateField& state() const { return state_; }

  double max_stable_dt() const;

  // one SSP-RK4 step from time t
  void advance(double dt, double t);

  // semi-discrete residual dU/dt (also classifies cells in hybrid mode)
  void compute_residual(const StateField& u, double t, StateField& out);

  // labels from the first stage of the last advance (or last residual call)
  const std::vector<Scheme>& step_labels() const { return step_labels_; }

  PhaseTimes& phase_times() { return times_; }
  const Mesh& mesh() const { return mesh_; }
  const StencilSet& stencils() const { return stencils_; }
  const SolverOptions& options() const { return opt_; }
  int n_qp() const { return stencils_.n_qp; }

 private:
  void evaluate_cell(const StateField& u, int c, const double* dofs);
  void evaluate_constant(const StateField& u, int c);
  void classify_cells(const StateField& u);
  void apply_troubled(const StateField& u);
  void fallback_check(const StateField& u);
  void assemble_fluxes(const StateField& u, double t, StateField& out);

  const Mesh& mesh_;
  SolverOptions opt_;
  StencilSet stencils_;
  std::vector<BoundaryFn> patch_bc_;          // per patch index
  std::vector<std::vector<int>> neighbors_;   // face neighbours incl. periodic

  StateField state_;
  std::vector<double> dofs_;                  // ncells x K x kNumVars
  std::vector<State> val_left_, val_right_;   // per face*n_qp
  std::vector<State> face_flux_;              // integrated flux per face
  std::vector<Scheme> labels_, step_labels_;
  std::vector<std::array<double, 4>> bounds_; // per cell: rho/E min,max
  bool stage_is_first_ = true;

  SspRk4Workspace rk_ws_;
  PhaseTimes times_;
};

}  // namespace ucfv

#endif
