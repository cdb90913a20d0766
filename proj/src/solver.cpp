#include "ucfv/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace ucfv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr int kCheckedVars[2] = {0, 3};  // density and total energy

}  // namespace

BoundaryFn bc_fixed(const State& s) {
  return [s](const Vec2&, double, const State&, const Vec2&) { return s; };
}

BoundaryFn bc_outflow() {
  return [](const Vec2&, double, const State& inner, const Vec2&) { return inner; };
}

BoundaryFn bc_wall() {
  return [](const Vec2&, double, const State& inner, const Vec2& n) {
    return mirror_state(inner, n);
  };
}

Solver::Solver(const Mesh& mesh, SolverOptions opt, std::map<std::string, BoundaryFn> bcs)
    : mesh_(mesh), opt_(opt), stencils_(build_stencils(mesh, opt.order, opt.si_exponent)) {
  validate_margins(opt_.margins);
  if (!mesh_.faces.empty() &&
      static_cast<int>(mesh_.faces[0].quad_points.size()) != stencils_.n_qp)
    throw std::invalid_argument("solver: mesh was built with " +
                                std::to_string(mesh_.faces[0].quad_points.size()) +
                                " face quadrature points but order " + std::to_string(opt_.order) +
                                " needs " + std::to_string(stencils_.n_qp));

  patch_bc_.resize(mesh_.patch_names.size());
  for (auto& [name, fn] : bcs) {
    const int pid = mesh_.patch_index(name);
    if (pid < 0) throw std::invalid_argument("solver: unknown boundary patch '" + name + "'");
    patch_bc_[pid] = std::move(fn);
  }
  for (int fid = 0; fid < mesh_.n_faces(); ++fid) {
    const Face& f = mesh_.faces[fid];
    if (f.is_boundary() && !f.is_periodic()) {
      if (f.patch < 0 || !patch_bc_[f.patch])
        throw std::invalid_argument("solver: boundary face " + std::to_string(fid) +
                                    " has no boundary condition (patch " +
                                    (f.patch >= 0 ? mesh_.patch_names[f.patch] : "<none>") + ")");
    }
  }

  neighbors_.resize(mesh_.n_cells());
  for (int c = 0; c < mesh_.n_cells(); ++c) neighbors_[c] = face_neighbors(mesh_, c);

  const int n = mesh_.n_cells();
  state_.assign(n, State{});
  dofs_.assign(static_cast<std::size_t>(n) * stencils_.K * kNumVars, 0.0);
  val_left_.assign(static_cast<std::size_t>(mesh_.n_faces()) * stencils_.n_qp, State{});
  val_right_.assign(val_left_.size(), State{});
  face_flux_.assign(mesh_.n_faces(), State{});
  labels_.assign(n, Scheme::Linear);
  step_labels_ = labels_;
  bounds_.assign(n, {});
}

void Solver::evaluate_cell(const StateField& u, int c, const double* dofs) {
  const auto& phi = stencils_.cell_phi[c];
  const auto& slots = stencils_.cell_qp_slot[c];
  const int K = stencils_.K;
  const State& u0 = u[c];
  for (std::size_t q = 0; q < slots.size(); ++q) {
    const State v = eval_poly(u0, dofs, &phi[q * K], K);
    const int slot = slots[q];
    if (slot & 1)
      val_right_[slot >> 1] = v;
    else
      val_left_[slot >> 1] = v;
  }
}

void Solver::evaluate_constant(const StateField& u, int c) {
  const auto& slots = stencils_.cell_qp_slot[c];
  const State& u0 = u[c];
  for (std::size_t q = 0; q < slots.size(); ++q) {
    const int slot = slots[q];
    if (slot & 1)
      val_right_[slot >> 1] = u0;
    else
      val_left_[slot >> 1] = u0;
  }
}

double Solver::max_stable_dt() const {
  double dt = 1e300;
  for (int c = 0; c < mesh_.n_cells(); ++c) {
    const Primitive w = cons_to_prim(state_[c], opt_.gamma);
    const double speed = std::abs(w.u) + std::abs(w.v) + sound_speed(w, opt_.gamma);
    dt = std::min(dt, mesh_.cells[c].h_c / speed);
  }
  return opt_.cfl * dt;
}

void Solver::classify_cells(const StateField& u) {
  const int n = mesh_.n_cells();
  const int K = stencils_.K;
  std::vector<Scheme> raw(n, Scheme::Linear);
  for (int c = 0; c < n; ++c) {
    // neighbourhood bounds for the checked variables
    auto& bnd = bounds_[c];
    for (int t = 0; t < 2; ++t) {
      const double u0 = u[c][kCheckedVars[t]];
      double lo = u0, hi = u0;
      for (int nb : neighbors_[c]) {
        lo = std::min(lo, u[nb][kCheckedVars[t]]);
        hi = std::max(hi, u[nb][kCheckedVars[t]]);
      }
      bnd[2 * t] = lo;
      bnd[2 * t + 1] = hi;
    }
    const auto& slots = stencils_.cell_qp_slot[c];
    int sev = 0;
    for (int t = 0; t < 2 && sev < 2; ++t) {
      const double du = bnd[2 * t + 1] - bnd[2 * t];
      if (deactivate_smooth(du, mesh_.cells[c].h_c, opt_.margins.kappa, opt_.margins.deact_n))
        continue;
      double v = -1e300;
      for (int s : slots) {
        const State& val = (s & 1) ? val_right_[s >> 1] : val_left_[s >> 1];
        const double uq = val[kCheckedVars[t]];
        v = std::max(v, std::max(bnd[2 * t] - uq, uq - bnd[2 * t + 1]));
      }
      const Scheme vote = classify_violation(v, compute_margins(opt_.margins, du));
      sev = std::max(sev, severity(vote));
    }
    raw[c] = (sev == 0) ? Scheme::Linear : (sev == 1 ? Scheme::Cwenoz : Scheme::Muscl);
  }
  labels_ = spread_flags(mesh_, raw);
  (void)K;
}

void Solver::apply_troubled(const StateField& u) {
  const int n = mesh_.n_cells();
  const int K = stencils_.K;
  std::vector<std::array<double, 2>> dir_dofs_v;
  std::vector<double> lin(2 * kNumVars);
  std::vector<double> central(static_cast<std::size_t>(K) * kNumVars);
  std::vector<double> blended(K);
  std::vector<double> scalar_central(K);
  std::vector<double> qpvals(32);

  for (int c = 0; c < n; ++c) {
    const Scheme lab = labels_[c];
    if (lab == Scheme::Linear) continue;
    const CellStencil& cs = stencils_.cells[c];
    double* dofs = &dofs_[static_cast<std::size_t>(c) * K * kNumVars];

    if (lab == Scheme::Cwenoz) {
      const int nd = static_cast<int>(cs.directional.size());
      dir_dofs_v.resize(nd);
      thread_local std::vector<double> dtmp;
      dtmp.resize(2 * kNumVars);
      thread_local std::vector<std::array<double, 2>> dir_all;  // per stencil x var
      dir_all.assign(static_cast<std::size_t>(nd) * kNumVars, {0.0, 0.0});
      for (int s = 0; s < nd; ++s) {
        solve_dofs_directional(cs, s, u, dtmp.data());
        for (int v = 0; v < kNumVars; ++v)
          dir_all[static_cast<std::size_t>(s) * kNumVars + v] = {dtmp[0 * kNumVars + v],
                                                                 dtmp[1 * kNumVars + v]};
      }
      for (int v = 0; v < kNumVars; ++v) {
        for (int k = 0; k < K; ++k) scalar_central[k] = dofs[k * kNumVars + v];
        dir_dofs_v.resize(nd);
        for (int s = 0; s < nd; ++s) dir_dofs_v[s] = dir_all[static_cast<std::size_t>(s) * kNumVars + v];
        cwenoz_blend_scalar(cs, K, scalar_central.data(), dir_dofs_v, opt_.lambda1p, opt_.weno_eps,
                            opt_.weno_b, blended.data());
        for (int k = 0; k < K; ++k) dofs[k * kNumVars + v] = blended[k];
      }
      evaluate_cell(u, c, dofs);
    } else if (lab == Scheme::Muscl) {
      solve_dofs_linear(cs, u, lin.data());
      // unconstrained r=1 candidate values at the face quadrature points
      const auto& phi = stencils_.cell_phi[c];
      const auto& slots = stencils_.cell_qp_slot[c];
      const int nq = static_cast<int>(slots.size());
      qpvals.resize(static_cast<std::size_t>(nq) * kNumVars);
      for (int q = 0; q < nq; ++q) {
        const double p0 = phi[static_cast<std::size_t>(q) * K];
        const double p1 = phi[static_cast<std::size_t>(q) * K + 1];
        for (int v = 0; v < kNumVars; ++v)
          qpvals[static_cast<std::size_t>(q) * kNumVars + v] =
              u[c][v] + lin[0 * kNumVars + v] * p0 + lin[1 * kNumVars + v] * p1;
      }
      const double eps2 = std::pow(opt_.venkat_kappa * mesh_.cells[c].h_c, 3);
      thread_local std::vector<double> var_vals;
      var_vals.resize(nq);
      for (int v = 0; v < kNumVars; ++v) {
        double lo = u[c][v], hi = u[c][v];
        for (int nb : neighbors_[c]) {
          lo = std::min(lo, u[nb][v]);
          hi = std::max(hi, u[nb][v]);
        }
        for (int q = 0; q < nq; ++q) var_vals[q] = qpvals[static_cast<std::size_t>(q) * kNumVars + v];
        const double theta =
            (opt_.limiter == LimiterKind::BarthJespersen)
                ? limiter_barth_jespersen(u[c][v], lo, hi, var_vals)
                : limiter_venkatakrishnan(u[c][v], lo, hi, var_vals, eps2);
        dofs[0 * kNumVars + v] = theta * lin[0 * kNumVars + v];
        dofs[1 * kNumVars + v] = theta * lin[1 * kNumVars + v];
        for (int k = 2; k < K; ++k) dofs[k * kNumVars + v] = 0.0;
      }
      evaluate_cell(u, c, dofs);
    } else {  // FirstOrder (forced mode)
      for (int k = 0; k < K * kNumVars; ++k) dofs[k] = 0.0;
      evaluate_constant(u, c);
    }
  }
}

void Solver::fallback_check(const StateField& u) {
  const int n = mesh_.n_cells();
  const int K = stencils_.K;
  for (int c = 0; c < n; ++c) {
    const auto& slots = stencils_.cell_qp_slot[c];
    const auto& bnd = bounds_[c];
    bool demote = false;
    for (int s : slots) {
      const State& val = (s & 1) ? val_right_[s >> 1] : val_left_[s >> 1];
      if (!is_physical(val, opt_.gamma)) {
        demote = true;
        break;
      }
    }
    if (!demote) {
      for (int t = 0; t < 2 && !demote; ++t) {
        const double du = bnd[2 * t + 1] - bnd[2 * t];
        const double dm = compute_margins(opt_.margins, du).delta_m;
        for (int s : slots) {
          const State& val = (s & 1) ? val_right_[s >> 1] : val_left_[s >> 1];
          const double uq = val[kCheckedVars[t]];
          if (std::max(bnd[2 * t] - uq, uq - bnd[2 * t + 1]) > dm) {
            demote = true;
            break;
          }
        }
      }
    }
    if (demote) {
      labels_[c] = Scheme::FirstOrder;
      double* dofs = &dofs_[static_cast<std::size_t>(c) * K * kNumVars];
      for (int k = 0; k < K * kNumVars; ++k) dofs[k] = 0.0;
      evaluate_constant(u, c);
    }
  }
}

void Solver::assemble_fluxes(const StateField& u, double t, StateField& out) {
  const int nf = mesh_.n_faces();
  const int nq = stencils_.n_qp;
  const FluxFn flux = (opt_.riemann == RiemannKind::Hllc) ? hllc_flux : hll_flux;
  for (int fid = 0; fid < nf; ++fid) {
    const Face& f = mesh_.faces[fid];
    if (f.is_periodic() && f.periodic_partner < fid) continue;  // handled by primary
    State total{};
    try {
      for (int q = 0; q < nq; ++q) {
        const State& UL = val_left_[fid * nq + q];
        State UR;
        if (!f.is_boundary()) {
          UR = val_right_[fid * nq + q];
        } else if (f.is_periodic()) {
          UR = val_left_[f.periodic_partner * nq + f.partner_qp[q]];
        } else {
          UR = patch_bc_[f.patch](f.quad_points[q], t, UL, f.normal);
        }
        const State fl = flux(UL, UR, f.normal, opt_.gamma);
        for (int v = 0; v < kNumVars; ++v) total[v] += f.quad_weights[q] * fl[v];
      }
    } catch (const NonPhysicalError& e) {
      throw NonPhysicalError(std::string(e.what()) + " at face " + std::to_string(fid) +
                             " (midpoint " + std::to_string(f.midpoint.x) + ", " +
                             std::to_string(f.midpoint.y) + ")");
    }
    for (int v = 0; v < kNumVars; ++v) face_flux_[fid][v] = total[v] * f.length;
  }

  const int n = mesh_.n_cells();
  out.resize(n);
  for (int c = 0; c < n; ++c) {
    State acc{};
    for (int fid : mesh_.cells[c].face_ids) {
      const Face& f = mesh_.faces[fid];
      double sgn = (f.left_cell == c) ? 1.0 : -1.0;
      int src = fid;
      if (f.is_periodic() && f.periodic_partner < fid) {
        src = f.periodic_partner;   // flux stored on the primary face
        sgn = -1.0;                 // this cell sits on the primary's right side
      }
      for (int v = 0; v < kNumVars; ++v) acc[v] += sgn * face_flux_[src][v];
    }
    const double inv_vol = 1.0 / mesh_.cells[c].area;
    for (int v = 0; v < kNumVars; ++v) out[c][v] = -acc[v] * inv_vol;
  }
  (void)u;
}

void Solver::compute_residual(const StateField& u, double t, StateField& out) {
  const int n = mesh_.n_cells();
  const int K = stencils_.K;
  const auto t0 = Clock::now();

  // reconstruct: candidate DOFs and face-point values
  if (opt_.mode == SchemeMode::First) {
    for (int c = 0; c < n; ++c) labels_[c] = Scheme::FirstOrder;
  } else if (opt_.mode == SchemeMode::Muscl) {
    for (int c = 0; c < n; ++c) labels_[c] = Scheme::Muscl;
  } else if (opt_.mode == SchemeMode::Cwenoz) {
    for (int c = 0; c < n; ++c) labels_[c] = Scheme::Cwenoz;
  }

  const bool needs_central = (opt_.mode == SchemeMode::Linear || opt_.mode == SchemeMode::Cwenoz ||
                              opt_.mode == SchemeMode::Hybrid);
  if (needs_central) {
    for (int c = 0; c < n; ++c) {
      double* dofs = &dofs_[static_cast<std::size_t>(c) * K * kNumVars];
      solve_dofs(stencils_.cells[c], u, dofs, K);
      if (opt_.mode != SchemeMode::Cwenoz) evaluate_cell(u, c, dofs);
    }
  }
  times_.reconstruct += seconds_since(t0);

  // detect
  const auto t1 = Clock::now();
  if (opt_.mode == SchemeMode::Hybrid) {
    if (stage_is_first_ || opt_.detect_every_stage) classify_cells(u);
  }
  times_.detect += seconds_since(t1);

  // weights / limited reconstructions for non-linear cells
  const auto t2 = Clock::now();
  if (opt_.mode != SchemeMode::Linear) apply_troubled(u);
  if (opt_.mode == SchemeMode::Hybrid) {
    if (!stage_is_first_ && !opt_.detect_every_stage) {
      // bounds are refreshed even when classification is frozen
      for (int c = 0; c < n; ++c) {
        auto& bnd = bounds_[c];
        for (int tt = 0; tt < 2; ++tt) {
          double lo = u[c][kCheckedVars[tt]], hi = lo;
          for (int nb : neighbors_[c]) {
            lo = std::min(lo, u[nb][kCheckedVars[tt]]);
            hi = std::max(hi, u[nb][kCheckedVars[tt]]);
          }
          bnd[2 * tt] = lo;
          bnd[2 * tt + 1] = hi;
        }
      }
    }
    fallback_check(u);
  }
  times_.weights += seconds_since(t2);

  if (stage_is_first_) {
    step_labels_ = labels_;
    stage_is_first_ = false;
  }

  const auto t3 = Clock::now();
  assemble_fluxes(u, t, out);
  times_.flux += seconds_since(t3);
}

void Solver::advance(double dt, double t) {
  stage_is_first_ = true;
  ssp_rk4_step(
      state_, t, dt,
      [this](const StateField& u, double ts, StateField& out) { compute_residual(u, ts, out); },
      rk_ws_);
}

}  // namespace ucfv
