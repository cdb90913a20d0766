#ifndef UCFV_RECONSTRUCT_HPP
#define UCFV_RECONSTRUCT_HPP

#include <span>
#include <vector>

#include "ucfv/euler.hpp"
#include "ucfv/stencil.hpp"

namespace ucfv {

// DOF vectors are stored k-major with kNumVars contiguous entries per k:
// dofs[k*kNumVars + v].

// a = pinv * b with b_m = U_m - U_0 over the central stencil.
void solve_dofs(const CellStencil& cs, const std::vector<State>& u, double* dofs, int K);

// r=1 sub-solve on the central stencil rows (2 DOFs per variable).
void solve_dofs_linear(const CellStencil& cs, const std::vector<State>& u, double* dofs);

// r=1 solve on directional stencil `s` (2 DOFs per variable).
void solve_dofs_directional(const CellStencil& cs, int s, const std::vector<State>& u,
                            double* dofs);

// U_0 + sum_k dofs_k phi_k with precomputed phi values.
inline State eval_poly(const State& u0, const double* dofs, const double* phi, int K) {
  State out = u0;
  for (int k = 0; k < K; ++k) {
    const double p = phi[k];
    out[0] += dofs[k * kNumVars + 0] * p;
    out[1] += dofs[k * kNumVars + 1] * p;
    out[2] += dofs[k * kNumVars + 2] * p;
    out[3] += dofs[k * kNumVars + 3] * p;
  }
  return out;
}

// Barth & Jespersen slope limiter for one scalar variable: candidate values
// at the cell's face quadrature points against neighbourhood bounds.
double limiter_barth_jespersen(double u0, double umin, double umax,
                               std::span<const double> qp_values);

// Venkatakrishnan limiter with threshold eps2 = (kappa_v * h_c)^3.
double limiter_venkatakrishnan(double u0, double umin, double umax,
                               std::span<const double> qp_values, double eps2);

// Weights for one variable; fixed capacity (s_t <= 5 for tri/quad cells).
struct CwenozWeights {
  static constexpr int kMaxStencils = 8;
  std::array<double, kMaxStencils> lambda{};  // lambda[0] is the central stencil
  std::array<double, kMaxStencils> si{};
  std::array<double, kMaxStencils> omega{};
  int n_stencils = 0;
  double tau = 0.0;
};

// CWENOZ blend for one variable: central (optimal) DOFs of length K and
// s_t - 1 directional DOF pairs; result written to `blended` (length K).
CwenozWeights cwenoz_blend_scalar(const CellStencil& cs, int K, const double* central_dofs,
                                  const std::vector<std::array<double, 2>>& dir_dofs,
                                  double lambda1p, double eps, double b, double* blended);

// SI_s = a^T OI a for a K-length DOF vector.
double smoothness_indicator(const std::vector<double>& oi, const double* a, int K);

}  // namespace ucfv

#endif
