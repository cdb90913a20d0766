#include "ucfv/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ucfv {

void solve_dofs(const CellStencil& cs, const std::vector<State>& u, double* dofs, int K) {
  const int M = cs.M();
  const State& u0 = u[cs.central[0].cell];
  for (int k = 0; k < K; ++k) {
    const double* row = &cs.pinv[static_cast<std::size_t>(k) * M];
    double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
    for (int m = 0; m < M; ++m) {
      const State& um = u[cs.central[m + 1].cell];
      const double w = row[m];
      s0 += w * (um[0] - u0[0]);
      s1 += w * (um[1] - u0[1]);
      s2 += w * (um[2] - u0[2]);
      s3 += w * (um[3] - u0[3]);
    }
    dofs[k * kNumVars + 0] = s0;
    dofs[k * kNumVars + 1] = s1;
    dofs[k * kNumVars + 2] = s2;
    dofs[k * kNumVars + 3] = s3;
  }
}

void solve_dofs_linear(const CellStencil& cs, const std::vector<State>& u, double* dofs) {
  const int M = cs.M();
  const State& u0 = u[cs.central[0].cell];
  for (int k = 0; k < 2; ++k) {
    const double* row = &cs.pinv_linear[static_cast<std::size_t>(k) * M];
    for (int v = 0; v < kNumVars; ++v) {
      double s = 0.0;
      for (int m = 0; m < M; ++m) s += row[m] * (u[cs.central[m + 1].cell][v] - u0[v]);
      dofs[k * kNumVars + v] = s;
    }
  }
}

void solve_dofs_directional(const CellStencil& cs, int s, const std::vector<State>& u,
                            double* dofs) {
  const auto& members = cs.directional[s];
  const int M = static_cast<int>(members.size()) - 1;
  const State& u0 = u[cs.central[0].cell];
  for (int k = 0; k < 2; ++k) {
    const double* row = &cs.pinv_dir[s][static_cast<std::size_t>(k) * M];
    for (int v = 0; v < kNumVars; ++v) {
      double acc = 0.0;
      for (int m = 0; m < M; ++m)
        acc += row[m] * (u[cs.central[members[m + 1]].cell][v] - u0[v]);
      dofs[k * kNumVars + v] = acc;
    }
  }
}

double limiter_barth_jespersen(double u0, double umin, double umax,
                               std::span<const double> qp_values) {
  double theta = 1.0;
  for (double uq : qp_values) {
    const double d = uq - u0;
    if (d > 0.0) {
      theta = std::min(theta, std::min(1.0, (umax - u0) / d));
    } else if (d < 0.0) {
      theta = std::min(theta, std::min(1.0, (umin - u0) / d));
    }
  }
  return std::max(theta, 0.0);
}

double limiter_venkatakrishnan(double u0, double umin, double umax,
                               std::span<const double> qp_values, double eps2) {
  double theta = 1.0;
  for (double uq : qp_values) {
    const double dm = uq - u0;
    if (dm == 0.0) continue;
    const double dp = (dm > 0.0) ? (umax - u0) : (umin - u0);
    const double num = (dp * dp + eps2) * dm + 2.0 * dm * dm * dp;
    const double den = dm * (dp * dp + 2.0 * dm * dm + dm * dp + eps2);
    const double phi = (den != 0.0) ? num / den : 1.0;
    theta = std::min(theta, std::clamp(phi, 0.0, 1.0));
  }
  return theta;
}

double smoothness_indicator(const std::vector<double>& oi, const double* a, int K) {
  double s = 0.0;
  for (int k = 0; k < K; ++k) {
    const double* row = &oi[static_cast<std::size_t>(k) * K];
    double t = 0.0;
    for (int q = 0; q < K; ++q) t += row[q] * a[q];
    s += a[k] * t;
  }
  return s;
}

CwenozWeights cwenoz_blend_scalar(const CellStencil& cs, int K, const double* central_dofs,
                                  const std::vector<std::array<double, 2>>& dir_dofs,
                                  double lambda1p, double eps, double b, double* blended) {
  if (!(lambda1p > 1.0))
    throw std::invalid_argument("cwenoz: central linear weight lambda1' must exceed 1");
  const int st = static_cast<int>(dir_dofs.size()) + 1;
  if (st > CwenozWeights::kMaxStencils)
    throw std::invalid_argument("cwenoz: too many directional stencils");

  CwenozWeights w;
  w.n_stencils = st;
  w.lambda[0] = 1.0 - 1.0 / lambda1p;
  for (int s = 1; s < st; ++s) w.lambda[s] = (1.0 - w.lambda[0]) / (st - 1);

  // p1 = (p_opt - sum_s lambda_s p_s) / lambda_1 on zero-padded DOF vectors
  thread_local std::vector<double> p1;
  p1.assign(K, 0.0);
  for (int k = 0; k < K; ++k) p1[k] = central_dofs[k];
  for (int s = 1; s < st; ++s) {
    p1[0] -= w.lambda[s] * dir_dofs[s - 1][0];
    p1[1] -= w.lambda[s] * dir_dofs[s - 1][1];
  }
  for (int k = 0; k < K; ++k) p1[k] /= w.lambda[0];

  w.si[0] = smoothness_indicator(cs.oi, p1.data(), K);
  for (int s = 1; s < st; ++s) {
    const double a0 = dir_dofs[s - 1][0];
    const double a1 = dir_dofs[s - 1][1];
    // zero-padded directional vector: only the |beta|=1 block contributes
    w.si[s] = cs.oi[0] * a0 * a0 + (cs.oi[1] + cs.oi[static_cast<std::size_t>(K)]) * a0 * a1 +
              cs.oi[static_cast<std::size_t>(K) + 1] * a1 * a1;
  }

  double tau = 0.0;
  for (int s = 1; s < st; ++s) tau += std::abs(w.si[s] - w.si[0]);
  tau /= (st - 1);
  w.tau = std::pow(tau, b);

  double wsum = 0.0;
  for (int s = 0; s < st; ++s) {
    w.omega[s] = w.lambda[s] * (1.0 + w.tau / (eps + w.si[s]));
    wsum += w.omega[s];
  }
  for (int s = 0; s < st; ++s) w.omega[s] /= wsum;

  for (int k = 0; k < K; ++k) blended[k] = w.omega[0] * p1[k];
  for (int s = 1; s < st; ++s) {
    blended[0] += w.omega[s] * dir_dofs[s - 1][0];
    blended[1] += w.omega[s] * dir_dofs[s - 1][1];
  }
  return w;
}

}  // namespace ucfv
