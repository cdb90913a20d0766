#ifndef UCFV_TIME_INTEGRATOR_HPP
#define UCFV_TIME_INTEGRATOR_HPP

#include <functional>
#include <vector>

#include "ucfv/euler.hpp"

namespace ucfv {

using StateField = std::vector<State>;

// rhs(u, t_stage, out): semi-discrete residual dU/dt.
using RhsFn = std::function<void(const StateField&, double, StateField&)>;

struct SspRk4Workspace {
  StateField ua, ub, uc, ud, rhs, rhs3;
};

// 5-stage, 4th-order strong-stability-preserving Runge-Kutta (Spiteri-Ruuth
// SSPRK(5,4)); advances `u` from t to t+dt in place.
void ssp_rk4_step(StateField& u, double t, double dt, const RhsFn& rhs, SspRk4Workspace& ws);

}  // namespace ucfv

#endif
