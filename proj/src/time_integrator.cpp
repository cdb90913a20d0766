#include "ucfv/time_integrator.hpp"

#include <cmath>
#include <stdexcept>

namespace ucfv {

namespace {

// Spiteri & Ruuth SSPRK(5,4) convex combinations
constexpr double a10 = 0.391752226571890;

constexpr double b20 = 0.444370493651235;
constexpr double b21 = 0.555629506348765;
constexpr double a21 = 0.368410593050371;

constexpr double b30 = 0.620101851488403;
constexpr double b32 = 0.379898148511597;
constexpr double a32 = 0.251891774271694;

constexpr double b40 = 0.178079954393132;
constexpr double b43 = 0.821920045606868;
constexpr double a43 = 0.544974750228521;

constexpr double c52 = 0.517231671970585;
constexpr double c53 = 0.096059710526147;
constexpr double a53 = 0.063692468666290;
constexpr double c54 = 0.386708617503269;
constexpr double a54 = 0.226007483236906;

void combine2(StateField& out, double wa, const StateField& ua, double wb, const StateField& ub,
              double wr, const StateField& r, double dt) {
  const std::size_t n = ua.size();
  out.resize(n);
  const double wrdt = wr * dt;
  for (std::size_t i = 0; i < n; ++i)
    for (int v = 0; v < kNumVars; ++v) out[i][v] = wa * ua[i][v] + wb * ub[i][v] + wrdt * r[i][v];
}

}  // namespace

void ssp_rk4_step(StateField& u, double t, double dt, const RhsFn& rhs, SspRk4Workspace& ws) {
  // convex-combination weights must sum to one
  if (std::abs(b20 + b21 - 1.0) > 1e-12 || std::abs(b30 + b32 - 1.0) > 1e-12 ||
      std::abs(b40 + b43 - 1.0) > 1e-12 || std::abs(c52 + c53 + c54 - 1.0) > 1e-12)
    throw std::logic_error("ssp_rk4_step: stage weights do not sum to 1");

  const std::size_t n = u.size();
  ws.rhs.resize(n);

  // stage abscissae follow from the convex recursion
  const double t1 = t + a10 * dt;
  const double t2 = t + (b21 * a10 + a21) * dt;
  const double t3 = t + (b32 * (b21 * a10 + a21) + a32) * dt;
  const double t4 = t + (b43 * (b32 * (b21 * a10 + a21) + a32) + a43) * dt;

  rhs(u, t, ws.rhs);
  combine2(ws.ua, 1.0, u, 0.0, u, a10, ws.rhs, dt);

  rhs(ws.ua, t1, ws.rhs);
  combine2(ws.ub, b20, u, b21, ws.ua, a21, ws.rhs, dt);

  rhs(ws.ub, t2, ws.rhs);
  combine2(ws.uc, b30, u, b32, ws.ub, a32, ws.rhs, dt);

  rhs(ws.uc, t3, ws.rhs3);
  combine2(ws.ud, b40, u, b43, ws.uc, a43, ws.rhs3, dt);

  rhs(ws.ud, t4, ws.rhs);
  for (std::size_t i = 0; i < n; ++i)
    for (int v = 0; v < kNumVars; ++v)
      u[i][v] = c52 * ws.ub[i][v] + c53 * ws.uc[i][v] + a53 * dt * ws.rhs3[i][v] +
                c54 * ws.ud[i][v] + a54 * dt * ws.rhs[i][v];
}

}  // namespace ucfv
