#ifndef UCFV_EULER_HPP
#define UCFV_EULER_HPP

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ucfv/geometry.hpp"

namespace ucfv {

// Conserved variables (rho, rho*u, rho*v, E).
using State = std::array<double, 4>;

constexpr int kNumVars = 4;

struct NonPhysicalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GasModel {
  double gamma = 1.4;
};

struct Primitive {
  double rho, u, v, p;
};

inline double pressure(const State& s, double gamma) {
  return (gamma - 1.0) * (s[3] - 0.5 * (s[1] * s[1] + s[2] * s[2]) / s[0]);
}

inline bool is_physical(const State& s, double gamma) {
  return s[0] > 0.0 && pressure(s, gamma) > 0.0;
}

inline Primitive cons_to_prim(const State& s, double gamma) {
  if (!(s[0] > 0.0)) throw NonPhysicalError("non-physical state: rho = " + std::to_string(s[0]));
  const double u = s[1] / s[0];
  const double v = s[2] / s[0];
  const double p = (gamma - 1.0) * (s[3] - 0.5 * s[0] * (u * u + v * v));
  if (!(p > 0.0)) throw NonPhysicalError("non-physical state: p = " + std::to_string(p));
  return {s[0], u, v, p};
}

inline State prim_to_cons(const Primitive& w, double gamma) {
  return {w.rho, w.rho * w.u, w.rho * w.v,
          w.p / (gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v)};
}

inline double sound_speed(const Primitive& w, double gamma) {
  return std::sqrt(gamma * w.p / w.rho);
}

// Physical normal flux F_c(U) . n.
inline State physical_flux(const State& s, const Vec2& n, double gamma) {
  const double rho = s[0];
  const double u = s[1] / rho;
  const double v = s[2] / rho;
  const double p = (gamma - 1.0) * (s[3] - 0.5 * rho * (u * u + v * v));
  const double un = u * n.x + v * n.y;
  return {rho * un, s[1] * un + n.x * p, s[2] * un + n.y * p, (s[3] + p) * un};
}

// Mirror the normal velocity component (reflective wall ghost state).
inline State mirror_state(const State& s, const Vec2& n) {
  const double mn = s[1] * n.x + s[2] * n.y;
  return {s[0], s[1] - 2.0 * mn * n.x, s[2] - 2.0 * mn * n.y, s[3]};
}

// HLLC flux (Toro) with Davis wave-speed bounds; states rotated into the
// face frame and the flux rotated back.
State hllc_flux(const State& UL, const State& UR, const Vec2& n, double gamma);

// HLL flux with the same wave-speed bounds (no contact restoration).
State hll_flux(const State& UL, const State& UR, const Vec2& n, double gamma);

using FluxFn = State (*)(const State&, const State&, const Vec2&, double);

}  // namespace ucfv

#endif
