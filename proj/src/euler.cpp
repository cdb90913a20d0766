#include "ucfv/euler.hpp"

#include <algorithm>

namespace ucfv {

namespace {

struct FaceFrame {
  double rho, un, ut, p, E, a;
};

inline FaceFrame rotate_in(const State& s, const Vec2& n, double gamma) {
  const Primitive w = cons_to_prim(s, gamma);
  FaceFrame f;
  f.rho = w.rho;
  f.un = w.u * n.x + w.v * n.y;
  f.ut = -w.u * n.y + w.v * n.x;
  f.p = w.p;
  f.E = s[3];
  f.a = std::sqrt(gamma * w.p / w.rho);
  return f;
}

// 1D flux in the face frame: components (rho, rho un, rho ut, E)
inline State frame_flux(const FaceFrame& f) {
  return {f.rho * f.un, f.rho * f.un * f.un + f.p, f.rho * f.un * f.ut, (f.E + f.p) * f.un};
}

inline State frame_cons(const FaceFrame& f) {
  return {f.rho, f.rho * f.un, f.rho * f.ut, f.E};
}

inline State rotate_out(const State& ff, const Vec2& n) {
  return {ff[0], ff[1] * n.x - ff[2] * n.y, ff[1] * n.y + ff[2] * n.x, ff[3]};
}

}  // namespace

State hllc_flux(const State& UL, const State& UR, const Vec2& n, double gamma) {
  const FaceFrame L = rotate_in(UL, n, gamma);
  const FaceFrame R = rotate_in(UR, n, gamma);

  const double SL = std::min(L.un - L.a, R.un - R.a);
  const double SR = std::max(L.un + L.a, R.un + R.a);

  if (SL >= 0.0) return rotate_out(frame_flux(L), n);
  if (SR <= 0.0) return rotate_out(frame_flux(R), n);

  const double dL = L.rho * (SL - L.un);
  const double dR = R.rho * (SR - R.un);
  const double Sstar = (R.p - L.p + L.un * dL - R.un * dR) / (dL - dR);

  const FaceFrame& K = (Sstar >= 0.0) ? L : R;
  const double SK = (Sstar >= 0.0) ? SL : SR;
  const State WK = frame_cons(K);
  const State FK = frame_flux(K);

  const double coef = K.rho * (SK - K.un) / (SK - Sstar);
  State Wstar;
  Wstar[0] = coef;
  Wstar[1] = coef * Sstar;
  Wstar[2] = coef * K.ut;
  Wstar[3] = coef * (WK[3] / K.rho + (Sstar - K.un) * (Sstar + K.p / (K.rho * (SK - K.un))));

  State ff;
  for (int v = 0; v < kNumVars; ++v) ff[v] = FK[v] + SK * (Wstar[v] - WK[v]);
  return rotate_out(ff, n);
}

State hll_flux(const State& UL, const State& UR, const Vec2& n, double gamma) {
  const FaceFrame L = rotate_in(UL, n, gamma);
  const FaceFrame R = rotate_in(UR, n, gamma);

  const double SL = std::min(L.un - L.a, R.un - R.a);
  const double SR = std::max(L.un + L.a, R.un + R.a);

  if (SL >= 0.0) return rotate_out(frame_flux(L), n);
  if (SR <= 0.0) return rotate_out(frame_flux(R), n);

  const State FL = frame_flux(L);
  const State FR = frame_flux(R);
  const State WL = frame_cons(L);
  const State WR = frame_cons(R);
  State ff;
  for (int v = 0; v < kNumVars; ++v)
    ff[v] = (SR * FL[v] - SL * FR[v] + SL * SR * (WR[v] - WL[v])) / (SR - SL);
  return rotate_out(ff, n);
}

}  // namespace ucfv
