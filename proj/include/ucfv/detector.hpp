#ifndef UCFV_DETECTOR_HPP
#define UCFV_DETECTOR_HPP

#include <cstdint>
#include <vector>

#include "ucfv/mesh.hpp"

namespace ucfv {

// Per-cell reconstruction scheme; the numbering is the export convention
// (0 Linear, 1 CWENOZ, 2 MUSCL, 3 first-order).
enum class Scheme : std::uint8_t { Linear = 0, Cwenoz = 1, Muscl = 2, FirstOrder = 3 };

// Severity used when spreading flags: Linear < CWENOZ < MUSCL.
inline int severity(Scheme s) {
  switch (s) {
    case Scheme::Linear: return 0;
    case Scheme::Cwenoz: return 1;
    default: return 2;
  }
}

struct NadMargins {
  double alpha_m = 1e-4;
  double beta_m = 0.5;
  double alpha_w = 0.0;
  double beta_w = 0.0;
  double kappa = 5.0;   // deactivation scale; 0 disables deactivation
  double deact_n = 2.0; // deactivation exponent
};

// Throws std::invalid_argument unless delta_w <= delta_m for every possible
// neighbourhood range.
void validate_margins(const NadMargins& m);

struct Margins {
  double delta_m;
  double delta_w;
};

// delta_m = max(alpha_m, beta_m*dU); delta_w = sign(beta_w)*max(alpha_w, |beta_w*dU|).
Margins compute_margins(const NadMargins& m, double du);

// violation v = max over qps of max(umin - uq, uq - umax); negative inside
// bounds. Band rule: v <= dw -> Linear, dw < v <= dm -> CWENOZ, v > dm -> MUSCL.
Scheme classify_violation(double v, const Margins& m);

// true when the neighbourhood range is below (kappa*h_c)^n (force Linear).
bool deactivate_smooth(double du, double h_c, double kappa, double n);

// One-pass Von Neumann spreading: each flagged cell raises its face
// neighbours to at least its own severity (reads `in`, never the output).
std::vector<Scheme> spread_flags(const Mesh& mesh, const std::vector<Scheme>& in);

}  // namespace ucfv

#endif
