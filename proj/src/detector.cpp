#include "ucfv/detector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ucfv {

void validate_margins(const NadMargins& m) {
  if (m.alpha_m < 0.0 || m.beta_m < 0.0)
    throw std::invalid_argument("NAD margins: alpha_m and beta_m must be non-negative");
  if (m.beta_w > 0.0 && (m.beta_w > m.beta_m || m.alpha_w > m.alpha_m))
    throw std::invalid_argument(
        "NAD margins: delta_w <= delta_m requires beta_w <= beta_m and alpha_w <= alpha_m");
  if (m.kappa < 0.0) throw std::invalid_argument("NAD margins: kappa must be >= 0");
}

Margins compute_margins(const NadMargins& m, double du) {
  Margins out;
  out.delta_m = std::max(m.alpha_m, m.beta_m * du);
  const double sgn = (m.beta_w > 0.0) ? 1.0 : (m.beta_w < 0.0 ? -1.0 : 0.0);
  out.delta_w = sgn * std::max(m.alpha_w, std::abs(m.beta_w * du));
  return out;
}

Scheme classify_violation(double v, const Margins& m) {
  if (v > m.delta_m) return Scheme::Muscl;
  if (v > m.delta_w) return Scheme::Cwenoz;
  return Scheme::Linear;
}

bool deactivate_smooth(double du, double h_c, double kappa, double n) {
  if (kappa <= 0.0) return false;
  return du < std::pow(kappa * h_c, n);
}

std::vector<Scheme> spread_flags(const Mesh& mesh, const std::vector<Scheme>& in) {
  std::vector<Scheme> out = in;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const Scheme s = in[c];
    if (severity(s) == 0) continue;
    for (int fid : mesh.cells[c].face_ids) {
      const Face& f = mesh.faces[fid];
      int nb = -1;
      if (!f.is_boundary())
        nb = (f.left_cell == c) ? f.right_cell : f.left_cell;
      else if (f.is_periodic())
        nb = mesh.faces[f.periodic_partner].left_cell;
      if (nb >= 0 && severity(out[nb]) < severity(s)) out[nb] = s;
    }
  }
  return out;
}

}  // namespace ucfv
