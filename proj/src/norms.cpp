#include "ucfv/norms.hpp"

#include <cmath>

#include "ucfv/quadrature.hpp"

namespace ucfv {

ErrorReport compute_error_norms(const Mesh& mesh, const StateField& computed,
                                const std::function<State(const Vec2&)>& exact, int quad_degree) {
  ErrorReport rep;
  std::array<double, 4> l2sum{};
  double vol = 0.0;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const auto qp = polygon_quadrature(mesh.cell_polygon(c), quad_degree);
    State avg{};
    for (const auto& q : qp) {
      const State s = exact(q.p);
      for (int v = 0; v < kNumVars; ++v) avg[v] += q.w * s[v];
    }
    const double area = mesh.cells[c].area;
    vol += area;
    for (int v = 0; v < kNumVars; ++v) {
      const double diff = std::abs(avg[v] / area - computed[c][v]);
      rep.linf[v] = std::max(rep.linf[v], diff);
      l2sum[v] += area * diff * diff;
    }
  }
  for (int v = 0; v < kNumVars; ++v) rep.l2[v] = std::sqrt(l2sum[v] / vol);
  return rep;
}

}  // namespace ucfv
