#ifndef UCFV_NORMS_HPP
#define UCFV_NORMS_HPP

#include <array>
#include <functional>

#include "ucfv/mesh.hpp"
#include "ucfv/time_integrator.hpp"

namespace ucfv {

struct ErrorReport {
  std::array<double, 4> linf{};
  std::array<double, 4> l2{};
};

// L-inf over cell-average differences; volume-weighted L2 of the same
// differences (the exact field is cell-averaged by quadrature).
ErrorReport compute_error_norms(const Mesh& mesh, const StateField& computed,
                                const std::function<State(const Vec2&)>& exact, int quad_degree);

// order between consecutive errors under 2x refinement
inline double convergence_order(double coarse, double fine) {
  return std::log2(coarse / fine);
}

}  // namespace ucfv

#endif
