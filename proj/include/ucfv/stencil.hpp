#ifndef UCFV_STENCIL_HPP
#define UCFV_STENCIL_HPP

#include <vector>

#include "ucfv/basis.hpp"
#include "ucfv/mesh.hpp"

namespace ucfv {

// Oscillation-indicator scaling: the printed |h_c|^(|beta|-1) or the
// |h_c|^(2|beta|-d) variant used by some predecessors.
enum class SiExponent { Paper, Legacy };

// Stencil member: cell index plus periodic period counts, so the member's
// geometry lives at (position + px*period_x, py*period_y).
struct StencilEntry {
  int cell;
  int px = 0;
  int py = 0;
  bool operator==(const StencilEntry&) const = default;
};

struct CellStencil {
  std::vector<StencilEntry> central;          // self first, M+1 entries
  std::vector<std::vector<int>> directional;  // per face: indices into `central`, self (0) first
  std::vector<double> pinv;                   // K x M, row-major
  std::vector<double> pinv_linear;            // 2 x M (r=1 sub-solve, same stencil)
  std::vector<std::vector<double>> pinv_dir;  // per directional stencil: 2 x M_dir
  std::vector<double> oi;                     // K x K oscillation-indication matrix
  BasisSet basis;

  int M() const { return static_cast<int>(central.size()) - 1; }
};

struct StencilSet {
  int order = 1;
  int K = 0;
  int n_qp = 1;  // Gauss points per face
  SiExponent si_exponent = SiExponent::Paper;
  std::vector<CellStencil> cells;

  // phi_k of the owning cell at each of its face quadrature points:
  // cell_phi[c] holds, for local qp index q (faces in cell order, qp-major
  // within a face), K contiguous values.
  std::vector<std::vector<double>> cell_phi;
  // global value slot per local qp: slot = face*n_qp + qp, sign encodes side
  // (even: left array, odd: right array); see solver.
  std::vector<std::vector<int>> cell_qp_slot;
};

// Breadth-first central stencil: self first, rings sorted by centroid
// distance, truncated at M+1 entries. Throws when the mesh cannot supply
// M+1 distinct members.
std::vector<StencilEntry> build_central_stencil(const Mesh& mesh, int cell, int M);

// One directional stencil per face; each is {0} plus indices into `central`
// of the nearest members inside the face's angular sector, falling back to
// nearest remaining members when a sector is underfilled.
std::vector<std::vector<int>> build_directional_stencils(const Mesh& mesh, int cell,
                                                         const std::vector<StencilEntry>& central,
                                                         int m_dir);

// Polygon of a stencil member in the target cell's reference frame.
Polygon member_polygon_ref(const Mesh& mesh, int target_cell, const StencilEntry& e);

// Least-squares matrix A (rows: stencil members after self; columns: basis
// functions, scaled by member reference area) and its K x M left
// pseudo-inverse via Householder QR. Throws on rank deficiency.
std::vector<double> assemble_lsq_rows(const Mesh& mesh, int cell,
                                      const std::vector<StencilEntry>& members,
                                      const BasisSet& basis, int n_cols);
std::vector<double> invert_lsq(const std::vector<double>& A, int rows, int cols, int cell);

// OI_kq = sum_beta int_V0 h^pow (D^beta phi_k)(D^beta phi_q) dV.
std::vector<double> precompute_oscillation_matrix(const BasisSet& basis, double h_c,
                                                  const Polygon& ref_cell, SiExponent exp_mode);

// Full per-cell precompute for a mesh at reconstruction order `order`.
StencilSet build_stencils(const Mesh& mesh, int order, SiExponent exp_mode = SiExponent::Paper);

}  // namespace ucfv

#endif
