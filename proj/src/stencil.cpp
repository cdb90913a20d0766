#include "ucfv/stencil.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "ucfv/quadrature.hpp"

namespace ucfv {

namespace {

struct EntryKey {
  int cell, px, py;
  bool operator<(const EntryKey& o) const {
    if (cell != o.cell) return cell < o.cell;
    if (px != o.px) return px < o.px;
    return py < o.py;
  }
};

Vec2 entry_centroid(const Mesh& mesh, const StencilEntry& e) {
  return mesh.cells[e.cell].centroid + Vec2{e.px * mesh.period_x, e.py * mesh.period_y};
}

}  // namespace

std::vector<StencilEntry> build_central_stencil(const Mesh& mesh, int cell, int M) {
  const Vec2 origin = mesh.cells[cell].centroid;
  std::vector<StencilEntry> stencil{{cell, 0, 0}};
  std::set<EntryKey> visited{{cell, 0, 0}};
  std::vector<StencilEntry> ring{{cell, 0, 0}};

  while (static_cast<int>(stencil.size()) < M + 1) {
    std::vector<StencilEntry> next;
    for (const StencilEntry& e : ring) {
      for (int fid : mesh.cells[e.cell].face_ids) {
        const Face& f = mesh.faces[fid];
        StencilEntry nb;
        if (!f.is_boundary()) {
          nb = {f.left_cell == e.cell ? f.right_cell : f.left_cell, e.px, e.py};
        } else if (f.is_periodic()) {
          nb = {mesh.faces[f.periodic_partner].left_cell, e.px + f.shift_ix, e.py + f.shift_iy};
        } else {
          continue;
        }
        if (visited.insert({nb.cell, nb.px, nb.py}).second) next.push_back(nb);
      }
    }
    if (next.empty())
      throw MeshError("stencil for cell " + std::to_string(cell) + ": mesh too small for " +
                      std::to_string(M + 1) + " cells");
    std::sort(next.begin(), next.end(), [&](const StencilEntry& a, const StencilEntry& b) {
      const double da = norm(entry_centroid(mesh, a) - origin);
      const double db = norm(entry_centroid(mesh, b) - origin);
      if (da != db) return da < db;
      if (a.cell != b.cell) return a.cell < b.cell;
      if (a.px != b.px) return a.px < b.px;
      return a.py < b.py;
    });
    for (const StencilEntry& e : next) {
      if (static_cast<int>(stencil.size()) >= M + 1) break;
      stencil.push_back(e);
    }
    ring = std::move(next);
  }
  return stencil;
}

std::vector<std::vector<int>> build_directional_stencils(const Mesh& mesh, int cell,
                                                         const std::vector<StencilEntry>& central,
                                                         int m_dir) {
  const Cell& c = mesh.cells[cell];
  const Vec2 origin = c.centroid;
  const int M = static_cast<int>(central.size()) - 1;

  // member directions and distances (skip self)
  std::vector<Vec2> dir(M);
  std::vector<double> dist(M);
  for (int m = 0; m < M; ++m) {
    dir[m] = entry_centroid(mesh, central[m + 1]) - origin;
    dist[m] = norm(dir[m]);
  }
  std::vector<int> by_dist(M);
  for (int m = 0; m < M; ++m) by_dist[m] = m;
  std::sort(by_dist.begin(), by_dist.end(), [&](int a, int b) {
    if (dist[a] != dist[b]) return dist[a] < dist[b];
    return a < b;
  });

  std::vector<std::vector<int>> out;
  const int nf = static_cast<int>(c.face_ids.size());
  for (int lf = 0; lf < nf; ++lf) {
    const Face& f = mesh.faces[c.face_ids[lf]];
    // face endpoints in the cell's CCW traversal order
    Vec2 a = mesh.vertices[f.vertex_ids[0]] - origin;
    Vec2 b = mesh.vertices[f.vertex_ids[1]] - origin;
    if (f.left_cell != cell) std::swap(a, b);

    std::vector<int> members{0};  // self
    for (int idx : by_dist) {
      if (static_cast<int>(members.size()) > m_dir) break;
      if (cross(a, dir[idx]) >= 0.0 && cross(dir[idx], b) >= 0.0)
        members.push_back(idx + 1);
    }
    for (int idx : by_dist) {  // fallback fill from nearest remaining
      if (static_cast<int>(members.size()) > m_dir) break;
      if (std::find(members.begin(), members.end(), idx + 1) == members.end())
        members.push_back(idx + 1);
    }
    out.push_back(std::move(members));
  }
  return out;
}

Polygon member_polygon_ref(const Mesh& mesh, int target_cell, const StencilEntry& e) {
  const Vec2 shift{e.px * mesh.period_x, e.py * mesh.period_y};
  const Cell& t = mesh.cells[target_cell];
  Polygon poly;
  poly.reserve(mesh.cells[e.cell].vertex_ids.size());
  for (int v : mesh.cells[e.cell].vertex_ids)
    poly.push_back((mesh.vertices[v] + shift - t.centroid) / t.h_c);
  return poly;
}

std::vector<double> assemble_lsq_rows(const Mesh& mesh, int cell,
                                      const std::vector<StencilEntry>& members,
                                      const BasisSet& basis, int n_cols) {
  // rows scaled by the member's reference measure so the right-hand side is
  // the plain average difference U_m - U_0
  const int rows = static_cast<int>(members.size()) - 1;
  const MonomialFamily& fam = basis.family();
  std::vector<double> A(static_cast<std::size_t>(rows) * n_cols, 0.0);
  std::vector<double> psi(fam.size());
  for (int m = 0; m < rows; ++m) {
    const Polygon poly = member_polygon_ref(mesh, cell, members[m + 1]);
    const double area = polygon_signed_area(poly);
    const auto qp = polygon_quadrature(poly, basis.order());
    double* row = &A[static_cast<std::size_t>(m) * n_cols];
    for (const auto& q : qp) {
      fam.eval_all(q.p, psi.data());
      for (int k = 0; k < n_cols; ++k) row[k] += q.w * (psi[k] - basis.means()[k]);
    }
    for (int k = 0; k < n_cols; ++k) row[k] /= area;
  }
  return A;
}

std::vector<double> invert_lsq(const std::vector<double>& A, int rows, int cols, int cell) {
  Eigen::MatrixXd M(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M(i, j) = A[static_cast<std::size_t>(i) * cols + j];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(M);
  if (qr.rank() < cols)
    throw MeshError("reconstruction stencil for cell " + std::to_string(cell) +
                    " is rank-deficient (rank " + std::to_string(qr.rank()) + " < " +
                    std::to_string(cols) + ")");
  const Eigen::MatrixXd pinv = qr.solve(Eigen::MatrixXd::Identity(rows, rows));
  std::vector<double> out(static_cast<std::size_t>(cols) * rows);
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < rows; ++j) out[static_cast<std::size_t>(i) * rows + j] = pinv(i, j);
  return out;
}

std::vector<double> precompute_oscillation_matrix(const BasisSet& basis, double h_c,
                                                  const Polygon& ref_cell, SiExponent exp_mode) {
  const MonomialFamily& fam = basis.family();
  const int K = fam.size();
  const int r = fam.order();
  std::vector<double> oi(static_cast<std::size_t>(K) * K, 0.0);
  const auto qp = polygon_quadrature(ref_cell, 2 * (r > 0 ? r : 1));
  std::vector<double> d(K);
  for (int b = 0; b < fam.n_derivs(); ++b) {
    const int btot = fam.beta(b)[0] + fam.beta(b)[1];
    const double hpow = (exp_mode == SiExponent::Paper) ? std::pow(std::abs(h_c), btot - 1)
                                                        : std::pow(std::abs(h_c), 2 * btot - 2);
    for (const auto& q : qp) {
      fam.eval_all_derivative(b, q.p, d.data());
      const double w = q.w * hpow;
      for (int k = 0; k < K; ++k) {
        const double wk = w * d[k];
        for (int l = 0; l < K; ++l) oi[static_cast<std::size_t>(k) * K + l] += wk * d[l];
      }
    }
  }
  return oi;
}

StencilSet build_stencils(const Mesh& mesh, int order, SiExponent exp_mode) {
  if (order < 1) throw std::invalid_argument("build_stencils: order must be >= 1");
  StencilSet set;
  set.order = order;
  set.K = static_cast<int>(count_dofs(order, 2)) - 1;
  set.n_qp = (order + 2) / 2;  // ceil((r+1)/2)
  set.si_exponent = exp_mode;
  const int M_target = 2 * set.K;
  const int m_dir = 4;  // 2 * K_dir with K_dir = 2 (r = 1 directional polynomials)

  set.cells.resize(mesh.n_cells());
  set.cell_phi.resize(mesh.n_cells());
  set.cell_qp_slot.resize(mesh.n_cells());

  for (int c = 0; c < mesh.n_cells(); ++c) {
    CellStencil& cs = set.cells[c];
    const Polygon ref_poly = member_polygon_ref(mesh, c, {c, 0, 0});
    cs.basis = build_basis(order, ref_poly);

    // central stencil with rank-deficiency retries (one ring at a time)
    int M = M_target;
    for (int attempt = 0;; ++attempt) {
      cs.central = build_central_stencil(mesh, c, M);
      const auto A = assemble_lsq_rows(mesh, c, cs.central, cs.basis, set.K);
      try {
        cs.pinv = invert_lsq(A, M, set.K, c);
        // r=1 sub-solve on the same stencil rows (first two basis columns)
        std::vector<double> A1(static_cast<std::size_t>(M) * 2);
        for (int m = 0; m < M; ++m) {
          A1[m * 2 + 0] = A[static_cast<std::size_t>(m) * set.K + 0];
          A1[m * 2 + 1] = A[static_cast<std::size_t>(m) * set.K + 1];
        }
        cs.pinv_linear = invert_lsq(A1, M, 2, c);
        break;
      } catch (const MeshError&) {
        if (attempt >= 2) throw;
        M += std::max(4, M / 2);  // roughly one more BFS ring
      }
    }
    const int Mfinal = cs.M();

    // directional stencils; grow past m_dir if a sector system is singular
    cs.directional = build_directional_stencils(mesh, c, cs.central, m_dir);
    for (auto& members : cs.directional) {
      int take = static_cast<int>(members.size());
      for (;; ++take) {
        std::vector<StencilEntry> sub;
        for (int i = 0; i < std::min(take, static_cast<int>(members.size())); ++i)
          sub.push_back(cs.central[members[i]]);
        const int rows = static_cast<int>(sub.size()) - 1;
        const auto A = assemble_lsq_rows(mesh, c, sub, cs.basis, 2);
        try {
          cs.pinv_dir.push_back(invert_lsq(A, rows, 2, c));
          members.resize(sub.size());
          break;
        } catch (const MeshError&) {
          if (take >= Mfinal + 1) throw;
          // pull the next nearest central member not yet included
          for (int cand = 1; cand <= Mfinal; ++cand) {
            if (std::find(members.begin(), members.end(), cand) == members.end()) {
              members.push_back(cand);
              break;
            }
          }
        }
      }
    }

    cs.oi = precompute_oscillation_matrix(cs.basis, mesh.cells[c].h_c, ref_poly, exp_mode);

    // phi tables at the cell's own face quadrature points
    const Cell& cell = mesh.cells[c];
    const int nf = static_cast<int>(cell.face_ids.size());
    auto& phi = set.cell_phi[c];
    auto& slots = set.cell_qp_slot[c];
    phi.resize(static_cast<std::size_t>(nf) * set.n_qp * set.K);
    slots.resize(static_cast<std::size_t>(nf) * set.n_qp);
    std::vector<double> psi(set.K);
    int local = 0;
    for (int lf = 0; lf < nf; ++lf) {
      const Face& f = mesh.faces[cell.face_ids[lf]];
      const int side = (f.left_cell == c) ? 0 : 1;
      for (int q = 0; q < set.n_qp; ++q, ++local) {
        const Vec2 xi = mesh.to_ref(c, f.quad_points[q]);
        cs.basis.family().eval_all(xi, psi.data());
        double* dst = &phi[static_cast<std::size_t>(local) * set.K];
        for (int k = 0; k < set.K; ++k) dst[k] = psi[k] - cs.basis.means()[k];
        slots[local] = (cell.face_ids[lf] * set.n_qp + q) * 2 + side;
      }
    }
  }
  return set;
}

}  // namespace ucfv
