#include "ucfv/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "ucfv/quadrature.hpp"

namespace ucfv {

int Mesh::patch_index(const std::string& name) const {
  for (std::size_t i = 0; i < patch_names.size(); ++i)
    if (patch_names[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> face_neighbors(const Mesh& mesh, int cell) {
  std::vector<int> out;
  for (int fid : mesh.cells[cell].face_ids) {
    const Face& f = mesh.faces[fid];
    if (!f.is_boundary()) {
      out.push_back(f.left_cell == cell ? f.right_cell : f.left_cell);
    } else if (f.is_periodic()) {
      out.push_back(mesh.faces[f.periodic_partner].left_cell);
    }
  }
  return out;
}

Mesh assemble_mesh(std::vector<Vec2> vertices, std::vector<std::vector<int>> cell_vertices,
                   int nqp) {
  Mesh mesh;
  mesh.vertices = std::move(vertices);
  const int nv = static_cast<int>(mesh.vertices.size());

  mesh.cells.resize(cell_vertices.size());
  for (std::size_t c = 0; c < cell_vertices.size(); ++c) {
    Cell& cell = mesh.cells[c];
    cell.vertex_ids = std::move(cell_vertices[c]);
    if (cell.vertex_ids.size() < 3)
      throw MeshError("cell " + std::to_string(c) + ": fewer than 3 vertices");
    for (int v : cell.vertex_ids) {
      if (v < 0 || v >= nv)
        throw MeshError("cell " + std::to_string(c) + ": dangling vertex id " + std::to_string(v));
    }
    Polygon poly;
    for (int v : cell.vertex_ids) poly.push_back(mesh.vertices[v]);
    const double area = polygon_signed_area(poly);
    if (!(area > 0.0))
      throw MeshError("cell " + std::to_string(c) + ": non-positive area " + std::to_string(area) +
                      " (vertices must be counter-clockwise)");
    cell.area = area;
    cell.h_c = std::sqrt(area);
    cell.centroid = polygon_centroid(poly);
  }

  // faces from cell edges; first owner becomes the left cell
  std::map<std::pair<int, int>, int> edge_to_face;
  for (int c = 0; c < mesh.n_cells(); ++c) {
    Cell& cell = mesh.cells[c];
    const int k = static_cast<int>(cell.vertex_ids.size());
    for (int e = 0; e < k; ++e) {
      const int a = cell.vertex_ids[e];
      const int b = cell.vertex_ids[(e + 1) % k];
      const auto key = std::minmax(a, b);
      auto it = edge_to_face.find(key);
      if (it == edge_to_face.end()) {
        Face f;
        f.vertex_ids = {a, b};  // as traversed CCW by the left cell
        f.left_cell = c;
        const Vec2 d = mesh.vertices[b] - mesh.vertices[a];
        f.length = norm(d);
        if (!(f.length > 0.0))
          throw MeshError("cell " + std::to_string(c) + ": zero-length edge");
        f.normal = Vec2{d.y, -d.x} / f.length;  // outward of the left cell
        f.midpoint = 0.5 * (mesh.vertices[a] + mesh.vertices[b]);
        const auto fq = segment_quadrature(mesh.vertices[a], mesh.vertices[b], nqp);
        f.quad_points = fq.points;
        f.quad_weights = fq.weights;
        const int fid = mesh.n_faces();
        mesh.faces.push_back(std::move(f));
        edge_to_face.emplace(key, fid);
        cell.face_ids.push_back(fid);
      } else {
        Face& f = mesh.faces[it->second];
        if (f.right_cell >= 0)
          throw MeshError("non-conforming connectivity: edge (" + std::to_string(key.first) + "," +
                          std::to_string(key.second) + ") shared by more than two cells");
        f.right_cell = c;
        cell.face_ids.push_back(it->second);
      }
    }
  }
  return mesh;
}

namespace {

struct GridBuilder {
  int nx, ny;
  Rect dom;
  std::vector<Vec2> verts;

  GridBuilder(int nx_, int ny_, const Rect& d) : nx(nx_), ny(ny_), dom(d) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("mesh generator: nx, ny must be >= 1");
    if (!(dom.width() > 0.0) || !(dom.height() > 0.0))
      throw std::invalid_argument("mesh generator: zero-size domain");
    verts.reserve((nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j)
      for (int i = 0; i <= nx; ++i)
        verts.push_back({dom.x0 + dom.width() * i / nx, dom.y0 + dom.height() * j / ny});
  }
  int vid(int i, int j) const { return j * (nx + 1) + i; }
};

// Tag boundary faces of a rectangle with left/right/bottom/top patches.
void tag_rect_patches(Mesh& mesh, const Rect& dom) {
  mesh.patch_names = {"left", "right", "bottom", "top"};
  const double tol = 1e-9 * std::max(dom.width(), dom.height());
  for (Face& f : mesh.faces) {
    if (!f.is_boundary()) continue;
    if (std::abs(f.midpoint.x - dom.x0) < tol)
      f.patch = 0;
    else if (std::abs(f.midpoint.x - dom.x1) < tol)
      f.patch = 1;
    else if (std::abs(f.midpoint.y - dom.y0) < tol)
      f.patch = 2;
    else if (std::abs(f.midpoint.y - dom.y1) < tol)
      f.patch = 3;
  }
}

}  // namespace

Mesh generate_structured_tri(int nx, int ny, const Rect& domain, DiagonalRule rule, int nqp) {
  GridBuilder g(nx, ny, domain);
  std::vector<std::vector<int>> cells;
  cells.reserve(2 * static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int v00 = g.vid(i, j), v10 = g.vid(i + 1, j);
      const int v11 = g.vid(i + 1, j + 1), v01 = g.vid(i, j + 1);
      const bool flip = (rule == DiagonalRule::Alternating) && ((i + j) % 2 == 1);
      if (!flip) {
        cells.push_back({v00, v10, v11});
        cells.push_back({v00, v11, v01});
      } else {
        cells.push_back({v00, v10, v01});
        cells.push_back({v10, v11, v01});
      }
    }
  }
  Mesh mesh = assemble_mesh(std::move(g.verts), std::move(cells), nqp);
  tag_rect_patches(mesh, domain);
  return mesh;
}

Mesh generate_structured_quad(int nx, int ny, const Rect& domain, int nqp) {
  GridBuilder g(nx, ny, domain);
  std::vector<std::vector<int>> cells;
  cells.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i)
      cells.push_back({g.vid(i, j), g.vid(i + 1, j), g.vid(i + 1, j + 1), g.vid(i, j + 1)});
  Mesh mesh = assemble_mesh(std::move(g.verts), std::move(cells), nqp);
  tag_rect_patches(mesh, domain);
  return mesh;
}

Mesh generate_dmr_mesh(int cells_per_unit, int nqp) {
  const Rect dom{0.0, 0.0, 4.0, 1.0};
  const int nx = 4 * cells_per_unit;
  const int ny = cells_per_unit;
  GridBuilder g(nx, ny, dom);
  std::vector<std::vector<int>> cells;
  for (int j = 0; j < ny; ++j) {
    const double yc = dom.y0 + dom.height() * (j + 0.5) / ny;
    for (int i = 0; i < nx; ++i) {
      const int v00 = g.vid(i, j), v10 = g.vid(i + 1, j);
      const int v11 = g.vid(i + 1, j + 1), v01 = g.vid(i, j + 1);
      if (yc < 0.5) {
        if ((i + j) % 2 == 0) {
          cells.push_back({v00, v10, v11});
          cells.push_back({v00, v11, v01});
        } else {
          cells.push_back({v00, v10, v01});
          cells.push_back({v10, v11, v01});
        }
      } else {
        cells.push_back({v00, v10, v11, v01});
      }
    }
  }
  Mesh mesh = assemble_mesh(std::move(g.verts), std::move(cells), nqp);
  tag_rect_patches(mesh, dom);
  return mesh;
}

Mesh generate_ffs_mesh(int cells_per_unit, int nqp) {
  const Rect dom{0.0, 0.0, 3.0, 1.0};
  const double step_x = 0.6, step_y = 0.2, fillet_r = 0.003;
  const int nx = 3 * cells_per_unit;
  const int ny = cells_per_unit;
  const double hx = dom.width() / nx;
  const double hy = dom.height() / ny;
  const int ix_step = static_cast<int>(std::lround(step_x / hx));
  const int iy_step = static_cast<int>(std::lround(step_y / hy));
  if (std::abs(ix_step * hx - step_x) > 1e-12 || std::abs(iy_step * hy - step_y) > 1e-12)
    throw std::invalid_argument("generate_ffs_mesh: resolution must align with the step corner");
  if (fillet_r >= std::min(hx, hy))
    throw std::invalid_argument("generate_ffs_mesh: cell size must exceed the fillet radius");

  GridBuilder g(nx, ny, dom);
  std::vector<Vec2> verts = g.verts;
  std::vector<std::vector<int>> cells;
  const int corner_i = ix_step - 1;  // grid cell touching the corner from the fluid side
  const int corner_j = iy_step;

  // arc vertices replacing the corner (0.6, 0.2): quarter circle centred at
  // (0.6 - r, 0.2 + r) from (0.6 - r, 0.2) to (0.6, 0.2 + r)
  const int n_arc = 8;
  std::vector<int> arc_ids;
  const Vec2 ctr{step_x - fillet_r, step_y + fillet_r};
  for (int s = 0; s <= n_arc; ++s) {
    const double ang = -M_PI / 2.0 + (M_PI / 2.0) * s / n_arc;
    verts.push_back({ctr.x + fillet_r * std::cos(ang), ctr.y + fillet_r * std::sin(ang)});
    arc_ids.push_back(static_cast<int>(verts.size()) - 1);
  }

  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      if (i >= ix_step && j < iy_step) continue;  // inside the step
      const int v00 = g.vid(i, j), v10 = g.vid(i + 1, j);
      const int v11 = g.vid(i + 1, j + 1), v01 = g.vid(i, j + 1);
      if (i == corner_i && j == corner_j) {
        // fan the filleted cell from its far corner
        std::vector<int> loop = {v00};
        for (int id : arc_ids) loop.push_back(id);
        loop.push_back(v11);
        loop.push_back(v01);
        for (std::size_t t = 0; t + 1 < loop.size(); ++t) {
          if (loop[t] == v01 || loop[t + 1] == v01) continue;
          cells.push_back({v01, loop[t], loop[t + 1]});
        }
      } else {
        cells.push_back({v00, v10, v11, v01});
      }
    }
  }
  Mesh mesh = assemble_mesh(std::move(verts), std::move(cells), nqp);

  mesh.patch_names = {"inflow", "outflow", "wall"};
  const double tol = 1e-9;
  for (Face& f : mesh.faces) {
    if (!f.is_boundary()) continue;
    if (std::abs(f.midpoint.x - dom.x0) < tol)
      f.patch = 0;
    else if (std::abs(f.midpoint.x - dom.x1) < tol)
      f.patch = 1;
    else
      f.patch = 2;  // floor, ceiling, step sides, fillet arc
  }
  return mesh;
}

Mesh read_mesh(const std::string& path, int nqp) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file: " + path);
  return read_mesh_stream(in, path, nqp);
}

Mesh read_mesh_stream(std::istream& in, const std::string& origin, int nqp) {
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> MeshError {
    return MeshError(origin + ":" + std::to_string(lineno) + ": " + msg);
  };
  auto next_line = [&](std::string& line) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };

  std::string line;
  if (!next_line(line) || line != "ucfv-mesh 2d") throw fail("expected header 'ucfv-mesh 2d'");

  if (!next_line(line)) throw fail("expected 'vertices N'");
  std::istringstream hs(line);
  std::string kw;
  long nv = 0;
  if (!(hs >> kw >> nv) || kw != "vertices" || nv < 3) throw fail("expected 'vertices N'");
  std::vector<Vec2> verts;
  verts.reserve(nv);
  for (long i = 0; i < nv; ++i) {
    if (!next_line(line)) throw fail("unexpected end of file in vertex list");
    std::istringstream vs(line);
    Vec2 v;
    if (!(vs >> v.x >> v.y)) throw fail("malformed vertex line");
    verts.push_back(v);
  }

  if (!next_line(line)) throw fail("expected 'cells M'");
  std::istringstream cs(line);
  long nc = 0;
  if (!(cs >> kw >> nc) || kw != "cells" || nc < 1) throw fail("expected 'cells M'");
  std::vector<std::vector<int>> cells;
  cells.reserve(nc);
  for (long i = 0; i < nc; ++i) {
    if (!next_line(line)) throw fail("unexpected end of file in cell list");
    std::istringstream ls(line);
    int k = 0;
    if (!(ls >> k) || k < 3) throw fail("malformed cell line");
    std::vector<int> vids(k);
    for (int t = 0; t < k; ++t)
      if (!(ls >> vids[t])) throw fail("cell line lists fewer vertices than its count");
    cells.push_back(std::move(vids));
  }

  // optional patch blocks
  std::vector<std::pair<std::string, std::vector<std::array<int, 2>>>> patches;
  while (next_line(line)) {
    std::istringstream ps(line);
    std::string first;
    ps >> first;
    if (first == "patch") {
      std::string name;
      if (!(ps >> name)) throw fail("patch block missing a name");
      patches.push_back({name, {}});
    } else {
      if (patches.empty()) throw fail("edge line outside a patch block");
      std::istringstream es(line);
      int a, b;
      if (!(es >> a >> b)) throw fail("malformed patch edge line");
      patches.back().second.push_back({a, b});
    }
  }

  Mesh mesh = assemble_mesh(std::move(verts), std::move(cells), nqp);

  for (const auto& [name, edges] : patches) {
    mesh.patch_names.push_back(name);
    const int pid = static_cast<int>(mesh.patch_names.size()) - 1;
    for (const auto& e : edges) {
      bool found = false;
      for (Face& f : mesh.faces) {
        if (!f.is_boundary()) continue;
        if ((f.vertex_ids[0] == e[0] && f.vertex_ids[1] == e[1]) ||
            (f.vertex_ids[0] == e[1] && f.vertex_ids[1] == e[0])) {
          f.patch = pid;
          found = true;
          break;
        }
      }
      if (!found)
        throw MeshError(origin + ": patch '" + name + "': edge (" + std::to_string(e[0]) + "," +
                        std::to_string(e[1]) + ") is not a boundary face");
    }
  }

  validate_mesh(mesh);
  return mesh;
}

Mesh pair_periodic(Mesh mesh, Axis axis, double tol) {
  if (axis == Axis::Both) {
    mesh = pair_periodic(std::move(mesh), Axis::X, tol);
    return pair_periodic(std::move(mesh), Axis::Y, tol);
  }

  double lo = 1e300, hi = -1e300;
  for (const Vec2& v : mesh.vertices) {
    const double c = (axis == Axis::X) ? v.x : v.y;
    lo = std::min(lo, c);
    hi = std::max(hi, c);
  }
  const double period = hi - lo;
  if (axis == Axis::X)
    mesh.period_x = period;
  else
    mesh.period_y = period;

  std::vector<int> low_faces, high_faces;
  for (int fid = 0; fid < mesh.n_faces(); ++fid) {
    const Face& f = mesh.faces[fid];
    if (!f.is_boundary() || f.is_periodic()) continue;
    const double c = (axis == Axis::X) ? f.midpoint.x : f.midpoint.y;
    if (std::abs(c - lo) < tol)
      low_faces.push_back(fid);
    else if (std::abs(c - hi) < tol)
      high_faces.push_back(fid);
  }
  if (low_faces.size() != high_faces.size())
    throw MeshError("pair_periodic: side face counts differ (" + std::to_string(low_faces.size()) +
                    " vs " + std::to_string(high_faces.size()) + ")");

  const Vec2 offset = (axis == Axis::X) ? Vec2{period, 0.0} : Vec2{0.0, period};
  for (int lf : low_faces) {
    Face& a = mesh.faces[lf];
    const Vec2 want = a.midpoint + offset;
    int match = -1;
    for (int hf : high_faces) {
      const Face& b = mesh.faces[hf];
      if (b.is_periodic()) continue;
      if (norm(b.midpoint - want) < tol) {
        match = hf;
        break;
      }
    }
    if (match < 0)
      throw MeshError("pair_periodic: unmatched boundary face at centroid (" +
                      std::to_string(a.midpoint.x) + ", " + std::to_string(a.midpoint.y) + ")");
    Face& b = mesh.faces[match];
    if (std::abs(a.length - b.length) > 1e-10)
      throw MeshError("pair_periodic: paired faces differ in length");
    a.periodic_partner = match;
    b.periodic_partner = lf;
    // this-face position = partner position + shift * period
    if (axis == Axis::X) {
      a.shift_ix = -1;
      b.shift_ix = +1;
    } else {
      a.shift_iy = -1;
      b.shift_iy = +1;
    }
    // match quadrature points across the pair
    a.partner_qp.assign(a.quad_points.size(), -1);
    b.partner_qp.assign(b.quad_points.size(), -1);
    for (std::size_t i = 0; i < a.quad_points.size(); ++i) {
      const Vec2 target = a.quad_points[i] + offset;
      for (std::size_t j = 0; j < b.quad_points.size(); ++j) {
        if (norm(b.quad_points[j] - target) < tol) {
          a.partner_qp[i] = static_cast<int>(j);
          b.partner_qp[j] = static_cast<int>(i);
          break;
        }
      }
      if (a.partner_qp[i] < 0)
        throw MeshError("pair_periodic: quadrature points of paired faces do not align");
    }
  }
  return mesh;
}

void validate_mesh(const Mesh& mesh) {
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const Cell& cell = mesh.cells[c];
    if (!(cell.area > 0.0)) throw MeshError("cell " + std::to_string(c) + ": non-positive area");
    Vec2 closure{0.0, 0.0};
    double perim = 0.0;
    for (int fid : cell.face_ids) {
      const Face& f = mesh.faces[fid];
      const double sgn = (f.left_cell == c) ? 1.0 : -1.0;
      closure += sgn * f.length * f.normal;
      perim += f.length;
    }
    if (norm(closure) > 1e-12 * perim)
      throw MeshError("cell " + std::to_string(c) + ": face normals do not close");
  }
  for (int fid = 0; fid < mesh.n_faces(); ++fid) {
    const Face& f = mesh.faces[fid];
    if (f.left_cell < 0) throw MeshError("face " + std::to_string(fid) + ": no left cell");
    if (std::abs(norm(f.normal) - 1.0) > 1e-12)
      throw MeshError("face " + std::to_string(fid) + ": normal not unit length");
    double wsum = 0.0;
    for (double w : f.quad_weights) wsum += w;
    if (std::abs(wsum - 1.0) > 1e-12)
      throw MeshError("face " + std::to_string(fid) + ": quadrature weights do not sum to 1");
    if (f.is_periodic()) {
      const Face& p = mesh.faces[f.periodic_partner];
      if (p.periodic_partner != fid)
        throw MeshError("face " + std::to_string(fid) + ": periodic pairing is not an involution");
      if (std::abs(f.length - p.length) > 1e-10)
        throw MeshError("face " + std::to_string(fid) + ": periodic pair length mismatch");
    }
  }
}

}  // namespace ucfv
