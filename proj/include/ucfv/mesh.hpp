#ifndef UCFV_MESH_HPP
#define UCFV_MESH_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "ucfv/geometry.hpp"

namespace ucfv {

struct MeshError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Cell {
  std::vector<int> vertex_ids;  // counter-clockwise
  std::vector<int> face_ids;
  Vec2 centroid;
  double area = 0.0;
  double h_c = 0.0;  // sqrt(area); reference transform is (x - centroid)/h_c
};

struct Face {
  std::array<int, 2> vertex_ids{-1, -1};
  int left_cell = -1;
  int right_cell = -1;  // -1 on boundary faces
  Vec2 normal;          // unit, oriented left -> right (outward on boundaries)
  double length = 0.0;
  Vec2 midpoint;
  std::vector<Vec2> quad_points;     // physical positions
  std::vector<double> quad_weights;  // normalized, sum to 1
  int patch = -1;                    // boundary patch index, -1 if interior

  // periodic pairing (boundary faces only)
  int periodic_partner = -1;
  int shift_ix = 0;  // this face position = partner position + shift*(period)
  int shift_iy = 0;
  std::vector<int> partner_qp;  // partner qp index matching each local qp

  bool is_boundary() const { return right_cell < 0; }
  bool is_periodic() const { return periodic_partner >= 0; }
};

struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 1.0, y1 = 1.0;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
};

enum class DiagonalRule { Uniform, Alternating };
enum class Axis { X, Y, Both };

struct Mesh {
  std::vector<Vec2> vertices;
  std::vector<Cell> cells;
  std::vector<Face> faces;
  std::vector<std::string> patch_names;
  double period_x = 0.0;  // set by pair_periodic
  double period_y = 0.0;

  int n_cells() const { return static_cast<int>(cells.size()); }
  int n_faces() const { return static_cast<int>(faces.size()); }

  Vec2 to_ref(int cell, const Vec2& p) const {
    const Cell& c = cells[cell];
    return (p - c.centroid) / c.h_c;
  }

  Polygon cell_polygon(int cell) const {
    Polygon poly;
    poly.reserve(cells[cell].vertex_ids.size());
    for (int v : cells[cell].vertex_ids) poly.push_back(vertices[v]);
    return poly;
  }

  Vec2 periodic_shift(const Face& f) const {
    return {f.shift_ix * period_x, f.shift_iy * period_y};
  }

  int patch_index(const std::string& name) const;
};

// Face-adjacent cells, traversing periodic pairs.
std::vector<int> face_neighbors(const Mesh& mesh, int cell);

// Structured generators on a rectangle. `nqp` Gauss points per face.
Mesh generate_structured_tri(int nx, int ny, const Rect& domain, DiagonalRule rule, int nqp);
Mesh generate_structured_quad(int nx, int ny, const Rect& domain, int nqp);

// Benchmark-specific meshes (see harness): triangles below y=0.5 and a quad
// band above for the wedge-frame domain; forward-facing step with a rounded
// corner (radius 0.003, >= 8 arc segments).
Mesh generate_dmr_mesh(int cells_per_unit, int nqp);
Mesh generate_ffs_mesh(int cells_per_unit, int nqp);

// Native text format reader ("ucfv-mesh 2d" header).
Mesh read_mesh(const std::string& path, int nqp);
Mesh read_mesh_stream(std::istream& in, const std::string& origin, int nqp);

// Pair opposing boundary faces translationally; throws on unmatched faces.
Mesh pair_periodic(Mesh mesh, Axis axis, double tol);

// Build connectivity/geometry from vertices + cell vertex lists; used by
// generators and the reader.  Throws MeshError naming the offending entity.
Mesh assemble_mesh(std::vector<Vec2> vertices, std::vector<std::vector<int>> cell_vertices,
                   int nqp);

// Check every Mesh invariant; throws MeshError on violation.
void validate_mesh(const Mesh& mesh);

}  // namespace ucfv

#endif
