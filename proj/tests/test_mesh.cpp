#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "ucfv/mesh.hpp"

using namespace ucfv;

TEST_CASE("single-quad triangulation: 2 cells, 5 faces, 4 vertices") {
  const Mesh m = generate_structured_tri(1, 1, {0, 0, 1, 1}, DiagonalRule::Uniform, 2);
  CHECK(m.n_cells() == 2);
  CHECK(m.n_faces() == 5);
  CHECK(m.vertices.size() == 4);
  validate_mesh(m);
}

TEST_CASE("16x16 triangulation of [0,10]^2: uniform areas, partition identity") {
  const Mesh m = generate_structured_tri(16, 16, {0, 0, 10, 10}, DiagonalRule::Uniform, 2);
  CHECK(m.n_cells() == 512);
  double total = 0.0;
  for (const Cell& c : m.cells) {
    CHECK(c.area == doctest::Approx(100.0 / 512).epsilon(1e-12));
    CHECK(c.h_c == doctest::Approx(std::sqrt(c.area)).epsilon(1e-14));
    total += c.area;
  }
  CHECK(std::abs(total - 100.0) < 1e-12 * 100.0);
  validate_mesh(m);
}

TEST_CASE("generators reject a zero-size domain") {
  CHECK_THROWS_AS(generate_structured_tri(4, 4, {0, 0, 0, 1}, DiagonalRule::Uniform, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_structured_quad(0, 4, {0, 0, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("quad generators: counts and uniform h_c") {
  const Mesh m = generate_structured_quad(2, 2, {0, 0, 1, 1}, 2);
  CHECK(m.n_cells() == 4);
  CHECK(m.n_faces() == 12);
  validate_mesh(m);

  const double L = 2.0 * M_PI;
  const Mesh m2 = generate_structured_quad(16, 16, {0, 0, L, L}, 1);
  for (const Cell& c : m2.cells) CHECK(c.h_c == doctest::Approx(L / 16).epsilon(1e-12));
}

TEST_CASE("alternating diagonals and validation on benchmark meshes") {
  validate_mesh(generate_structured_tri(6, 4, {0, 0, 3, 2}, DiagonalRule::Alternating, 2));
  const Mesh dmr = generate_dmr_mesh(16, 2);
  validate_mesh(dmr);
  // triangles below y = 0.5, quads above
  CHECK(dmr.n_cells() == 64 * 8 * 2 + 64 * 8);
  for (const Cell& c : dmr.cells) {
    if (c.centroid.y < 0.5) CHECK(c.vertex_ids.size() == 3);
    if (c.centroid.y > 0.5) CHECK(c.vertex_ids.size() == 4);
  }
}

TEST_CASE("ffs mesh: step excluded, fillet vertices on the arc") {
  const Mesh m = generate_ffs_mesh(20, 2);
  validate_mesh(m);
  for (const Cell& c : m.cells) {
    const bool inside_step = c.centroid.x > 0.6 && c.centroid.y < 0.2;
    CHECK_FALSE(inside_step);
  }
  // every wall vertex near the corner must sit on a wall plane or the arc
  const Vec2 ctr{0.6 - 0.003, 0.2 + 0.003};
  int on_arc = 0;
  for (const Vec2& v : m.vertices) {
    const double d = norm(v - ctr);
    if (std::abs(d - 0.003) < 1e-12) ++on_arc;
  }
  CHECK(on_arc >= 9);  // >= 8 segments
  CHECK(m.patch_index("inflow") >= 0);
  CHECK(m.patch_index("wall") >= 0);
}

TEST_CASE("native mesh reader: well-formed, inverted, dangling") {
  const std::string good =
      "ucfv-mesh 2d\n"
      "vertices 4\n"
      "0 0\n1 0\n1 1\n0 1\n"
      "cells 2\n"
      "3 0 1 2\n"
      "3 0 2 3\n"
      "patch south\n"
      "0 1\n";
  std::istringstream in(good);
  const Mesh m = read_mesh_stream(in, "good", 2);
  CHECK(m.n_cells() == 2);
  CHECK(m.patch_index("south") == 0);

  const std::string inverted =
      "ucfv-mesh 2d\nvertices 3\n0 0\n1 0\n0 1\ncells 1\n3 0 2 1\n";
  std::istringstream in2(inverted);
  CHECK_THROWS_WITH_AS(read_mesh_stream(in2, "bad", 2),
                       doctest::Contains("cell 0"), MeshError);

  const std::string dangling =
      "ucfv-mesh 2d\nvertices 3\n0 0\n1 0\n0 1\ncells 1\n3 0 1 7\n";
  std::istringstream in3(dangling);
  CHECK_THROWS_WITH_AS(read_mesh_stream(in3, "bad", 2),
                       doctest::Contains("dangling"), MeshError);

  const std::string badheader = "not-a-mesh\n";
  std::istringstream in4(badheader);
  CHECK_THROWS_AS(read_mesh_stream(in4, "bad", 2), MeshError);
}

TEST_CASE("non-conforming connectivity is rejected") {
  // three cells sharing one edge
  std::vector<Vec2> verts{{0, 0}, {1, 0}, {0.5, 1}, {0.5, -1}, {1.5, 1}};
  std::vector<std::vector<int>> cells{{0, 1, 2}, {0, 3, 1}, {0, 1, 4}};
  CHECK_THROWS_WITH_AS(assemble_mesh(verts, cells, 1), doctest::Contains("non-conforming"),
                       MeshError);
}

TEST_CASE("periodic pairing: involution, equal lengths, neighbor counts") {
  Mesh m = generate_structured_tri(16, 16, {0, 0, 10, 10}, DiagonalRule::Uniform, 2);
  m = pair_periodic(std::move(m), Axis::Both, 1e-8);
  validate_mesh(m);
  int paired = 0;
  for (int fid = 0; fid < m.n_faces(); ++fid) {
    const Face& f = m.faces[fid];
    if (f.is_boundary()) {
      CHECK(f.is_periodic());
      ++paired;
      CHECK(m.faces[f.periodic_partner].periodic_partner == fid);
      CHECK(std::abs(f.length - m.faces[f.periodic_partner].length) < 1e-10);
    }
  }
  CHECK(paired == 4 * 16);

  // every cell, including corners, has 3 face neighbors
  for (int c = 0; c < m.n_cells(); ++c) CHECK(face_neighbors(m, c).size() == 3);
}

TEST_CASE("periodic pairing fails on mismatched discretizations") {
  // left boundary has 1 edge, right has 2: build by hand
  std::vector<Vec2> verts{{0, 0}, {1, 0}, {1, 0.5}, {1, 1}, {0, 1}};
  std::vector<std::vector<int>> cells{{0, 1, 2, 4}, {4, 2, 3}};
  Mesh m = assemble_mesh(verts, cells, 1);
  CHECK_THROWS_AS(pair_periodic(std::move(m), Axis::X, 1e-8), MeshError);
}

TEST_CASE("face neighbors on wall-bounded meshes") {
  const Mesh m = generate_structured_quad(4, 4, {0, 0, 1, 1}, 1);
  // corner cell: 2 neighbors; interior: 4
  int corner = -1, interior = -1;
  for (int c = 0; c < m.n_cells(); ++c) {
    const Vec2 p = m.cells[c].centroid;
    if (p.x < 0.25 && p.y < 0.25) corner = c;
    if (p.x > 0.25 && p.x < 0.5 && p.y > 0.25 && p.y < 0.5) interior = c;
  }
  CHECK(face_neighbors(m, corner).size() == 2);
  CHECK(face_neighbors(m, interior).size() == 4);
}
