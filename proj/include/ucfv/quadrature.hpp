#ifndef UCFV_QUADRATURE_HPP
#define UCFV_QUADRATURE_HPP

#include <vector>

#include "ucfv/geometry.hpp"

namespace ucfv {

// Gauss-Legendre nodes/weights on [-1, 1]; n points integrate degree 2n-1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

struct QuadPoint2 {
  Vec2 p;
  double w;  // carries the physical area measure
};

// Quadrature over an arbitrary simple polygon, exact for bivariate
// polynomials of total degree <= `degree`. The polygon is triangulated
// and a conical-product Gauss rule is applied per triangle.
std::vector<QuadPoint2> polygon_quadrature(const Polygon& poly, int degree);

// Points along a straight segment, weights normalized to sum to 1.
struct FaceQuadrature {
  std::vector<Vec2> points;
  std::vector<double> weights;
};

FaceQuadrature segment_quadrature(const Vec2& a, const Vec2& b, int n_points);

}  // namespace ucfv

#endif
