#include "ucfv/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ucfv {

// Newton iteration on P_n; standard symmetric construction.
GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

namespace {

// Duffy map of the unit square onto triangle (a,b,c). A total-degree-d
// integrand needs n >= (d+2)/2 points per direction for exactness.
void triangle_points(const Vec2& a, const Vec2& b, const Vec2& c, int degree,
                     std::vector<QuadPoint2>& out) {
  const int n = (degree + 2 + 1) / 2;  // ceil((degree+2)/2)
  const GaussRule g = gauss_legendre(n);
  const double area2 = cross(b - a, c - a);  // signed, 2x area
  for (int i = 0; i < n; ++i) {
    const double u = 0.5 * (g.nodes[i] + 1.0);
    for (int j = 0; j < n; ++j) {
      const double v = 0.5 * (g.nodes[j] + 1.0);
      // (s,t) barycentric-like coordinates: s in [0,1], t in [0,1-s]
      const double s = u;
      const double t = v * (1.0 - u);
      const Vec2 p = a + s * (b - a) + t * (c - a);
      const double jac = 0.25 * (1.0 - u);  // square->triangle factor
      out.push_back({p, g.weights[i] * g.weights[j] * jac * area2});
    }
  }
}

}  // namespace

std::vector<QuadPoint2> polygon_quadrature(const Polygon& poly, int degree) {
  if (poly.size() < 3) throw std::invalid_argument("polygon_quadrature: degenerate polygon");
  if (degree < 0) degree = 0;
  std::vector<QuadPoint2> pts;
  if (poly.size() == 3) {
    triangle_points(poly[0], poly[1], poly[2], degree, pts);
    return pts;
  }
  if (poly.size() == 4) {
    // split along whichever diagonal keeps both triangles positive
    const double a0 = cross(poly[1] - poly[0], poly[2] - poly[0]);
    const double a1 = cross(poly[2] - poly[0], poly[3] - poly[0]);
    if (a0 > 0.0 && a1 > 0.0) {
      triangle_points(poly[0], poly[1], poly[2], degree, pts);
      triangle_points(poly[0], poly[2], poly[3], degree, pts);
    } else {
      triangle_points(poly[1], poly[2], poly[3], degree, pts);
      triangle_points(poly[1], poly[3], poly[0], degree, pts);
    }
    return pts;
  }
  // general simple polygon: fan from centroid (valid for star-shaped cells)
  const Vec2 c = polygon_centroid(poly);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    triangle_points(c, poly[i], poly[(i + 1) % poly.size()], degree, pts);
  }
  return pts;
}

FaceQuadrature segment_quadrature(const Vec2& a, const Vec2& b, int n_points) {
  const GaussRule g = gauss_legendre(n_points);
  FaceQuadrature fq;
  fq.points.resize(n_points);
  fq.weights.resize(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double t = 0.5 * (g.nodes[i] + 1.0);
    fq.points[i] = a + t * (b - a);
    fq.weights[i] = 0.5 * g.weights[i];  // sums to 1
  }
  return fq;
}

}  // namespace ucfv
