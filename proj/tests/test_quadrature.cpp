#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "ucfv/quadrature.hpp"

using namespace ucfv;

namespace {

double integrate_poly(const std::vector<QuadPoint2>& qp, int i, int j) {
  double s = 0.0;
  for (const auto& q : qp) s += q.w * std::pow(q.p.x, i) * std::pow(q.p.y, j);
  return s;
}

// closed form for x^i y^j over the unit triangle (0,0),(1,0),(0,1)
double unit_triangle_monomial(int i, int j) {
  auto factorial = [](int n) {
    double f = 1.0;
    for (int t = 2; t <= n; ++t) f *= t;
    return f;
  };
  return factorial(i) * factorial(j) / factorial(i + j + 2);
}

}  // namespace

TEST_CASE("gauss_legendre integrates 1D monomials of degree 2n-1") {
  for (int n = 1; n <= 8; ++n) {
    const GaussRule g = gauss_legendre(n);
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += g.weights[i] * std::pow(g.nodes[i], d);
      const double exact = (d % 2 == 0) ? 2.0 / (d + 1) : 0.0;
      CHECK(std::abs(s - exact) < 1e-12);
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("segment quadrature: weights normalized, monomials along the face exact") {
  const Vec2 a{0.2, -1.0}, b{1.7, 0.4};
  for (int n = 1; n <= 4; ++n) {
    const FaceQuadrature fq = segment_quadrature(a, b, n);
    double wsum = 0.0;
    for (double w : fq.weights) wsum += w;
    CHECK(std::abs(wsum - 1.0) < 1e-14);
    // parametrize p = a + t (b-a), integrate t^d over [0,1]
    for (int d = 0; d <= 2 * n - 1; ++d) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        const double t = (fq.points[i].x - a.x) / (b.x - a.x);
        s += fq.weights[i] * std::pow(t, d);
      }
      CHECK(std::abs(s - 1.0 / (d + 1)) < 1e-12);
    }
  }
}

TEST_CASE("polygon quadrature: exact monomials on the unit triangle") {
  const Polygon tri{{0, 0}, {1, 0}, {0, 1}};
  for (int deg = 0; deg <= 10; ++deg) {
    const auto qp = polygon_quadrature(tri, deg);
    for (int i = 0; i <= deg; ++i)
      for (int j = 0; i + j <= deg; ++j)
        CHECK(std::abs(integrate_poly(qp, i, j) - unit_triangle_monomial(i, j)) < 1e-13);
  }
}

TEST_CASE("polygon quadrature: exact monomials on the unit square") {
  const Polygon sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (int deg : {2, 5, 10}) {
    const auto qp = polygon_quadrature(sq, deg);
    for (int i = 0; i <= deg; ++i)
      for (int j = 0; i + j <= deg; ++j)
        CHECK(std::abs(integrate_poly(qp, i, j) - 1.0 / ((i + 1.0) * (j + 1.0))) < 1e-13);
  }
}

TEST_CASE("polygon quadrature: weights sum to the polygon area") {
  const Polygon poly{{0, 0}, {2, 0.1}, {1.8, 1.5}, {0.4, 1.2}};
  const auto qp = polygon_quadrature(poly, 4);
  double area = 0.0;
  for (const auto& q : qp) area += q.w;
  CHECK(std::abs(area - polygon_signed_area(poly)) < 1e-13);
  CHECK_THROWS_AS(polygon_quadrature(Polygon{{0, 0}, {1, 1}}, 2), std::invalid_argument);
}
