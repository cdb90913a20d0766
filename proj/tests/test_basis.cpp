#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <random>

#include "ucfv/basis.hpp"
#include "ucfv/quadrature.hpp"

using namespace ucfv;

namespace {
const Polygon kUnitSquare{{-0.5, -0.5}, {0.5, -0.5}, {0.5, 0.5}, {-0.5, 0.5}};
const Polygon kRefTriangle{{-0.4, -0.3}, {0.8, -0.2}, {-0.1, 0.9}};
}  // namespace

TEST_CASE("count_dofs matches K(r,d)") {
  CHECK(count_dofs(3, 2) == 10);
  CHECK(count_dofs(0, 2) == 1);
  CHECK(count_dofs(2, 3) == 10);
  CHECK(count_dofs(5, 2) == 21);
  CHECK_THROWS_AS(count_dofs(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(count_dofs(2, 4), std::invalid_argument);
}

TEST_CASE("r=1 basis on the origin-centred unit square is {xi, eta}") {
  const BasisSet b = build_basis(1, kUnitSquare);
  REQUIRE(b.size() == 2);
  CHECK(std::abs(b.means()[0]) < 1e-14);
  CHECK(std::abs(b.means()[1]) < 1e-14);
  CHECK(b.eval(0, {0.3, -0.1}) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(b.eval(1, {0.3, -0.1}) == doctest::Approx(-0.1).epsilon(1e-14));
}

TEST_CASE("zero mean of every phi_k on its own cell (quadrature oracle)") {
  for (int r : {1, 2, 3, 5}) {
    for (const Polygon* poly : {&kUnitSquare, &kRefTriangle}) {
      const BasisSet b = build_basis(r, *poly);
      const auto qp = polygon_quadrature(*poly, 2 * r);
      for (int k = 0; k < b.size(); ++k) {
        double s = 0.0;
        for (const auto& q : qp) s += q.w * b.eval(k, q.p);
        CHECK(std::abs(s) < 1e-12);
      }
    }
  }
}

TEST_CASE("integrate_basis_over_cell: own cell gives zero, translated linear is area*shift") {
  const BasisSet b = build_basis(2, kUnitSquare);
  const auto self_int = integrate_basis_over_cell(b, kUnitSquare);
  for (double v : self_int) CHECK(std::abs(v) < 1e-13);

  const double dx = 1.7;
  Polygon shifted = kUnitSquare;
  for (auto& p : shifted) p.x += dx;
  const auto ints = integrate_basis_over_cell(b, shifted);
  // psi_1 = xi with zero mean on the centred square: integral = area * dx
  CHECK(ints[0] == doctest::Approx(1.0 * dx).epsilon(1e-13));
  CHECK_THROWS_AS(integrate_basis_over_cell(b, Polygon{{0, 0}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("r=3 basis integrals over a random triangle match Monte-Carlo within 3 sigma") {
  const Polygon tri{{0.1, 0.05}, {1.3, 0.4}, {0.5, 1.1}};
  const BasisSet b = build_basis(3, kUnitSquare);
  const auto ints = integrate_basis_over_cell(b, tri);

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const int n = 400000;
  const Vec2 A = tri[0], B = tri[1], C = tri[2];
  const double area = polygon_signed_area(tri);
  std::vector<double> sum(b.size(), 0.0), sumsq(b.size(), 0.0);
  for (int i = 0; i < n; ++i) {
    double s = u01(rng), t = u01(rng);
    if (s + t > 1.0) {
      s = 1.0 - s;
      t = 1.0 - t;
    }
    const Vec2 p = A + s * (B - A) + t * (C - A);
    for (int k = 0; k < b.size(); ++k) {
      const double v = b.eval(k, p);
      sum[k] += v;
      sumsq[k] += v * v;
    }
  }
  for (int k = 0; k < b.size(); ++k) {
    const double mean = sum[k] / n;
    const double var = sumsq[k] / n - mean * mean;
    const double sigma = area * std::sqrt(var / n);
    CHECK(std::abs(ints[k] - area * mean) < 3.5 * sigma + 1e-12);
  }
}

TEST_CASE("derivative evaluators: exact cases and finite-difference oracle") {
  // a function equal to xi*eta has d2/dxi deta = 1; xi^2 has d2/dxi2 = 2
  Poly2 xy(2);
  xy.coeff(1, 1) = 1.0;
  CHECK(xy.derivative(1, 1).eval({0.37, -2.4}) == doctest::Approx(1.0));
  Poly2 x2(2);
  x2.coeff(2, 0) = 1.0;
  CHECK(x2.derivative(2, 0).eval({0.9, 3.0}) == doctest::Approx(2.0));

  const BasisSet b = build_basis(4, kRefTriangle);
  CHECK_THROWS_AS(b.eval_derivative(0, 0, 0, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(b.eval_derivative(0, 3, 2, {0, 0}), std::invalid_argument);

  std::mt19937 rng(99);
  std::uniform_real_distribution<double> pos(-0.4, 0.4);
  const double h = 1e-5;
  for (int k = 0; k < b.size(); ++k) {
    const Vec2 p{pos(rng), pos(rng)};
    // first derivatives vs central differences of phi itself
    const double fd_x = (b.eval(k, {p.x + h, p.y}) - b.eval(k, {p.x - h, p.y})) / (2 * h);
    const double fd_y = (b.eval(k, {p.x, p.y + h}) - b.eval(k, {p.x, p.y - h})) / (2 * h);
    const double dx = b.eval_derivative(k, 1, 0, p);
    const double dy = b.eval_derivative(k, 0, 1, p);
    CHECK(std::abs(fd_x - dx) < 1e-6 * std::max(1.0, std::abs(dx)));
    CHECK(std::abs(fd_y - dy) < 1e-6 * std::max(1.0, std::abs(dy)));
    // second derivatives vs differences of the first-derivative evaluator
    const double fd_xx = (b.eval_derivative(k, 1, 0, {p.x + h, p.y}) -
                          b.eval_derivative(k, 1, 0, {p.x - h, p.y})) /
                         (2 * h);
    const double dxx = b.eval_derivative(k, 2, 0, p);
    CHECK(std::abs(fd_xx - dxx) < 1e-6 * std::max(1.0, std::abs(dxx)));
  }
}

TEST_CASE("Gram matrix conditioning below 1e8 for r <= 5") {
  for (int r : {1, 2, 3, 4, 5}) {
    for (const Polygon* poly : {&kUnitSquare, &kRefTriangle}) {
      const BasisSet b = build_basis(r, *poly);
      const int K = b.size();
      const auto qp = polygon_quadrature(*poly, 2 * r);
      Eigen::MatrixXd G = Eigen::MatrixXd::Zero(K, K);
      for (const auto& q : qp) {
        Eigen::VectorXd phi(K);
        for (int k = 0; k < K; ++k) phi(k) = b.eval(k, q.p);
        G += q.w * phi * phi.transpose();
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(G);
      const double cond = svd.singularValues()(0) / svd.singularValues()(K - 1);
      CHECK(cond < 1e8);
    }
  }
}

TEST_CASE("dense family evaluation agrees with per-polynomial evaluation") {
  auto fam = MonomialFamily::get(4);
  std::vector<double> all(fam->size());
  const Vec2 p{0.21, -0.43};
  fam->eval_all(p, all.data());
  for (int k = 0; k < fam->size(); ++k) CHECK(all[k] == doctest::Approx(fam->psi(k).eval(p)));
  for (int bi = 0; bi < fam->n_derivs(); ++bi) {
    fam->eval_all_derivative(bi, p, all.data());
    const auto beta = fam->beta(bi);
    for (int k = 0; k < fam->size(); ++k)
      CHECK(all[k] == doctest::Approx(fam->psi(k).derivative(beta[0], beta[1]).eval(p)));
  }
}
