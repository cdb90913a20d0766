#ifndef UCFV_POLYNOMIAL_HPP
#define UCFV_POLYNOMIAL_HPP

#include <vector>

#include "ucfv/geometry.hpp"

namespace ucfv {

// Dense bivariate polynomial, coefficients c(i,j) on xi^i * eta^j.
class Poly2 {
 public:
  Poly2() : deg_(0), c_(1, 0.0) {}
  explicit Poly2(int degree) : deg_(degree), c_((degree + 1) * (degree + 1), 0.0) {}

  int degree() const { return deg_; }
  double& coeff(int i, int j) { return c_[i * (deg_ + 1) + j]; }
  double coeff(int i, int j) const { return c_[i * (deg_ + 1) + j]; }

  double eval(const Vec2& p) const {
    // Horner in xi of Horner-in-eta rows
    double acc = 0.0;
    for (int i = deg_; i >= 0; --i) {
      double row = 0.0;
      for (int j = deg_; j >= 0; --j) row = row * p.y + coeff(i, j);
      acc = acc * p.x + row;
    }
    return acc;
  }

  // Exact partial derivative d^(bx+by) / dxi^bx deta^by.
  Poly2 derivative(int bx, int by) const {
    Poly2 d(deg_);
    for (int i = bx; i <= deg_; ++i) {
      for (int j = by; j <= deg_; ++j) {
        double f = 1.0;
        for (int t = 0; t < bx; ++t) f *= static_cast<double>(i - t);
        for (int t = 0; t < by; ++t) f *= static_cast<double>(j - t);
        d.coeff(i - bx, j - by) = coeff(i, j) * f;
      }
    }
    return d;
  }

  Poly2& operator+=(const Poly2& o) {
    for (int i = 0; i <= deg_; ++i)
      for (int j = 0; j <= deg_; ++j) coeff(i, j) += o.coeff(i, j);
    return *this;
  }

 private:
  int deg_;
  std::vector<double> c_;
};

// Monomial coefficients of the 1D Legendre polynomial P_n.
std::vector<double> legendre_coeffs(int n);

}  // namespace ucfv

#endif
