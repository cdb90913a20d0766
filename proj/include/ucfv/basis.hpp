#ifndef UCFV_BASIS_HPP
#define UCFV_BASIS_HPP

#include <array>
#include <memory>
#include <vector>

#include "ucfv/geometry.hpp"
#include "ucfv/polynomial.hpp"

namespace ucfv {

// K(r,d) = (1/d!) * prod_{l=1..d} (r+l); includes the constant term.
long count_dofs(int r, int d);

// Shared, immutable family of Legendre-product functions psi_k(xi,eta),
// graded by total degree, constant term excluded. k = 1..K maps to
// index k-1 here.
class MonomialFamily {
 public:
  explicit MonomialFamily(int order);

  int order() const { return order_; }
  int size() const { return static_cast<int>(psi_.size()); }  // K non-constant
  const Poly2& psi(int k) const { return psi_[k]; }
  const std::array<int, 2>& degrees(int k) const { return deg_[k]; }

  // multi-indices beta with 1 <= |beta| <= order, in construction order
  int n_derivs() const { return static_cast<int>(beta_.size()); }
  const std::array<int, 2>& beta(int b) const { return beta_[b]; }

  // dense evaluation of all psi_k (or all D^beta psi_k) at one point
  void eval_all(const Vec2& p, double* out) const;
  void eval_all_derivative(int beta_index, const Vec2& p, double* out) const;

  static std::shared_ptr<const MonomialFamily> get(int order);

 private:
  void fill_monomials(const Vec2& p, std::vector<double>& mono) const;

  int order_;
  int nmono_;
  std::vector<Poly2> psi_;
  std::vector<std::array<int, 2>> deg_;   // (i,j) per function
  std::vector<std::array<int, 2>> beta_;  // derivative multi-indices
  std::vector<double> psi_coeffs_;        // K x nmono
  std::vector<double> deriv_coeffs_;      // n_derivs x K x nmono
};

// Per-cell basis: phi_k = psi_k - mean(psi_k over the owning reference cell),
// so every phi_k integrates to zero over that cell.
class BasisSet {
 public:
  BasisSet() = default;
  BasisSet(std::shared_ptr<const MonomialFamily> family, std::vector<double> means)
      : family_(std::move(family)), means_(std::move(means)) {}

  int order() const { return family_->order(); }
  int size() const { return family_->size(); }
  const std::vector<double>& means() const { return means_; }

  double eval(int k, const Vec2& p) const { return family_->psi(k).eval(p) - means_[k]; }

  // d^beta phi_k at p; requires 1 <= |beta| <= order.
  double eval_derivative(int k, int bx, int by, const Vec2& p) const;

  const MonomialFamily& family() const { return *family_; }

 private:
  std::shared_ptr<const MonomialFamily> family_;
  std::vector<double> means_;
};

// Basis with means taken over `ref_cell` (a polygon in the owning cell's
// reference frame).
BasisSet build_basis(int order, const Polygon& ref_cell);

// Integrals of phi_k over an arbitrary polygon expressed in the owning
// cell's reference frame (not divided by the polygon area).
std::vector<double> integrate_basis_over_cell(const BasisSet& basis, const Polygon& cell_poly);

}  // namespace ucfv

#endif
