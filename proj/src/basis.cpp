#include "ucfv/basis.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "ucfv/quadrature.hpp"

namespace ucfv {

std::vector<double> legendre_coeffs(int n) {
  // (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}
  std::vector<std::vector<double>> p(n + 1);
  p[0] = {1.0};
  if (n >= 1) p[1] = {0.0, 1.0};
  for (int m = 1; m < n; ++m) {
    std::vector<double> next(m + 2, 0.0);
    for (int i = 0; i <= m; ++i) next[i + 1] += (2.0 * m + 1.0) * p[m][i] / (m + 1.0);
    for (int i = 0; i < m; ++i) next[i] -= m * p[m - 1][i] / (m + 1.0);
    p[m + 1] = std::move(next);
  }
  return p[n];
}

long count_dofs(int r, int d) {
  if (r < 0 || (d != 2 && d != 3)) throw std::invalid_argument("count_dofs: r >= 0 and d in {2,3}");
  long k = 1;
  for (int l = 1; l <= d; ++l) k *= (r + l);
  for (int l = 2; l <= d; ++l) k /= l;
  return k;
}

MonomialFamily::MonomialFamily(int order) : order_(order), nmono_((order + 1) * (order + 1)) {
  if (order < 1) throw std::invalid_argument("MonomialFamily: order must be >= 1");
  std::vector<std::vector<double>> leg(order + 1);
  for (int n = 0; n <= order; ++n) leg[n] = legendre_coeffs(n);
  for (int t = 1; t <= order; ++t) {
    for (int i = t; i >= 0; --i) {
      const int j = t - i;
      Poly2 f(order);
      for (std::size_t a = 0; a < leg[i].size(); ++a) {
        for (std::size_t b = 0; b < leg[j].size(); ++b) {
          f.coeff(static_cast<int>(a), static_cast<int>(b)) += leg[i][a] * leg[j][b];
        }
      }
      psi_.push_back(std::move(f));
      deg_.push_back({i, j});
    }
  }
  for (int t = 1; t <= order; ++t)
    for (int bx = t; bx >= 0; --bx) beta_.push_back({bx, t - bx});

  const int K = size();
  auto flatten = [&](const Poly2& f, double* dst) {
    for (int i = 0; i <= order_; ++i)
      for (int j = 0; j <= order_; ++j) dst[i * (order_ + 1) + j] = f.coeff(i, j);
  };
  psi_coeffs_.assign(static_cast<std::size_t>(K) * nmono_, 0.0);
  for (int k = 0; k < K; ++k) flatten(psi_[k], &psi_coeffs_[static_cast<std::size_t>(k) * nmono_]);
  deriv_coeffs_.assign(static_cast<std::size_t>(n_derivs()) * K * nmono_, 0.0);
  for (int b = 0; b < n_derivs(); ++b) {
    for (int k = 0; k < K; ++k) {
      const Poly2 d = psi_[k].derivative(beta_[b][0], beta_[b][1]);
      flatten(d, &deriv_coeffs_[(static_cast<std::size_t>(b) * K + k) * nmono_]);
    }
  }
}

void MonomialFamily::fill_monomials(const Vec2& p, std::vector<double>& mono) const {
  mono.resize(nmono_);
  double xp = 1.0;
  for (int i = 0; i <= order_; ++i) {
    double yp = xp;
    for (int j = 0; j <= order_; ++j) {
      mono[i * (order_ + 1) + j] = yp;
      yp *= p.y;
    }
    xp *= p.x;
  }
}

void MonomialFamily::eval_all(const Vec2& p, double* out) const {
  thread_local std::vector<double> mono;
  fill_monomials(p, mono);
  const int K = size();
  for (int k = 0; k < K; ++k) {
    const double* c = &psi_coeffs_[static_cast<std::size_t>(k) * nmono_];
    double s = 0.0;
    for (int m = 0; m < nmono_; ++m) s += c[m] * mono[m];
    out[k] = s;
  }
}

void MonomialFamily::eval_all_derivative(int beta_index, const Vec2& p, double* out) const {
  thread_local std::vector<double> mono;
  fill_monomials(p, mono);
  const int K = size();
  const double* base = &deriv_coeffs_[static_cast<std::size_t>(beta_index) * K * nmono_];
  for (int k = 0; k < K; ++k) {
    const double* c = base + static_cast<std::size_t>(k) * nmono_;
    double s = 0.0;
    for (int m = 0; m < nmono_; ++m) s += c[m] * mono[m];
    out[k] = s;
  }
}

std::shared_ptr<const MonomialFamily> MonomialFamily::get(int order) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const MonomialFamily>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  auto fam = std::make_shared<const MonomialFamily>(order);
  cache[order] = fam;
  return fam;
}

double BasisSet::eval_derivative(int k, int bx, int by, const Vec2& p) const {
  const int total = bx + by;
  if (total < 1 || total > order()) throw std::invalid_argument("eval_derivative: |beta| out of range");
  return family_->psi(k).derivative(bx, by).eval(p);
}

BasisSet build_basis(int order, const Polygon& ref_cell) {
  auto fam = MonomialFamily::get(order);
  const double area = polygon_signed_area(ref_cell);
  if (!(area > 0.0)) throw std::invalid_argument("build_basis: cell polygon must be CCW with positive area");
  const auto qp = polygon_quadrature(ref_cell, 2 * order);
  std::vector<double> means(fam->size(), 0.0);
  for (int k = 0; k < fam->size(); ++k) {
    double s = 0.0;
    for (const auto& q : qp) s += q.w * fam->psi(k).eval(q.p);
    means[k] = s / area;
  }
  return BasisSet(fam, std::move(means));
}

std::vector<double> integrate_basis_over_cell(const BasisSet& basis, const Polygon& cell_poly) {
  if (cell_poly.size() < 3 || !(std::abs(polygon_signed_area(cell_poly)) > 0.0))
    throw std::invalid_argument("integrate_basis_over_cell: degenerate polygon");
  const auto qp = polygon_quadrature(cell_poly, 2 * basis.order());
  std::vector<double> out(basis.size(), 0.0);
  for (int k = 0; k < basis.size(); ++k) {
    double s = 0.0;
    for (const auto& q : qp) s += q.w * basis.eval(k, q.p);
    out[k] = s;
  }
  return out;
}

}  // namespace ucfv
