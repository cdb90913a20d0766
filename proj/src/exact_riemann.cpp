#include "ucfv/exact_riemann.hpp"

#include <cmath>
#include <stdexcept>

namespace ucfv {

namespace {

// pressure function f_K(p) and its derivative for one side
void side_fn(double p, const Primitive& w, double gamma, double& f, double& df) {
  const double a = std::sqrt(gamma * w.p / w.rho);
  if (p > w.p) {  // shock
    const double A = 2.0 / ((gamma + 1.0) * w.rho);
    const double B = (gamma - 1.0) / (gamma + 1.0) * w.p;
    const double q = std::sqrt(A / (p + B));
    f = (p - w.p) * q;
    df = q * (1.0 - 0.5 * (p - w.p) / (p + B));
  } else {  // rarefaction
    const double pr = p / w.p;
    f = 2.0 * a / (gamma - 1.0) * (std::pow(pr, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
    df = std::pow(pr, -(gamma + 1.0) / (2.0 * gamma)) / (w.rho * a);
  }
}

}  // namespace

ExactRiemann::ExactRiemann(const Primitive& left, const Primitive& right, double gamma)
    : left_(left), right_(right), gamma_(gamma) {
  const double aL = std::sqrt(gamma * left.p / left.rho);
  const double aR = std::sqrt(gamma * right.p / right.rho);
  const double du = right.u - left.u;
  if (2.0 * aL / (gamma - 1.0) + 2.0 * aR / (gamma - 1.0) <= du)
    throw std::invalid_argument("ExactRiemann: vacuum-generating data");

  // two-rarefaction initial guess
  double p = std::pow((aL + aR - 0.5 * (gamma - 1.0) * du) /
                          (aL / std::pow(left.p, (gamma - 1.0) / (2.0 * gamma)) +
                           aR / std::pow(right.p, (gamma - 1.0) / (2.0 * gamma))),
                      2.0 * gamma / (gamma - 1.0));
  p = std::max(p, 1e-12);
  for (int it = 0; it < 100; ++it) {
    double fL, dfL, fR, dfR;
    side_fn(p, left_, gamma_, fL, dfL);
    side_fn(p, right_, gamma_, fR, dfR);
    const double g = fL + fR + du;
    const double dp = g / (dfL + dfR);
    double pn = p - dp;
    if (pn <= 0.0) pn = 0.5 * p;
    if (std::abs(pn - p) < 1e-14 * (0.5 * (pn + p))) {
      p = pn;
      break;
    }
    p = pn;
  }
  p_star_ = p;
  double fL, dfL, fR, dfR;
  side_fn(p, left_, gamma_, fL, dfL);
  side_fn(p, right_, gamma_, fR, dfR);
  u_star_ = 0.5 * (left.u + right.u) + 0.5 * (fR - fL);

  const double gm = (gamma - 1.0) / (gamma + 1.0);
  rho_sl_ = left_is_shock() ? left.rho * (p / left.p + gm) / (gm * p / left.p + 1.0)
                            : left.rho * std::pow(p / left.p, 1.0 / gamma);
  rho_sr_ = right_is_shock() ? right.rho * (p / right.p + gm) / (gm * p / right.p + 1.0)
                             : right.rho * std::pow(p / right.p, 1.0 / gamma);
}

double ExactRiemann::left_head_speed() const {
  const double aL = std::sqrt(gamma_ * left_.p / left_.rho);
  if (left_is_shock())
    return left_.u - aL * std::sqrt((gamma_ + 1.0) / (2.0 * gamma_) * p_star_ / left_.p +
                                    (gamma_ - 1.0) / (2.0 * gamma_));
  return left_.u - aL;
}

double ExactRiemann::left_tail_speed() const {
  if (left_is_shock()) return left_head_speed();
  const double aL = std::sqrt(gamma_ * left_.p / left_.rho);
  const double a_star = aL * std::pow(p_star_ / left_.p, (gamma_ - 1.0) / (2.0 * gamma_));
  return u_star_ - a_star;
}

double ExactRiemann::right_head_speed() const {
  const double aR = std::sqrt(gamma_ * right_.p / right_.rho);
  if (right_is_shock())
    return right_.u + aR * std::sqrt((gamma_ + 1.0) / (2.0 * gamma_) * p_star_ / right_.p +
                                     (gamma_ - 1.0) / (2.0 * gamma_));
  return right_.u + aR;
}

double ExactRiemann::right_tail_speed() const {
  if (right_is_shock()) return right_head_speed();
  const double aR = std::sqrt(gamma_ * right_.p / right_.rho);
  const double a_star = aR * std::pow(p_star_ / right_.p, (gamma_ - 1.0) / (2.0 * gamma_));
  return u_star_ + a_star;
}

Primitive ExactRiemann::sample(double xi) const {
  const double g = gamma_;
  if (xi <= u_star_) {
    const double aL = std::sqrt(g * left_.p / left_.rho);
    if (left_is_shock()) {
      if (xi <= left_head_speed()) return left_;
      return {rho_sl_, u_star_, 0.0, p_star_};
    }
    if (xi <= left_.u - aL) return left_;
    if (xi >= left_tail_speed()) return {rho_sl_, u_star_, 0.0, p_star_};
    // inside the left fan
    const double u = 2.0 / (g + 1.0) * (aL + 0.5 * (g - 1.0) * left_.u + xi);
    const double a = aL - 0.5 * (g - 1.0) * (u - left_.u);
    const double rho = left_.rho * std::pow(a / aL, 2.0 / (g - 1.0));
    const double p = left_.p * std::pow(a / aL, 2.0 * g / (g - 1.0));
    return {rho, u, 0.0, p};
  }
  const double aR = std::sqrt(g * right_.p / right_.rho);
  if (right_is_shock()) {
    if (xi >= right_head_speed()) return right_;
    return {rho_sr_, u_star_, 0.0, p_star_};
  }
  if (xi >= right_.u + aR) return right_;
  if (xi <= right_tail_speed()) return {rho_sr_, u_star_, 0.0, p_star_};
  const double u = 2.0 / (g + 1.0) * (-aR + 0.5 * (g - 1.0) * right_.u + xi);
  const double a = aR + 0.5 * (g - 1.0) * (u - right_.u);
  const double rho = right_.rho * std::pow(a / aR, 2.0 / (g - 1.0));
  const double p = right_.p * std::pow(a / aR, 2.0 * g / (g - 1.0));
  return {rho, u, 0.0, p};
}

}  // namespace ucfv
