#ifndef UCFV_EXACT_RIEMANN_HPP
#define UCFV_EXACT_RIEMANN_HPP

#include "ucfv/euler.hpp"

namespace ucfv {

// Exact solution of the 1D Riemann problem (Toro's iterative solver).
// Serves as the independent reference for the Sod benchmark and for the
// HLLC star-state checks; it never touches the finite-volume path.
class ExactRiemann {
 public:
  ExactRiemann(const Primitive& left, const Primitive& right, double gamma);

  double p_star() const { return p_star_; }
  double u_star() const { return u_star_; }
  double rho_star_left() const { return rho_sl_; }
  double rho_star_right() const { return rho_sr_; }

  // wave positions per unit time (speeds)
  double left_head_speed() const;   // fastest left-going signal
  double left_tail_speed() const;   // rarefaction tail (equals head if shock)
  double contact_speed() const { return u_star_; }
  double right_head_speed() const;  // fastest right-going signal
  double right_tail_speed() const;
  bool left_is_shock() const { return p_star_ > left_.p; }
  bool right_is_shock() const { return p_star_ > right_.p; }

  // self-similar sample at xi = x/t (1D states; v = 0)
  Primitive sample(double xi) const;

 private:
  Primitive left_, right_;
  double gamma_;
  double p_star_ = 0.0, u_star_ = 0.0;
  double rho_sl_ = 0.0, rho_sr_ = 0.0;
};

}  // namespace ucfv

#endif
