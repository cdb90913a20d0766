#ifndef UCFV_CASES_HPP
#define UCFV_CASES_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ucfv/mesh.hpp"
#include "ucfv/solver.hpp"

namespace ucfv {

struct CaseSpec {
  std::string name;
  double t_end = 1.0;
  double cfl = 0.6;
  double lambda1p = 1e3;
  RiemannKind riemann = RiemannKind::Hllc;
  int default_resolution = 32;
  std::function<Mesh(int res, int nqp)> make_mesh;
  std::function<State(const Vec2&)> initial;              // pointwise conserved state
  std::map<std::string, BoundaryFn> boundary_conditions;  // by patch name
  std::function<State(const Vec2&, double)> exact;        // null when unavailable

  // set for rectangular-domain cases so mesh recipes (tri:N, quad:N) can
  // rebuild the grid with a different element type
  std::optional<Rect> rect_domain;
  std::optional<Axis> periodic;
};

// Known cases: vortex, shu_osher, sod, riemann2d, dmr, ffs.
CaseSpec get_case(const std::string& name);
std::vector<std::string> case_names();

// pointwise initial states (exposed for tests)
State ic_vortex(const Vec2& p, double gamma);
State ic_shu_osher(const Vec2& p, double gamma);
State ic_riemann2d(const Vec2& p, double gamma);
State ic_sod(const Vec2& p, double gamma);

// normal shock relations for shock Mach number Ms running into (rho1, p1)
// at rest; returns post-shock density, pressure and normal speed.
struct ShockJump {
  double rho2, p2, u2;
};
ShockJump rankine_hugoniot(double mach_s, double rho1, double p1, double gamma);

// Shock-foot position on the DMR top boundary at time t.
double dmr_top_shock_x(double t);

// cell averages of a pointwise field, by quadrature of the stated degree
StateField project_initial(const Mesh& mesh, const std::function<State(const Vec2&)>& f,
                           int degree);

}  // namespace ucfv

#endif
