#include "ucfv/cases.hpp"

#include <cmath>
#include <stdexcept>

#include "ucfv/quadrature.hpp"

namespace ucfv {

namespace {
constexpr double kGamma = 1.4;
}

State ic_vortex(const Vec2& p, double gamma) {
  const double eps = 5.0;
  const double dx = p.x - 5.0, dy = p.y - 5.0;
  const double r2 = dx * dx + dy * dy;
  const double du = eps / (2.0 * M_PI) * std::exp(0.5 * (1.0 - r2)) * (-dy);
  const double dv = eps / (2.0 * M_PI) * std::exp(0.5 * (1.0 - r2)) * dx;
  const double dT =
      -(gamma - 1.0) * eps * eps / (8.0 * gamma * M_PI * M_PI) * std::exp(1.0 - r2);
  // uniform entropy S = p / rho^gamma = 1 around the mean flow (1,1,1,1)
  const double T = 1.0 + dT;
  const double rho = std::pow(T, 1.0 / (gamma - 1.0));
  const double pr = std::pow(T, gamma / (gamma - 1.0));
  return prim_to_cons({rho, 1.0 + du, 1.0 + dv, pr}, gamma);
}

State ic_shu_osher(const Vec2& p, double gamma) {
  if (p.x < -4.0) return prim_to_cons({3.857143, 2.629369, 0.0, 10.3333}, gamma);
  return prim_to_cons({1.0 + 0.2 * std::sin(5.0 * p.x), 0.0, 0.0, 1.0}, gamma);
}

State ic_riemann2d(const Vec2& p, double gamma) {
  // quadrant states; ties resolved in the listed order
  if (p.x <= 0.0 && p.y >= 0.0) return prim_to_cons({0.5323, 1.206, 0.0, 0.3}, gamma);
  if (p.x >= 0.0 && p.y >= 0.0) return prim_to_cons({1.5, 0.0, 0.0, 1.5}, gamma);
  if (p.x <= 0.0 && p.y <= 0.0) return prim_to_cons({0.138, 1.206, 1.206, 0.029}, gamma);
  return prim_to_cons({0.5323, 0.0, 1.206, 0.3}, gamma);
}

State ic_sod(const Vec2& p, double gamma) {
  if (p.x < 0.5) return prim_to_cons({1.0, 0.0, 0.0, 1.0}, gamma);
  return prim_to_cons({0.125, 0.0, 0.0, 0.1}, gamma);
}

ShockJump rankine_hugoniot(double mach_s, double rho1, double p1, double gamma) {
  const double m2 = mach_s * mach_s;
  ShockJump j;
  j.rho2 = rho1 * (gamma + 1.0) * m2 / ((gamma - 1.0) * m2 + 2.0);
  j.p2 = p1 * (2.0 * gamma * m2 - (gamma - 1.0)) / (gamma + 1.0);
  const double a1 = std::sqrt(gamma * p1 / rho1);
  j.u2 = 2.0 * (m2 - 1.0) / ((gamma + 1.0) * mach_s) * a1;
  return j;
}

double dmr_top_shock_x(double t) {
  // 60-degree shock through (1/6, 0) advancing at speed 10 along its normal
  return 1.0 / 6.0 + (1.0 + 20.0 * t) / std::sqrt(3.0);
}

StateField project_initial(const Mesh& mesh, const std::function<State(const Vec2&)>& f,
                           int degree) {
  StateField u(mesh.n_cells());
  for (int c = 0; c < mesh.n_cells(); ++c) {
    const auto qp = polygon_quadrature(mesh.cell_polygon(c), degree);
    State acc{};
    for (const auto& q : qp) {
      const State s = f(q.p);
      for (int v = 0; v < kNumVars; ++v) acc[v] += q.w * s[v];
    }
    for (int v = 0; v < kNumVars; ++v) u[c][v] = acc[v] / mesh.cells[c].area;
  }
  return u;
}

namespace {

State dmr_post_state() {
  const ShockJump j = rankine_hugoniot(10.0, 1.4, 1.0, kGamma);
  const double c60 = 0.5, s60 = std::sqrt(3.0) / 2.0;
  return prim_to_cons({j.rho2, j.u2 * s60, -j.u2 * c60, j.p2}, kGamma);
}

State dmr_pre_state() { return prim_to_cons({1.4, 0.0, 0.0, 1.0}, kGamma); }

State ic_dmr(const Vec2& p) {
  // initial shock line through (1/6, 0) inclined 60 degrees to the wall
  return (p.x < 1.0 / 6.0 + p.y / std::sqrt(3.0)) ? dmr_post_state() : dmr_pre_state();
}

CaseSpec make_vortex() {
  CaseSpec cs;
  cs.name = "vortex";
  cs.t_end = 10.0;
  cs.lambda1p = 1e4;
  cs.riemann = RiemannKind::Hllc;
  cs.default_resolution = 32;
  cs.make_mesh = [](int res, int nqp) {
    Mesh m = generate_structured_tri(res, res, {0.0, 0.0, 10.0, 10.0}, DiagonalRule::Uniform, nqp);
    return pair_periodic(std::move(m), Axis::Both, 1e-8);
  };
  cs.initial = [](const Vec2& p) { return ic_vortex(p, kGamma); };
  cs.exact = [](const Vec2& p, double t) {
    auto wrap = [](double x) {
      double y = std::fmod(x, 10.0);
      if (y < 0.0) y += 10.0;
      return y;
    };
    return ic_vortex({wrap(p.x - t), wrap(p.y - t)}, kGamma);
  };
  cs.rect_domain = Rect{0.0, 0.0, 10.0, 10.0};
  cs.periodic = Axis::Both;
  return cs;
}

CaseSpec make_shu_osher() {
  CaseSpec cs;
  cs.name = "shu_osher";
  cs.t_end = 1.8;
  cs.default_resolution = 450;
  cs.make_mesh = [](int res, int nqp) {
    const int ny = (res >= 2000) ? 1 : 2;
    const double dx = 9.0 / res;
    Mesh m = generate_structured_quad(res, ny, {-4.5, 0.0, 4.5, ny * dx}, nqp);
    return pair_periodic(std::move(m), Axis::Y, 1e-9 * dx);
  };
  cs.initial = [](const Vec2& p) { return ic_shu_osher(p, kGamma); };
  cs.boundary_conditions = {
      {"left", bc_fixed(prim_to_cons({3.857143, 2.629369, 0.0, 10.3333}, kGamma))},
      {"right", bc_outflow()},
  };
  return cs;
}

CaseSpec make_sod() {
  CaseSpec cs;
  cs.name = "sod";
  cs.t_end = 0.2;
  cs.default_resolution = 400;
  cs.make_mesh = [](int res, int nqp) {
    const int ny = 2;
    const double dx = 1.0 / res;
    Mesh m = generate_structured_quad(res, ny, {0.0, 0.0, 1.0, ny * dx}, nqp);
    return pair_periodic(std::move(m), Axis::Y, 1e-9 * dx);
  };
  cs.initial = [](const Vec2& p) { return ic_sod(p, kGamma); };
  cs.boundary_conditions = {{"left", bc_outflow()}, {"right", bc_outflow()}};
  return cs;
}

CaseSpec make_riemann2d() {
  CaseSpec cs;
  cs.name = "riemann2d";
  cs.t_end = 1.0;
  cs.riemann = RiemannKind::Hll;
  cs.default_resolution = 100;
  cs.make_mesh = [](int res, int nqp) {
    return generate_structured_quad(res, res, {-0.5, -0.5, 0.5, 0.5}, nqp);
  };
  cs.initial = [](const Vec2& p) { return ic_riemann2d(p, kGamma); };
  cs.boundary_conditions = {{"left", bc_outflow()},
                            {"right", bc_outflow()},
                            {"bottom", bc_outflow()},
                            {"top", bc_outflow()}};
  cs.rect_domain = Rect{-0.5, -0.5, 0.5, 0.5};
  return cs;
}

CaseSpec make_dmr() {
  CaseSpec cs;
  cs.name = "dmr";
  cs.t_end = 2.0;
  cs.default_resolution = 80;
  cs.make_mesh = [](int res, int nqp) { return generate_dmr_mesh(res, nqp); };
  cs.initial = [](const Vec2& p) { return ic_dmr(p); };
  const State post = dmr_post_state();
  const State pre = dmr_pre_state();
  cs.boundary_conditions = {
      {"left", bc_fixed(post)},
      {"right", bc_outflow()},
      {"bottom",
       [post](const Vec2& x, double, const State& inner, const Vec2& n) {
         return (x.x < 1.0 / 6.0) ? post : mirror_state(inner, n);
       }},
      {"top",
       [post, pre](const Vec2& x, double t, const State&, const Vec2&) {
         return (x.x < dmr_top_shock_x(t)) ? post : pre;
       }},
  };
  return cs;
}

CaseSpec make_ffs() {
  CaseSpec cs;
  cs.name = "ffs";
  cs.t_end = 4.0;
  cs.riemann = RiemannKind::Hll;
  cs.default_resolution = 70;
  cs.make_mesh = [](int res, int nqp) { return generate_ffs_mesh(res, nqp); };
  cs.initial = [](const Vec2&) { return prim_to_cons({1.4, 3.0, 0.0, 1.0}, kGamma); };
  cs.boundary_conditions = {
      {"inflow", bc_fixed(prim_to_cons({1.4, 3.0, 0.0, 1.0}, kGamma))},
      {"outflow", bc_outflow()},
      {"wall", bc_wall()},
  };
  return cs;
}

}  // namespace

CaseSpec get_case(const std::string& name) {
  if (name == "vortex") return make_vortex();
  if (name == "shu_osher") return make_shu_osher();
  if (name == "sod") return make_sod();
  if (name == "riemann2d") return make_riemann2d();
  if (name == "dmr") return make_dmr();
  if (name == "ffs") return make_ffs();
  throw std::invalid_argument("unknown case '" + name + "'");
}

std::vector<std::string> case_names() {
  return {"vortex", "shu_osher", "sod", "riemann2d", "dmr", "ffs"};
}

}  // namespace ucfv
