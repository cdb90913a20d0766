#include "ucfv/run.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ucfv {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Mesh build_case_mesh(const CaseSpec& cs, const RunConfig& cfg) {
  const int nqp = (cfg.order + 2) / 2;
  const int res = cfg.resolution.value_or(cs.default_resolution);
  const std::string& spec = cfg.mesh_spec;
  if (spec.empty() || spec == "auto") return cs.make_mesh(res, nqp);
  if (spec.rfind("file:", 0) == 0) return read_mesh(spec.substr(5), nqp);

  auto split = [](const std::string& s) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      const auto colon = s.find(':', pos);
      parts.push_back(s.substr(pos, colon - pos));
      if (colon == std::string::npos) break;
      pos = colon + 1;
    }
    return parts;
  };
  const auto parts = split(spec);
  if (!cs.rect_domain)
    throw ConfigError("mesh recipe '" + spec + "' is not supported by case '" + cs.name + "'");
  const int n = (parts.size() > 1 && !parts[1].empty()) ? std::stoi(parts[1]) : res;
  Mesh mesh;
  if (parts[0] == "tri") {
    const DiagonalRule rule = (parts.size() > 2 && parts[2] == "alt") ? DiagonalRule::Alternating
                                                                      : DiagonalRule::Uniform;
    mesh = generate_structured_tri(n, n, *cs.rect_domain, rule, nqp);
  } else if (parts[0] == "quad") {
    mesh = generate_structured_quad(n, n, *cs.rect_domain, nqp);
  } else {
    throw ConfigError("unknown mesh recipe '" + spec + "'");
  }
  if (cs.periodic) mesh = pair_periodic(std::move(mesh), *cs.periodic, 1e-8);
  return mesh;
}

RunResult run_simulation(const RunConfig& cfg) {
  const CaseSpec cs = get_case(cfg.case_name);

#ifdef _OPENMP
  omp_set_num_threads(cfg.threads);
#endif

  SolverOptions opt;
  opt.order = cfg.order;
  opt.mode = cfg.mode;
  opt.limiter = cfg.limiter;
  opt.margins = cfg.margins;
  opt.lambda1p = cfg.lambda1p.value_or(cs.lambda1p);
  opt.weno_eps = cfg.weno_eps;
  opt.weno_b = cfg.weno_b;
  opt.cfl = cfg.cfl.value_or(cs.cfl);
  opt.venkat_kappa = cfg.venkat_kappa;
  opt.si_exponent = cfg.si_exponent;
  opt.detect_every_stage = cfg.detect_every_stage;
  opt.riemann = cfg.riemann.value_or(cs.riemann);
  const double t_end = cfg.t_end.value_or(cs.t_end);

  RunResult result;
  result.mesh = build_case_mesh(cs, cfg);
  result.t_end = t_end;

  Solver solver(result.mesh, opt, cs.boundary_conditions);
  solver.state() = project_initial(result.mesh, cs.initial, std::max(2 * cfg.order, 2));

  const bool writing = !cfg.out_dir.empty();
  if (writing) std::filesystem::create_directories(cfg.out_dir);

  const auto wall0 = std::chrono::steady_clock::now();
  PhaseTimes prev{};
  double t = 0.0;
  int step = 0;
  while (t < t_end - 1e-14 * t_end) {
    double dt;
    try {
      dt = std::min(solver.max_stable_dt(), t_end - t);
      solver.advance(dt, t);
    } catch (const std::exception& e) {
      throw std::runtime_error("run '" + cfg.case_name + "' failed at step " +
                               std::to_string(step) + ", t = " + std::to_string(t) + ": " +
                               e.what());
    }
    t += dt;
    ++step;

    CensusRow row;
    row.step = step;
    row.t = t;
    row.dt = dt;
    row.counts = {0, 0, 0, 0};
    for (Scheme s : solver.step_labels()) ++row.counts[static_cast<int>(s)];
    result.census.push_back(row);

    const PhaseTimes now = solver.phase_times();
    TimingRow trow;
    trow.step = step;
    trow.phases.reconstruct = now.reconstruct - prev.reconstruct;
    trow.phases.detect = now.detect - prev.detect;
    trow.phases.weights = now.weights - prev.weights;
    trow.phases.flux = now.flux - prev.flux;
    trow.wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
    result.timing.push_back(trow);
    prev = now;

    if (writing && cfg.output_every > 0 && step % cfg.output_every == 0)
      write_field_snapshot(result.mesh, solver.state(), solver.step_labels(), opt.gamma,
                           cfg.out_dir + "/fields_" + std::to_string(step) + ".vtk");
  }

  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
  result.phases = solver.phase_times();
  result.steps = step;
  result.state = solver.state();
  result.final_labels = solver.step_labels();

  if (cs.exact) {
    const auto exact_final = [&](const Vec2& p) { return cs.exact(p, t_end); };
    result.errors =
        compute_error_norms(result.mesh, result.state, exact_final, std::max(2 * cfg.order, 4));
  }

  if (writing) {
    write_field_snapshot(result.mesh, result.state, result.final_labels, opt.gamma,
                         cfg.out_dir + "/fields_" + std::to_string(step) + ".vtk");
    write_census_csv(result.census, result.mesh.n_cells(), cfg.out_dir + "/census.csv");
    write_timing_csv(result.timing, cfg.out_dir + "/timing.csv");
    if (result.errors) write_errors_csv(*result.errors, cfg.out_dir + "/errors.csv");
  }
  return result;
}

void write_field_snapshot(const Mesh& mesh, const StateField& state,
                          const std::vector<Scheme>& labels, double gamma,
                          const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "# vtk DataFile Version 3.0\n";
  out << "ucfv fields\n";
  out << "ASCII\n";
  out << "DATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << mesh.vertices.size() << " double\n";
  for (const Vec2& v : mesh.vertices) out << fmt(v.x) << " " << fmt(v.y) << " 0\n";

  std::size_t list_len = 0;
  for (const Cell& c : mesh.cells) list_len += c.vertex_ids.size() + 1;
  out << "CELLS " << mesh.cells.size() << " " << list_len << "\n";
  for (const Cell& c : mesh.cells) {
    out << c.vertex_ids.size();
    for (int v : c.vertex_ids) out << " " << v;
    out << "\n";
  }
  out << "CELL_TYPES " << mesh.cells.size() << "\n";
  for (const Cell& c : mesh.cells)
    out << (c.vertex_ids.size() == 3 ? 5 : (c.vertex_ids.size() == 4 ? 9 : 7)) << "\n";

  out << "CELL_DATA " << mesh.cells.size() << "\n";
  out << "SCALARS density double 1\nLOOKUP_TABLE default\n";
  for (const State& s : state) out << fmt(s[0]) << "\n";
  out << "SCALARS pressure double 1\nLOOKUP_TABLE default\n";
  for (const State& s : state) out << fmt(pressure(s, gamma)) << "\n";
  out << "VECTORS velocity double\n";
  for (const State& s : state) out << fmt(s[1] / s[0]) << " " << fmt(s[2] / s[0]) << " 0\n";
  out << "SCALARS scheme int 1\nLOOKUP_TABLE default\n";
  for (Scheme s : labels) out << static_cast<int>(s) << "\n";
}

void write_census_csv(const std::vector<CensusRow>& rows, int n_cells, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "step,t,dt,linear,cwenoz,muscl,first,frac_linear,frac_cwenoz,frac_muscl,frac_first\n";
  for (const auto& r : rows) {
    out << r.step << "," << fmt(r.t) << "," << fmt(r.dt);
    for (long c : r.counts) out << "," << c;
    for (long c : r.counts) out << "," << fmt(static_cast<double>(c) / n_cells);
    out << "\n";
  }
}

void write_timing_csv(const std::vector<TimingRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "step,wall,reconstruct,detect,weights,flux\n";
  for (const auto& r : rows) {
    out << r.step << "," << fmt(r.wall) << "," << fmt(r.phases.reconstruct) << ","
        << fmt(r.phases.detect) << "," << fmt(r.phases.weights) << "," << fmt(r.phases.flux)
        << "\n";
  }
}

void write_errors_csv(const ErrorReport& rep, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << "variable,linf,l2\n";
  const char* names[4] = {"rho", "rhou", "rhov", "E"};
  for (int v = 0; v < kNumVars; ++v)
    out << names[v] << "," << fmt(rep.linf[v]) << "," << fmt(rep.l2[v]) << "\n";
}

}  // namespace ucfv
