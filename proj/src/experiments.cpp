#include "apimex/experiments.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace apimex {

namespace {

void say(const LogFn& log, const std::string& line) {
  if (log) log(line);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

std::string ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir + "': " + ec.message());
  return dir;
}

std::string join(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

std::string metadata_line(const RunConfig& cfg) {
  return "problem=" + cfg.problem + " n=" + std::to_string(cfg.n) +
         " epsilon=" + format_g17(cfg.epsilon) + " gamma=" + format_g17(cfg.gamma) +
         " tableau=" + cfg.tableau + " cfl=" + format_g17(cfg.cfl) +
         " limiter=" + to_string(cfg.limiter) + " stencil=" + to_string(cfg.stencil);
}

}  // namespace

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Case build_case(const RunConfig& cfg) { return build_case(cfg, cfg.problem); }

Case build_case(const RunConfig& cfg, const std::string& problem) {
  RunConfig c = cfg;
  c.problem = problem;
  validate(c);
  Case k;
  k.grid = GridSpec::uniform(2, c.n, 1.0);
  k.model = ModelParams{c.epsilon, c.gamma};
  k.model.validate();
  k.step.cfl = c.cfl;
  k.step.tableau = get_tableau(c.tableau, c.dp1_variant);
  k.step.limiter = c.limiter;
  k.step.stencil = c.stencil;
  k.step.elliptic_tol = c.elliptic_tol;
  k.step.elliptic_max_iter = static_cast<std::size_t>(c.elliptic_max_iter);
  k.step.validate();
  if (problem == "traveling_vortex") {
    k.vortex = TravelingVortexParams::for_epsilon(c.epsilon, c.eta_relation);
    k.initial = init_traveling_vortex(k.grid, *k.vortex, k.model);
  } else if (problem == "stationary_vortex") {
    k.initial = init_stationary_vortex(k.grid, k.model);
  } else if (problem == "well_prepared") {
    k.initial = init_well_prepared(k.grid, k.model);
  } else {
    throw ConfigError("problem: unknown problem '" + problem + "'");
  }
  return k;
}

void write_fields(std::ostream& out, const ConservedState& state, const GridSpec& grid,
                  const ModelParams& model) {
  if (grid.dim != 2) throw DomainError("field dumps are two-dimensional");
  state.check_shape(grid);
  const Field mach = mach_field(state, model);
  out << grid.n[0] << ' ' << grid.n[1] << '\n';
  out << format_g17(grid.origin[0]) << ' ' << format_g17(grid.origin[1]) << ' '
      << format_g17(grid.dx[0]) << ' ' << format_g17(grid.dx[1]) << '\n';
  out << format_g17(state.time) << ' ' << format_g17(model.epsilon) << ' '
      << format_g17(model.gamma) << '\n';
  for (std::size_t c = 0; c < grid.cell_count(); ++c) {
    out << format_g17(state.rho[c]) << ' ' << format_g17(state.q[0][c]) << ' '
        << format_g17(state.q[1][c]) << ' ' << format_g17(pressure(state.rho[c], model.gamma))
        << ' ' << format_g17(mach[c]) << '\n';
  }
}

void write_fields_file(const std::string& path, const ConservedState& state,
                       const GridSpec& grid, const ModelParams& model) {
  std::ofstream out = open_output(path);
  write_fields(out, state, grid, model);
  finish(out, path);
}

std::string fields_file_name(double time) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "fields_%.6f.dat", time);
  return buf;
}

void write_diagnostics(std::ostream& out, const DiagnosticsRecord& rec,
                       const ConservedState& initial, const Mesh& mesh,
                       const std::string& metadata) {
  if (!metadata.empty()) out << "# " << metadata << '\n';
  out << "t,dt,ke,rel_ke_change,max_div_u,rho_osc\n";
  out << format_g17(initial.time) << ",0," << format_g17(rec.initial_kinetic_energy) << ",0,"
      << format_g17(div_u_max(initial, mesh)) << ',' << format_g17(density_oscillation(initial))
      << '\n';
  for (std::size_t i = 0; i < rec.size(); ++i) {
    out << format_g17(rec.times[i]) << ',' << format_g17(rec.dt_history[i]) << ','
        << format_g17(rec.kinetic_energy[i]) << ',' << format_g17(rec.rel_ke_change[i]) << ','
        << format_g17(rec.max_abs_div_u[i]) << ',' << format_g17(rec.density_oscillation[i])
        << '\n';
  }
}

void write_convergence(std::ostream& out, const std::vector<ConvergenceRow>& rows) {
  out << "N,err_u1,eoc_u1,err_u2,eoc_u2\n";
  auto opt = [](const std::optional<double>& v) { return v ? format_g17(*v) : std::string(); };
  for (const auto& r : rows) {
    if (r.failed) {
      out << r.n << ",failed,,failed,\n";
      continue;
    }
    out << r.n << ',' << format_g17(r.err_u1) << ',' << opt(r.eoc_u1) << ','
        << format_g17(r.err_u2) << ',' << opt(r.eoc_u2) << '\n';
  }
}

void write_ap_sweep(std::ostream& out, const std::vector<ApSweepRow>& rows) {
  out << "epsilon,rho_osc,max_div_u\n";
  for (const auto& r : rows) {
    out << format_g17(r.epsilon) << ',' << format_g17(r.rho_osc) << ','
        << format_g17(r.max_div_u) << '\n';
  }
}

std::vector<ConvergenceRow> convergence_rows(const RunConfig& cfg, double epsilon,
                                             const LogFn& log) {
  std::vector<ConvergenceRow> rows;
  for (int n : cfg.grids) {
    RunConfig c = cfg;
    c.n = n;
    c.epsilon = epsilon;
    ConvergenceRow row;
    row.n = n;
    try {
      const Case k = build_case(c, "traveling_vortex");
      const Mesh mesh(k.grid);
      const RunResult res = run(k.initial, k.step, k.model, mesh, c.t_end);
      const ConservedState exact = exact_traveling_vortex(c.t_end, k.grid, *k.vortex, k.model);
      const auto u = primitive_velocity(res.state);
      const auto ue = primitive_velocity(exact);
      row.err_u1 = l2_error(u[0], ue[0], k.grid);
      row.err_u2 = l2_error(u[1], ue[1], k.grid);
      say(log, "epsilon " + format_g17(epsilon) + " N " + std::to_string(n) + ": " +
                   std::to_string(res.diagnostics.size()) + " steps, err_u1 " +
                   format_g17(row.err_u1) + ", err_u2 " + format_g17(row.err_u2));
    } catch (const SolverError& e) {
      row.failed = true;
      say(log, "epsilon " + format_g17(epsilon) + " N " + std::to_string(n) +
                   " failed: " + e.what());
    }
    rows.push_back(row);
  }
  fill_eoc(rows);
  return rows;
}

std::vector<ApSweepRow> ap_sweep_rows(const RunConfig& cfg, const LogFn& log) {
  std::vector<ApSweepRow> rows;
  for (double eps : cfg.epsilons) {
    RunConfig c = cfg;
    c.epsilon = eps;
    const Case k = build_case(c, "well_prepared");
    const Mesh mesh(k.grid);
    const RunResult res =
        run_steps(k.initial, k.step, k.model, mesh, static_cast<std::size_t>(c.steps));
    ApSweepRow row{eps, density_oscillation(res.state), div_u_max(res.state, mesh)};
    say(log, "epsilon " + format_g17(eps) + ": rho_osc " + format_g17(row.rho_osc) +
                 ", max_div_u " + format_g17(row.max_div_u));
    rows.push_back(row);
  }
  return rows;
}

RunResult cmd_run(const RunConfig& cfg, const LogFn& log) {
  const Case k = build_case(cfg);
  const Mesh mesh(k.grid);
  const std::string dir = ensure_dir(cfg.out);
  const std::string diag_path = join(dir, "diagnostics.csv");
  auto dump = [&](const ConservedState& s) {
    const std::string path = join(dir, fields_file_name(s.time));
    write_fields_file(path, s, k.grid, k.model);
    say(log, "wrote " + path);
  };
  auto write_diag = [&](const DiagnosticsRecord& rec) {
    std::ofstream out = open_output(diag_path);
    write_diagnostics(out, rec, k.initial, mesh, metadata_line(cfg));
    finish(out, diag_path);
  };

  if (cfg.dump_every > 0) dump(k.initial);
  const auto every = static_cast<std::size_t>(cfg.dump_every);
  StepObserver observer;
  if (every > 0) {
    observer = [&](const ConservedState& s, std::size_t step) {
      if (step % every == 0) dump(s);
    };
  }
  RunResult res;
  try {
    res = run(k.initial, k.step, k.model, mesh, cfg.t_end, observer);
  } catch (const RunAborted& e) {
    write_diag(e.partial().diagnostics);
    say(log, "solver failed, partial diagnostics in " + diag_path);
    throw;
  }
  const bool dumped_last = every > 0 && res.diagnostics.size() % every == 0;
  if (!dumped_last) dump(res.state);
  write_diag(res.diagnostics);
  say(log, std::to_string(res.diagnostics.size()) + " steps to t = " +
               format_g17(res.state.time) + ", wrote " + diag_path);
  return res;
}

std::vector<std::string> cmd_convergence(const RunConfig& cfg, const LogFn& log) {
  if (cfg.problem != "traveling_vortex") {
    throw ConfigError("problem: convergence runs the traveling vortex, got '" + cfg.problem + "'");
  }
  validate(cfg);
  const std::string dir = ensure_dir(cfg.out);
  std::vector<std::string> paths;
  for (double eps : cfg.epsilons) {
    const auto rows = convergence_rows(cfg, eps, log);
    char name[64];
    std::snprintf(name, sizeof name, "convergence_eps%g.csv", eps);
    const std::string path = join(dir, name);
    std::ofstream out = open_output(path);
    write_convergence(out, rows);
    finish(out, path);
    say(log, "wrote " + path);
    paths.push_back(path);
  }
  return paths;
}

std::string cmd_ap_sweep(const RunConfig& cfg, const LogFn& log) {
  validate(cfg);
  const std::string dir = ensure_dir(cfg.out);
  const auto rows = ap_sweep_rows(cfg, log);
  const std::string path = join(dir, "ap_sweep.csv");
  std::ofstream out = open_output(path);
  write_ap_sweep(out, rows);
  finish(out, path);
  say(log, "wrote " + path);
  return path;
}

std::string tableau_check_report(const std::vector<std::string>& names, Dp1Variant variant,
                                 bool* passed) {
  const std::vector<std::string> list = names.empty() ? available_tableaux() : names;
  std::ostringstream out;
  bool ok = true;
  for (const auto& name : list) {
    const ValidationReport report = validate_tableau(get_tableau(name, variant));
    ok = ok && report.passed();
    out << report.to_string() << '\n';
  }
  if (passed) *passed = ok;
  return out.str();
}

}  // namespace apimex
