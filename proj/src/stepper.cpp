#include "apimex/stepper.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace apimex {

void StepConfig::validate() const {
  if (!(cfl > 0.0) || !(cfl < 1.0)) {
    throw ConfigError("cfl must lie in (0, 1), got " + std::to_string(cfl));
  }
  if (!(elliptic_tol > 0.0)) throw ConfigError("elliptic_tol must be positive");
  if (fixed_dt && !(*fixed_dt > 0.0)) throw ConfigError("fixed dt must be positive");
  const ValidationReport report = validate_tableau(tableau);
  const auto* w = report.find("explicit stiffly accurate (last row = weights)");
  const auto* v = report.find("implicit stiffly accurate (last row = weights)");
  if (!w || !w->passed || !v || !v->passed) {
    throw ConfigError("tableau " + tableau.name + " is not stiffly accurate");
  }
}

void StageWorkspace::clear() {
  rho_hat.clear();
  q_hat.clear();
  stage_rho.clear();
  stage_q.clear();
  stage_div_q.clear();
  stage_grad_rho.clear();
  stage_flux_div.clear();
  reports.clear();
}

double compute_dt(const ConservedState& state, const Mesh& mesh, double cfl) {
  double rate = 0.0;
  for (int m = 0; m < mesh.dim(); ++m) {
    const double inv = 1.0 / mesh.dx(m);
    const Field& qm = state.q[m];
    for (std::size_t c = 0; c < mesh.size(); ++c) {
      rate = std::max(rate, 2.0 * std::fabs(qm[c] / state.rho[c]) * inv);
    }
  }
  if (rate == 0.0) return cfl * mesh.grid().min_spacing();
  return cfl / rate;
}

namespace {

const std::vector<Field>& flux_divergence_of(int l, StageWorkspace& ws, const StageContext& ctx) {
  auto& cached = ws.stage_flux_div[static_cast<std::size_t>(l)];
  if (cached.empty()) {
    ConservedState u;
    u.rho = ws.stage_rho[l];
    u.q = ws.stage_q[l];
    cached = explicit_flux_divergence(u, ctx.model, ctx.mesh, ctx.limiter);
  }
  return cached;
}

}  // namespace

void assemble_stage_explicit(int k, StageWorkspace& ws, const StageContext& ctx) {
  if (k < 0 || k >= ctx.tableau.stages || ws.completed() != static_cast<std::size_t>(k)) {
    throw SolverError("stage " + std::to_string(k) + " assembled out of order");
  }
  const int d = ctx.mesh.dim();
  const std::size_t n = ctx.mesh.size();
  const double dt = ctx.dt;
  const double inv_eps2 = 1.0 / (ctx.model.epsilon * ctx.model.epsilon);
  const auto& a = ctx.tableau.a_imp[k];
  const auto& at = ctx.tableau.a_exp[k];

  ws.rho_hat = ctx.base.rho;
  ws.q_hat = ctx.base.q;
  for (int l = 0; l < k; ++l) {
    if (a[l] != 0.0) {
      const double wm = dt * a[l];
      const double wg = dt * a[l] * inv_eps2;
      const Field& dq = ws.stage_div_q[l];
      for (std::size_t c = 0; c < n; ++c) ws.rho_hat[c] -= wm * dq[c];
      for (int j = 0; j < d; ++j) {
        const Field& g = ws.stage_grad_rho[l][j];
        Field& qh = ws.q_hat[j];
        for (std::size_t c = 0; c < n; ++c) qh[c] -= wg * g[c];
      }
    }
    if (at[l] != 0.0) {
      const double we = dt * at[l];
      const auto& r = flux_divergence_of(l, ws, ctx);
      for (int j = 0; j < d; ++j) {
        Field& qh = ws.q_hat[j];
        for (std::size_t c = 0; c < n; ++c) qh[c] -= we * r[j][c];
      }
    }
  }
}

void imex_stage(int k, StageWorkspace& ws, const StageContext& ctx) {
  if (ws.completed() != static_cast<std::size_t>(k) || ws.rho_hat.size() != ctx.mesh.size()) {
    throw SolverError("stage " + std::to_string(k) + " solved before its explicit assembly");
  }
  const int d = ctx.mesh.dim();
  const std::size_t n = ctx.mesh.size();
  const double akk = ctx.tableau.a_imp[k][k];

  Field rho;
  std::vector<Field> q;
  std::vector<Field> grad;
  if (akk == 0.0) {
    rho = ws.rho_hat;
    q = ws.q_hat;
    grad = gradient(rho, ctx.mesh);
    ws.reports.push_back({0, 0.0, true});
  } else {
    const double eps2 = ctx.model.epsilon * ctx.model.epsilon;
    const double h = ctx.dt * akk;
    const Field div_hat = divergence(ws.q_hat, ctx.mesh);
    Field rhs(n);
    for (std::size_t c = 0; c < n; ++c) rhs[c] = ws.rho_hat[c] - h * div_hat[c];
    EllipticSolution sol;
    try {
      sol = solve({h * h / eps2, ctx.stencil}, ctx.mesh, rhs, {ctx.elliptic_tol, ctx.elliptic_max_iter});
    } catch (const EllipticSolveError& e) {
      throw EllipticSolveError("stage " + std::to_string(k + 1) + ": " + e.what(), e.report());
    }
    ws.reports.push_back(sol.report);
    rho = std::move(sol.rho);
    // The mean is annihilated by the gradient; differencing the fluctuation
    // alone avoids cancellation against rho ~ 1.
    grad = gradient(sol.fluctuation, ctx.mesh);
    q = ws.q_hat;
    const double w = h / eps2;
    for (int j = 0; j < d; ++j) {
      for (std::size_t c = 0; c < n; ++c) q[j][c] -= w * grad[j][c];
    }
  }

  for (std::size_t c = 0; c < n; ++c) {
    if (!(rho[c] > 0.0)) {
      throw SolverError("density lost positivity at stage " + std::to_string(k + 1) + ", cell " +
                        std::to_string(c) + " (rho = " + std::to_string(rho[c]) + ")");
    }
  }

  ws.stage_div_q.push_back(divergence(q, ctx.mesh));
  ws.stage_grad_rho.push_back(std::move(grad));
  ws.stage_flux_div.emplace_back();
  ws.stage_rho.push_back(std::move(rho));
  ws.stage_q.push_back(std::move(q));
}

ConservedState imex_step(const ConservedState& state, const StepConfig& config,
                         const ModelParams& model, const Mesh& mesh, double dt,
                         StageWorkspace* ws) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw SolverError("time step must be positive");
  StageWorkspace local;
  StageWorkspace& w = ws ? *ws : local;
  w.clear();
  const StageContext ctx{config.tableau, state, model, mesh, dt,
                         config.limiter, config.stencil, config.elliptic_tol,
                         config.elliptic_max_iter};
  for (int k = 0; k < config.tableau.stages; ++k) {
    assemble_stage_explicit(k, w, ctx);
    imex_stage(k, w, ctx);
  }
  ConservedState next;
  next.rho = w.stage_rho.back();
  next.q = w.stage_q.back();
  next.time = state.time + dt;
  return next;
}

namespace {

void record(DiagnosticsRecord& rec, const ConservedState& s, const Mesh& mesh, double dt) {
  const double ke = kinetic_energy(s, mesh.grid());
  rec.times.push_back(s.time);
  rec.dt_history.push_back(dt);
  rec.kinetic_energy.push_back(ke);
  rec.rel_ke_change.push_back(rec.initial_kinetic_energy > 0.0
                                  ? (ke - rec.initial_kinetic_energy) / rec.initial_kinetic_energy
                                  : 0.0);
  rec.max_abs_div_u.push_back(div_u_max(s, mesh));
  rec.density_oscillation.push_back(density_oscillation(s));
}

RunResult start(const ConservedState& initial, const StepConfig& config, const ModelParams& model,
                const Mesh& mesh) {
  config.validate();
  model.validate();
  initial.check_shape(mesh.grid());
  initial.check_positive();
  RunResult res;
  res.state = initial;
  res.diagnostics.initial_kinetic_energy = kinetic_energy(initial, mesh.grid());
  return res;
}

// Advances res by one step of size dt; converts failures into RunAborted.
void advance(RunResult& res, const StepConfig& config, const ModelParams& model, const Mesh& mesh,
             double dt, const StepObserver& observer, std::optional<double> land_on = {}) {
  ConservedState next;
  try {
    next = imex_step(res.state, config, model, mesh, dt);
  } catch (const SolverError& e) {
    const std::string what = "step " + std::to_string(res.diagnostics.size() + 1) + " at t = " +
                             std::to_string(res.state.time) + ": " + e.what();
    throw RunAborted(what, std::move(res));
  }
  if (land_on) next.time = *land_on;
  res.state = std::move(next);
  record(res.diagnostics, res.state, mesh, dt);
  if (observer) observer(res.state, res.diagnostics.size());
}

}  // namespace

RunResult run(const ConservedState& initial, const StepConfig& config, const ModelParams& model,
              const Mesh& mesh, double t_end, const StepObserver& observer) {
  RunResult res = start(initial, config, model, mesh);
  if (t_end < initial.time) throw ConfigError("t_end lies before the initial time");
  while (res.state.time < t_end) {
    double dt = config.fixed_dt ? *config.fixed_dt : compute_dt(res.state, mesh, config.cfl);
    const double remaining = t_end - res.state.time;
    const bool last = remaining <= dt * (1.0 + 1e-12);
    if (last) dt = remaining;
    advance(res, config, model, mesh, dt, observer,
            last ? std::optional<double>(t_end) : std::nullopt);
  }
  return res;
}

RunResult run_steps(const ConservedState& initial, const StepConfig& config,
                    const ModelParams& model, const Mesh& mesh, std::size_t steps,
                    const StepObserver& observer) {
  RunResult res = start(initial, config, model, mesh);
  for (std::size_t i = 0; i < steps; ++i) {
    const double dt = config.fixed_dt ? *config.fixed_dt : compute_dt(res.state, mesh, config.cfl);
    advance(res, config, model, mesh, dt, observer);
  }
  return res;
}

}  // namespace apimex
