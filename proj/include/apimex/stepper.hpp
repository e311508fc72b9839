#pragma once

// Additive IMEX-RK time stepping with the elliptic reformulation.
//
// Stage k (0-based) of an s-stage scheme:
//   rho_hat = rho^n - dt sum_{l<k} a_kl div q^l
//   q_hat   = q^n - dt sum_{l<k} at_kl R(U^l) - dt/eps^2 sum_{l<k} a_kl grad rho^l
//   (I - dt^2 a_kk^2 / eps^2 L_h) rho^k = rho_hat - dt a_kk div q_hat
//   q^k     = q_hat - dt a_kk / eps^2 grad rho^k
// where R is the Rusanov divergence of the explicit momentum flux (including
// the split pressure (p - rho)/eps^2), a/at are the implicit/explicit
// tableau matrices, and div/grad are the wide central pair. Stiffly accurate
// tableaux make (rho^s, q^s) the new state.

#include <functional>
#include <optional>
#include <vector>

#include "apimex/core.hpp"
#include "apimex/diagnostics.hpp"
#include "apimex/elliptic.hpp"
#include "apimex/spatial.hpp"
#include "apimex/tableaux.hpp"

namespace apimex {

struct StepConfig {
  double cfl = 0.45;
  DoubleTableau tableau = get_tableau("DP2-A(2,4,2)");
  Limiter limiter = Limiter::Minmod;
  Stencil stencil = Stencil::ExactComposition;
  double elliptic_tol = 1e-12;
  std::size_t elliptic_max_iter = 0;  // 0 selects 10 * cell count
  std::optional<double> fixed_dt;  // bypasses the CFL rule when set

  void validate() const;
};

struct StageWorkspace {
  Field rho_hat;
  std::vector<Field> q_hat;
  std::vector<Field> stage_rho;
  std::vector<std::vector<Field>> stage_q;
  std::vector<Field> stage_div_q;
  std::vector<std::vector<Field>> stage_grad_rho;
  std::vector<std::vector<Field>> stage_flux_div;  // filled on first use
  std::vector<EllipticSolveReport> reports;

  void clear();
  std::size_t completed() const { return stage_rho.size(); }
};

/// Everything a stage needs besides the workspace.
struct StageContext {
  const DoubleTableau& tableau;
  const ConservedState& base;  // state at t^n
  const ModelParams& model;
  const Mesh& mesh;
  double dt;
  Limiter limiter = Limiter::Minmod;
  Stencil stencil = Stencil::ExactComposition;
  double elliptic_tol = 1e-12;
  std::size_t elliptic_max_iter = 0;
};

/// dt = cfl / max_{i,m} 2|u_m| / dx_m; cfl * min dx for a fluid at rest.
double compute_dt(const ConservedState& state, const Mesh& mesh, double cfl);

/// Fills ws.rho_hat and ws.q_hat for stage k. Requires stages 0..k-1 done.
void assemble_stage_explicit(int k, StageWorkspace& ws, const StageContext& ctx);

/// Solves stage k and appends (rho^k, q^k) to the workspace. Requires
/// assemble_stage_explicit(k) first. Throws SolverError on non-convergence
/// or when rho^k loses positivity.
void imex_stage(int k, StageWorkspace& ws, const StageContext& ctx);

/// One full step of size dt. The optional workspace receives the stage data.
ConservedState imex_step(const ConservedState& state, const StepConfig& config,
                         const ModelParams& model, const Mesh& mesh, double dt,
                         StageWorkspace* ws = nullptr);

struct RunResult {
  ConservedState state;
  DiagnosticsRecord diagnostics;
};

/// Raised by run() when a step fails; carries what was computed so far.
class RunAborted : public SolverError {
 public:
  RunAborted(const std::string& what, RunResult partial)
      : SolverError(what), partial_(std::move(partial)) {}
  const RunResult& partial() const { return partial_; }

 private:
  RunResult partial_;
};

/// Called after every accepted step with the new state and the step count.
using StepObserver = std::function<void(const ConservedState&, std::size_t)>;

/// Steps from state.time to t_end, clipping the last step to land on t_end.
RunResult run(const ConservedState& initial, const StepConfig& config, const ModelParams& model,
              const Mesh& mesh, double t_end, const StepObserver& observer = {});

/// Runs exactly `steps` steps.
RunResult run_steps(const ConservedState& initial, const StepConfig& config,
                    const ModelParams& model, const Mesh& mesh, std::size_t steps,
                    const StepObserver& observer = {});

}  // namespace apimex
