#pragma once

// Experiment drivers behind the CLI subcommands, plus the file formats they
// write.

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "apimex/config.hpp"
#include "apimex/diagnostics.hpp"
#include "apimex/stepper.hpp"

namespace apimex {

/// Receives one human-readable progress line at a time.
using LogFn = std::function<void(const std::string&)>;

/// A fully assembled run: grid, model, stepping options and initial data.
struct Case {
  GridSpec grid;
  ModelParams model;
  StepConfig step;
  ConservedState initial;
  std::optional<TravelingVortexParams> vortex;  // set for the traveling vortex
};

/// Builds the case named by cfg.problem. Throws ConfigError or LookupError.
Case build_case(const RunConfig& cfg);

/// Same as build_case but with the problem replaced by `problem`.
Case build_case(const RunConfig& cfg, const std::string& problem);

/// Field dump: `nx ny`, `x0 y0 dx dy`, `time epsilon gamma`, then one
/// `rho q1 q2 p mach` line per cell with x fastest, all reals as %.17g.
void write_fields(std::ostream& out, const ConservedState& state, const GridSpec& grid,
                  const ModelParams& model);
void write_fields_file(const std::string& path, const ConservedState& state,
                       const GridSpec& grid, const ModelParams& model);

/// `fields_<time>.dat` with the time printed as %.6f.
std::string fields_file_name(double time);

/// diagnostics.csv: optional `# ...` metadata line, the header
/// `t,dt,ke,rel_ke_change,max_div_u,rho_osc`, a t = 0 row with dt = 0, then
/// one row per step.
void write_diagnostics(std::ostream& out, const DiagnosticsRecord& rec, const ConservedState& initial,
                       const Mesh& mesh, const std::string& metadata = {});

/// `N,err_u1,eoc_u1,err_u2,eoc_u2`; absent EOC values are empty fields and
/// failed rows carry `failed` in both error columns.
void write_convergence(std::ostream& out, const std::vector<ConvergenceRow>& rows);

struct ApSweepRow {
  double epsilon = 0.0;
  double rho_osc = 0.0;
  double max_div_u = 0.0;
};

/// `epsilon,rho_osc,max_div_u`
void write_ap_sweep(std::ostream& out, const std::vector<ApSweepRow>& rows);

/// Velocity L2 errors of a traveling-vortex run at t_end, one grid per entry.
std::vector<ConvergenceRow> convergence_rows(const RunConfig& cfg, double epsilon,
                                             const LogFn& log = {});

/// Well-prepared data, cfg.steps CFL steps on cfg.n^2 cells per epsilon.
std::vector<ApSweepRow> ap_sweep_rows(const RunConfig& cfg, const LogFn& log = {});

/// Runs cfg to t_end and writes field dumps and diagnostics.csv into cfg.out.
/// On solver failure the partial diagnostics are written before RunAborted
/// propagates.
RunResult cmd_run(const RunConfig& cfg, const LogFn& log = {});

/// Writes `convergence_eps<epsilon>.csv` per epsilon into cfg.out.
/// Returns the written paths.
std::vector<std::string> cmd_convergence(const RunConfig& cfg, const LogFn& log = {});

/// Writes `ap_sweep.csv` into cfg.out and returns its path.
std::string cmd_ap_sweep(const RunConfig& cfg, const LogFn& log = {});

/// Validation reports of the named tableaux (all shipped ones when `names`
/// is empty), one block each. Sets `passed` when every required check holds.
/// Throws LookupError for an unknown name.
std::string tableau_check_report(const std::vector<std::string>& names, Dp1Variant variant,
                                 bool* passed = nullptr);

/// %.17g
std::string format_g17(double v);

}  // namespace apimex
