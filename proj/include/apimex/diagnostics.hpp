#pragma once

#include <optional>
#include <vector>

#include "apimex/core.hpp"

namespace apimex {

/// Per-step time series collected by the time loop.
struct DiagnosticsRecord {
  double initial_kinetic_energy = 0.0;
  std::vector<double> times;
  std::vector<double> dt_history;
  std::vector<double> kinetic_energy;
  std::vector<double> rel_ke_change;
  std::vector<double> max_abs_div_u;
  std::vector<double> density_oscillation;

  std::size_t size() const { return times.size(); }
};

struct ConvergenceRow {
  int n = 0;
  bool failed = false;
  double err_u1 = 0.0;
  std::optional<double> eoc_u1;
  double err_u2 = 0.0;
  std::optional<double> eoc_u2;
};

/// sqrt(sum (a - b)^2 * cell volume). Throws DomainError on shape mismatch.
double l2_error(const Field& a, const Field& b, const GridSpec& grid);

/// log2(coarse / fine) under grid doubling; empty unless both are positive.
std::optional<double> eoc(double err_coarse, double err_fine);

/// Fills the EOC columns of consecutive non-failed rows.
void fill_eoc(std::vector<ConvergenceRow>& rows);

/// sum 1/2 |q|^2 / rho * cell volume
double kinetic_energy(const ConservedState& state, const GridSpec& grid);

/// M = sqrt(|u|^2 / (gamma p / rho)) per cell.
Field mach_field(const ConservedState& state, const ModelParams& model);

/// max_i | sum_m (u_{m,i+1} - u_{m,i-1}) / (2 dx_m) |
double div_u_max(const ConservedState& state, const Mesh& mesh);

/// max rho - min rho
double density_oscillation(const ConservedState& state);

}  // namespace apimex
