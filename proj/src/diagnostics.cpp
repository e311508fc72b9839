#include "apimex/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace apimex {

double l2_error(const Field& a, const Field& b, const GridSpec& grid) {
  if (a.size() != b.size() || a.size() != grid.cell_count()) {
    throw DomainError("l2_error: field shapes do not match");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s * grid.cell_volume());
}

std::optional<double> eoc(double err_coarse, double err_fine) {
  if (!(err_coarse > 0.0) || !(err_fine > 0.0)) return std::nullopt;
  return std::log2(err_coarse / err_fine);
}

void fill_eoc(std::vector<ConvergenceRow>& rows) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].eoc_u1.reset();
    rows[i].eoc_u2.reset();
    if (i == 0 || rows[i].failed || rows[i - 1].failed) continue;
    rows[i].eoc_u1 = eoc(rows[i - 1].err_u1, rows[i].err_u1);
    rows[i].eoc_u2 = eoc(rows[i - 1].err_u2, rows[i].err_u2);
  }
}

double kinetic_energy(const ConservedState& state, const GridSpec& grid) {
  double s = 0.0;
  for (std::size_t c = 0; c < state.rho.size(); ++c) {
    double q2 = 0.0;
    for (const auto& qm : state.q) q2 += qm[c] * qm[c];
    s += 0.5 * q2 / state.rho[c];
  }
  return s * grid.cell_volume();
}

Field mach_field(const ConservedState& state, const ModelParams& model) {
  Field m(state.rho.size());
  for (std::size_t c = 0; c < m.size(); ++c) {
    const double rho = state.rho[c];
    double u2 = 0.0;
    for (const auto& qm : state.q) u2 += (qm[c] / rho) * (qm[c] / rho);
    const double c2 = model.gamma * pressure(rho, model.gamma) / rho;
    m[c] = std::sqrt(u2 / c2);
  }
  return m;
}

double div_u_max(const ConservedState& state, const Mesh& mesh) {
  const std::vector<Field> u = primitive_velocity(state);
  double worst = 0.0;
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    double d = 0.0;
    for (int m = 0; m < mesh.dim(); ++m) {
      d += (u[m][mesh.neighbor(c, m, 1)] - u[m][mesh.neighbor(c, m, -1)]) / (2.0 * mesh.dx(m));
    }
    worst = std::max(worst, std::fabs(d));
  }
  return worst;
}

double density_oscillation(const ConservedState& state) {
  const auto [lo, hi] = std::minmax_element(state.rho.begin(), state.rho.end());
  return *hi - *lo;
}

}  // namespace apimex
