#include "apimex/spatial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace apimex {

namespace {

void check_axis(const Mesh& mesh, int axis) {
  if (axis < 0 || axis >= mesh.dim()) {
    throw DomainError("axis " + std::to_string(axis) + " out of range for a " +
                      std::to_string(mesh.dim()) + "-d grid");
  }
}

}  // namespace

Field delta(const Field& faces, const Mesh& mesh, int axis) {
  check_axis(mesh, axis);
  Field out(mesh.size());
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    out[c] = faces[c] - faces[mesh.neighbor(c, axis, -1)];
  }
  return out;
}

Field mu(const Field& cells, const Mesh& mesh, int axis) {
  check_axis(mesh, axis);
  Field out(mesh.size());
  for (std::size_t c = 0; c < mesh.size(); ++c) {
    out[c] = 0.5 * (cells[c] + cells[mesh.neighbor(c, axis, 1)]);
  }
  return out;
}

double minmod(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  return a > 0.0 ? std::min(a, b) : std::max(a, b);
}

InterfaceValues reconstruct(const Field& cells, const Mesh& mesh, int axis, Limiter limiter) {
  check_axis(mesh, axis);
  const std::size_t n = mesh.size();
  Field slope(n);
  for (std::size_t c = 0; c < n; ++c) {
    const double w = cells[c];
    const double right = cells[mesh.neighbor(c, axis, 1)] - w;
    const double left = w - cells[mesh.neighbor(c, axis, -1)];
    slope[c] = limiter == Limiter::Minmod ? minmod(right, left) : 0.5 * (right + left);
  }
  InterfaceValues iv{Field(n), Field(n)};
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t r = mesh.neighbor(c, axis, 1);
    iv.minus[c] = cells[c] + 0.5 * slope[c];
    iv.plus[c] = cells[r] - 0.5 * slope[r];
  }
  return iv;
}

FluxVector explicit_momentum_flux(const PointState& u, double gamma, int axis,
                                  double split_pressure_scale) {
  const double vel = u.q[axis] / u.rho;
  FluxVector f{vel * u.q[0], vel * u.q[1], vel * u.q[2]};
  f[axis] += split_pressure_scale * pressure_excess(u.rho, gamma);
  return f;
}

double wave_speed(const InterfacePair& pair, int axis) {
  return 2.0 * std::max(std::fabs(pair.minus.q[axis] / pair.minus.rho),
                        std::fabs(pair.plus.q[axis] / pair.plus.rho));
}

FluxVector rusanov_momentum_flux(const InterfacePair& pair, double gamma, int axis,
                                 double split_pressure_scale) {
  const FluxVector fm = explicit_momentum_flux(pair.minus, gamma, axis, split_pressure_scale);
  const FluxVector fp = explicit_momentum_flux(pair.plus, gamma, axis, split_pressure_scale);
  const double alpha = wave_speed(pair, axis);
  FluxVector out{};
  for (int j = 0; j < kMaxDim; ++j) {
    out[j] = 0.5 * (fp[j] + fm[j]) - 0.5 * alpha * (pair.plus.q[j] - pair.minus.q[j]);
  }
  return out;
}

Field central_mass_flux(const Field& q_axis, const Mesh& mesh, int axis) {
  return mu(q_axis, mesh, axis);
}

Field divergence(const std::vector<Field>& q, const Mesh& mesh) {
  Field out(mesh.size(), 0.0);
  for (int m = 0; m < mesh.dim(); ++m) {
    const double inv = 1.0 / mesh.dx(m);
    const Field d = delta(central_mass_flux(q[m], mesh, m), mesh, m);
    for (std::size_t c = 0; c < mesh.size(); ++c) out[c] += d[c] * inv;
  }
  return out;
}

std::vector<Field> gradient(const Field& rho, const Mesh& mesh) {
  std::vector<Field> out;
  out.reserve(static_cast<std::size_t>(mesh.dim()));
  for (int m = 0; m < mesh.dim(); ++m) {
    const double inv = 1.0 / mesh.dx(m);
    Field g = delta(mu(rho, mesh, m), mesh, m);
    for (double& v : g) v *= inv;
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Field> explicit_flux_divergence(const ConservedState& state, const ModelParams& model,
                                            const Mesh& mesh, Limiter limiter) {
  const int d = mesh.dim();
  const std::size_t n = mesh.size();
  const double scale = 1.0 / (model.epsilon * model.epsilon);
  std::vector<Field> out(static_cast<std::size_t>(d), Field(n, 0.0));
  std::vector<Field> face_flux(static_cast<std::size_t>(d), Field(n));

  for (int m = 0; m < d; ++m) {
    const InterfaceValues r = reconstruct(state.rho, mesh, m, limiter);
    std::vector<InterfaceValues> qs;
    qs.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) qs.push_back(reconstruct(state.q[j], mesh, m, limiter));

    for (std::size_t c = 0; c < n; ++c) {
      InterfacePair pair;
      pair.minus.rho = r.minus[c];
      pair.plus.rho = r.plus[c];
      if (!(pair.minus.rho > 0.0) || !(pair.plus.rho > 0.0)) {
        throw SolverError("non-positive reconstructed density at face of cell " +
                          std::to_string(c) + " along axis " + std::to_string(m));
      }
      for (int j = 0; j < d; ++j) {
        pair.minus.q[j] = qs[j].minus[c];
        pair.plus.q[j] = qs[j].plus[c];
      }
      const FluxVector f = rusanov_momentum_flux(pair, model.gamma, m, scale);
      for (int j = 0; j < d; ++j) face_flux[j][c] = f[j];
    }
    const double inv = 1.0 / mesh.dx(m);
    for (int j = 0; j < d; ++j) {
      const Field& ff = face_flux[j];
      Field& o = out[j];
      for (std::size_t c = 0; c < n; ++c) o[c] += (ff[c] - ff[mesh.neighbor(c, m, -1)]) * inv;
    }
  }
  return out;
}

}  // namespace apimex
