#include "apimex/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace apimex {

GridSpec GridSpec::make(int dim, const std::array<int, kMaxDim>& n,
                        const std::array<double, kMaxDim>& origin,
                        const std::array<double, kMaxDim>& extent) {
  if (dim < 1 || dim > kMaxDim) {
    throw ConfigError("grid dimension must be 1, 2 or 3, got " + std::to_string(dim));
  }
  GridSpec g;
  g.dim = dim;
  std::size_t total = 1;
  for (int m = 0; m < kMaxDim; ++m) {
    if (m < dim) {
      if (n[m] < 4) {
        throw ConfigError("grid axis " + std::to_string(m) + " needs at least 4 cells, got " +
                          std::to_string(n[m]));
      }
      if (!(extent[m] > 0.0) || !std::isfinite(extent[m]) || !std::isfinite(origin[m])) {
        throw ConfigError("grid axis " + std::to_string(m) + " has a non-positive extent");
      }
      g.n[m] = n[m];
      g.origin[m] = origin[m];
      g.extent[m] = extent[m];
      g.dx[m] = extent[m] / n[m];
      total *= static_cast<std::size_t>(n[m]);
    } else {
      g.n[m] = 1;
      g.origin[m] = 0.0;
      g.extent[m] = 1.0;
      g.dx[m] = 1.0;
    }
  }
  if (total > std::numeric_limits<std::uint32_t>::max()) {
    throw ConfigError("grid too large");
  }
  return g;
}

GridSpec GridSpec::uniform(int dim, int cells, double length) {
  return make(dim, {cells, cells, cells}, {0.0, 0.0, 0.0}, {length, length, length});
}

std::size_t GridSpec::cell_count() const {
  std::size_t total = 1;
  for (int m = 0; m < dim; ++m) total *= static_cast<std::size_t>(n[m]);
  return total;
}

double GridSpec::cell_volume() const {
  double v = 1.0;
  for (int m = 0; m < dim; ++m) v *= dx[m];
  return v;
}

double GridSpec::min_spacing() const {
  double h = dx[0];
  for (int m = 1; m < dim; ++m) h = std::min(h, dx[m]);
  return h;
}

std::size_t GridSpec::stride(int axis) const {
  std::size_t s = 1;
  for (int m = 0; m < axis; ++m) s *= static_cast<std::size_t>(n[m]);
  return s;
}

std::size_t GridSpec::flat(const MultiIndex& i) const {
  std::size_t idx = 0;
  for (int m = dim - 1; m >= 0; --m) {
    idx = idx * static_cast<std::size_t>(n[m]) + static_cast<std::size_t>(i[m]);
  }
  return idx;
}

MultiIndex GridSpec::unflatten(std::size_t cell) const {
  MultiIndex i{0, 0, 0};
  for (int m = 0; m < dim; ++m) {
    i[m] = static_cast<long>(cell % static_cast<std::size_t>(n[m]));
    cell /= static_cast<std::size_t>(n[m]);
  }
  return i;
}

MultiIndex wrap_index(const MultiIndex& i, const GridSpec& grid) {
  MultiIndex out{0, 0, 0};
  for (int m = 0; m < grid.dim; ++m) {
    const long n = grid.n[m];
    long r = i[m] % n;
    if (r < 0) r += n;
    out[m] = r;
  }
  return out;
}

Mesh::Mesh(GridSpec grid) : grid_(grid), size_(grid.cell_count()) {
  for (int m = 0; m < grid_.dim; ++m) {
    for (int off = -2; off <= 2; ++off) {
      auto& t = table_[m][off + 2];
      t.resize(size_);
      for (std::size_t c = 0; c < size_; ++c) {
        MultiIndex i = grid_.unflatten(c);
        i[m] += off;
        t[c] = static_cast<std::uint32_t>(grid_.flat(wrap_index(i, grid_)));
      }
    }
  }
}

void ModelParams::validate() const {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ConfigError("epsilon must be positive");
  }
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw ConfigError("gamma must be >= 1");
  }
}

ConservedState ConservedState::zeros(const GridSpec& grid) {
  ConservedState s;
  s.rho.assign(grid.cell_count(), 0.0);
  s.q.assign(static_cast<std::size_t>(grid.dim), Field(grid.cell_count(), 0.0));
  return s;
}

void ConservedState::check_shape(const GridSpec& grid) const {
  const std::size_t n = grid.cell_count();
  if (rho.size() != n || q.size() != static_cast<std::size_t>(grid.dim)) {
    throw DomainError("state shape does not match grid");
  }
  for (const auto& qm : q) {
    if (qm.size() != n) throw DomainError("momentum shape does not match grid");
  }
}

void ConservedState::check_positive() const {
  for (std::size_t c = 0; c < rho.size(); ++c) {
    if (!(rho[c] > 0.0)) {
      throw DomainError("non-positive density " + std::to_string(rho[c]) + " at cell " +
                        std::to_string(c));
    }
  }
}

double pressure(double rho, double gamma) {
  if (!(rho > 0.0)) throw DomainError("pressure: density must be positive");
  return std::pow(rho, gamma);
}

double pressure_excess(double rho, double gamma) {
  if (!(rho > 0.0)) throw DomainError("pressure_excess: density must be positive");
  if (gamma == 1.0) return 0.0;
  // rho^gamma - rho = rho * (exp((gamma-1) log rho) - 1); rho - 1 is exact near 1.
  return rho * std::expm1((gamma - 1.0) * std::log1p(rho - 1.0));
}

std::vector<Field> primitive_velocity(const ConservedState& state) {
  std::vector<Field> u(state.q.size(), Field(state.rho.size()));
  for (std::size_t m = 0; m < state.q.size(); ++m) {
    for (std::size_t c = 0; c < state.rho.size(); ++c) u[m][c] = state.q[m][c] / state.rho[c];
  }
  return u;
}

double integrate(const Field& f, const GridSpec& grid) {
  double s = 0.0;
  for (double v : f) s += v;
  return s * grid.cell_volume();
}

}  // namespace apimex
