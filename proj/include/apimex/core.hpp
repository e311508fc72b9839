#pragma once

// Structured periodic grids, conserved-state storage and the power-law
// equation of state.

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "apimex/error.hpp"

namespace apimex {

inline constexpr int kMaxDim = 3;

/// Cell-centered scalar grid function, flat row-major with x fastest.
using Field = std::vector<double>;

/// Per-axis cell index; components beyond the grid dimension are ignored.
using MultiIndex = std::array<long, kMaxDim>;

struct GridSpec {
  int dim = 2;
  std::array<int, kMaxDim> n{1, 1, 1};
  std::array<double, kMaxDim> origin{0.0, 0.0, 0.0};
  std::array<double, kMaxDim> extent{1.0, 1.0, 1.0};
  std::array<double, kMaxDim> dx{1.0, 1.0, 1.0};

  /// Validating constructor. Unused axes get n = 1. Throws ConfigError.
  static GridSpec make(int dim, const std::array<int, kMaxDim>& n,
                       const std::array<double, kMaxDim>& origin,
                       const std::array<double, kMaxDim>& extent);

  /// `cells` cells per axis on [0, length]^dim.
  static GridSpec uniform(int dim, int cells, double length = 1.0);

  std::size_t cell_count() const;
  double cell_volume() const;
  double min_spacing() const;
  double cell_center(int axis, long i) const {
    return origin[axis] + (static_cast<double>(i) + 0.5) * dx[axis];
  }
  std::size_t stride(int axis) const;

  /// Flat index of an in-range multi-index.
  std::size_t flat(const MultiIndex& i) const;
  MultiIndex unflatten(std::size_t cell) const;
};

/// Reduces every active component modulo n[m] into [0, n[m]).
MultiIndex wrap_index(const MultiIndex& i, const GridSpec& grid);

/// A grid plus precomputed periodic neighbour tables for offsets -2..2.
class Mesh {
 public:
  explicit Mesh(GridSpec grid);

  const GridSpec& grid() const { return grid_; }
  int dim() const { return grid_.dim; }
  std::size_t size() const { return size_; }
  double dx(int axis) const { return grid_.dx[axis]; }

  /// Flat index of the cell `offset` steps along `axis`, |offset| <= 2.
  std::size_t neighbor(std::size_t cell, int axis, int offset) const {
    return table_[axis][offset + 2][cell];
  }

 private:
  GridSpec grid_;
  std::size_t size_;
  std::array<std::array<std::vector<std::uint32_t>, 5>, kMaxDim> table_;
};

struct ModelParams {
  double epsilon = 1e-2;  // scaled Mach number
  double gamma = 2.0;     // EOS exponent, 1 = isothermal

  void validate() const;
};

struct ConservedState {
  Field rho;
  std::vector<Field> q;  // one component field per active axis
  double time = 0.0;

  static ConservedState zeros(const GridSpec& grid);

  /// Throws DomainError when shapes do not match the grid.
  void check_shape(const GridSpec& grid) const;
  /// Throws DomainError naming the first cell with rho <= 0 or NaN.
  void check_positive() const;
};

/// p(rho) = rho^gamma. Throws DomainError for rho <= 0.
double pressure(double rho, double gamma);

/// p(rho) - rho, evaluated without cancellation near rho = 1.
double pressure_excess(double rho, double gamma);

/// u = q / rho per cell and component.
std::vector<Field> primitive_velocity(const ConservedState& state);

/// Sum of a field times the cell volume, accumulated in index order.
double integrate(const Field& f, const GridSpec& grid);

}  // namespace apimex
