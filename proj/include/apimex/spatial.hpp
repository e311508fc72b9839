#pragma once

// Finite-volume building blocks on periodic grids.
//
// Face fields along axis m are stored per cell: entry i holds the value at
// the face i + 1/2 e_m. Interface states at that face come from the cell on
// the left (minus) and the cell on the right (plus).

#include <array>
#include <vector>

#include "apimex/core.hpp"

namespace apimex {

enum class Limiter { Minmod, None };

/// delta_m w_i = w_{i+1/2} - w_{i-1/2}
Field delta(const Field& faces, const Mesh& mesh, int axis);

/// Face average of the two adjacent cells.
Field mu(const Field& cells, const Mesh& mesh, int axis);

double minmod(double a, double b);

struct InterfaceValues {
  Field minus;
  Field plus;
};

/// Piecewise linear reconstruction to faces along `axis`.
InterfaceValues reconstruct(const Field& cells, const Mesh& mesh, int axis, Limiter limiter);

/// Conserved values at a point. Unused momentum components are zero.
struct PointState {
  double rho = 1.0;
  std::array<double, kMaxDim> q{0.0, 0.0, 0.0};
};

struct InterfacePair {
  PointState minus;
  PointState plus;
};

using FluxVector = std::array<double, kMaxDim>;

/// F_m(U) = (q_m / rho) q + s (p - rho) e_m, where s scales the split
/// pressure (the stepper passes 1/eps^2).
FluxVector explicit_momentum_flux(const PointState& u, double gamma, int axis,
                                  double split_pressure_scale = 1.0);

/// 2 max(|u_m^-|, |u_m^+|)
double wave_speed(const InterfacePair& pair, int axis);

/// Central average of F_m minus alpha/2 times the jump in the full momentum.
FluxVector rusanov_momentum_flux(const InterfacePair& pair, double gamma, int axis,
                                 double split_pressure_scale = 1.0);

/// Unweighted face average of q_m; the implicit mass flux.
Field central_mass_flux(const Field& q_axis, const Mesh& mesh, int axis);

/// sum_m delta_m mu_m q_m / dx_m, the wide central divergence.
Field divergence(const std::vector<Field>& q, const Mesh& mesh);

/// delta_m mu_m rho / dx_m per axis, the wide central gradient.
std::vector<Field> gradient(const Field& rho, const Mesh& mesh);

/// Divergence of the Rusanov momentum flux, including (p - rho)/eps^2.
std::vector<Field> explicit_flux_divergence(const ConservedState& state, const ModelParams& model,
                                            const Mesh& mesh, Limiter limiter);

}  // namespace apimex
