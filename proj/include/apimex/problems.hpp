#pragma once

// Benchmark initial data on the unit square.

#include <array>
#include <numbers>

#include "apimex/core.hpp"

namespace apimex {

/// k(r) = 2 cos r + 2 r sin r + cos(2r)/8 + r sin(2r)/4 + 3 r^2 / 4,
/// an antiderivative of r (1 + cos r)^2.
double k_profile(double r);

/// How the vortex amplitude eta follows from epsilon.
///  - Steady: eta = eps / sqrt(2), which makes the profile an exact
///    co-moving steady state for gamma = 2.
///  - Paper: eps = 0.6 eta / sqrt(110).
enum class EtaRelation { Steady, Paper };

double eta_for_epsilon(double epsilon, EtaRelation relation);

struct TravelingVortexParams {
  double intensity = 1.5;                            // Gamma
  double angular_frequency = 4.0 * std::numbers::pi;  // sets the vortex width
  double eta = 1e-2 / std::numbers::sqrt2;
  double advection = 0.6;
  std::array<double, 2> center{0.5, 0.5};

  static TravelingVortexParams for_epsilon(double epsilon, EtaRelation relation);
  void validate() const;
};

/// Primitive values (rho, u1, u2) of the vortex at a point at t = 0.
std::array<double, 3> traveling_vortex_point(double x1, double x2,
                                             const TravelingVortexParams& params);

ConservedState init_traveling_vortex(const GridSpec& grid, const TravelingVortexParams& params,
                                     const ModelParams& model);

/// The initial data translated by advection * t, wrapped periodically.
ConservedState exact_traveling_vortex(double t, const GridSpec& grid,
                                      const TravelingVortexParams& params,
                                      const ModelParams& model);

struct StationaryVortexParams {
  double r1 = 0.2;
  double r2 = 0.4;
  double abar = 0.1;

  double a1() const { return abar / r1; }
  double a2() const { return -abar * r2 / (r1 - r2); }
  double a3() const { return abar / (r1 - r2); }

  /// Piecewise linear swirl speed u_theta(r).
  double swirl(double r) const;
  /// Closed form of the integral of u_theta(s)^2 / s over [0, r].
  double swirl_integral(double r) const;
  void validate() const;
};

/// rho = 1 + eps^2/2 * swirl_integral(r), clockwise swirl about (0.5, 0.5).
ConservedState init_stationary_vortex(const GridSpec& grid, const ModelParams& model,
                                      const StationaryVortexParams& params = {});

enum class WellPreparedMode { TaylorGreenLike };

/// Components of the well-prepared data: rho = 1 + eps^2 rho2,
/// u = u0 + eps u1 with div u0 = 0.
struct WellPreparedPoint {
  double rho2;
  std::array<double, 2> u0;
  std::array<double, 2> u1;
};

WellPreparedPoint well_prepared_point(double x, double y, WellPreparedMode mode);

ConservedState init_well_prepared(const GridSpec& grid, const ModelParams& model,
                                  WellPreparedMode mode = WellPreparedMode::TaylorGreenLike);

}  // namespace apimex
