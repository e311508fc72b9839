#include "apimex/problems.hpp"

#include <cmath>

namespace apimex {

namespace {

constexpr double kPi = std::numbers::pi;

void require_unit_square(const GridSpec& grid, const char* what) {
  if (grid.dim != 2) throw ConfigError(std::string(what) + " needs a 2-d grid");
  for (int m = 0; m < 2; ++m) {
    if (grid.origin[m] != 0.0 || grid.extent[m] != 1.0) {
      throw ConfigError(std::string(what) + " is posed on the unit square");
    }
  }
}

template <class PointFn>
ConservedState fill(const GridSpec& grid, PointFn&& point) {
  ConservedState s = ConservedState::zeros(grid);
  for (long j = 0; j < grid.n[1]; ++j) {
    for (long i = 0; i < grid.n[0]; ++i) {
      const std::size_t c = grid.flat({i, j, 0});
      const auto [rho, u1, u2] = point(grid.cell_center(0, i), grid.cell_center(1, j));
      s.rho[c] = rho;
      s.q[0][c] = rho * u1;
      s.q[1][c] = rho * u2;
    }
  }
  return s;
}

}  // namespace

double k_profile(double r) {
  return 2.0 * std::cos(r) + 2.0 * r * std::sin(r) + 0.125 * std::cos(2.0 * r) +
         0.25 * r * std::sin(2.0 * r) + 0.75 * r * r;
}

double eta_for_epsilon(double epsilon, EtaRelation relation) {
  if (relation == EtaRelation::Paper) return epsilon * std::sqrt(110.0) / 0.6;
  return epsilon / std::numbers::sqrt2;
}

TravelingVortexParams TravelingVortexParams::for_epsilon(double epsilon, EtaRelation relation) {
  TravelingVortexParams p;
  p.eta = eta_for_epsilon(epsilon, relation);
  return p;
}

void TravelingVortexParams::validate() const {
  if (!(intensity > 0.0) || !(angular_frequency > 0.0) || !(eta > 0.0)) {
    throw ConfigError("traveling vortex needs positive intensity, frequency and eta");
  }
}

std::array<double, 3> traveling_vortex_point(double x1, double x2,
                                             const TravelingVortexParams& p) {
  const double dx = x1 - p.center[0];
  const double dy = x2 - p.center[1];
  const double wr = p.angular_frequency * std::sqrt(dx * dx + dy * dy);
  if (wr > kPi) return {1.0, p.advection, 0.0};
  const double amp = p.intensity * p.eta / p.angular_frequency;
  const double rho = 1.0 + amp * amp * (k_profile(wr) - k_profile(kPi));
  const double swirl = p.intensity * (1.0 + std::cos(wr));
  return {rho, p.advection + swirl * (p.center[1] - x2), swirl * (x1 - p.center[0])};
}

ConservedState init_traveling_vortex(const GridSpec& grid, const TravelingVortexParams& params,
                                     const ModelParams& model) {
  return exact_traveling_vortex(0.0, grid, params, model);
}

ConservedState exact_traveling_vortex(double t, const GridSpec& grid,
                                      const TravelingVortexParams& params,
                                      const ModelParams& model) {
  require_unit_square(grid, "traveling vortex");
  params.validate();
  model.validate();
  const double shift = params.advection * t;
  ConservedState s = fill(grid, [&](double x, double y) {
    double xs = x - shift;
    xs -= std::floor(xs);
    return traveling_vortex_point(xs, y, params);
  });
  s.time = t;
  return s;
}

double StationaryVortexParams::swirl(double r) const {
  if (r <= r1) return a1() * r;
  if (r <= r2) return a2() + a3() * r;
  return 0.0;
}

double StationaryVortexParams::swirl_integral(double r) const {
  const double b1 = a1();
  const double b2 = a2();
  const double b3 = a3();
  auto inner = [&](double s) { return 0.5 * b1 * b1 * s * s; };
  // (b2 + b3 s)^2 / s = b2^2 / s + 2 b2 b3 + b3^2 s
  auto outer = [&](double s) {
    return inner(r1) + b2 * b2 * std::log(s / r1) + 2.0 * b2 * b3 * (s - r1) +
           0.5 * b3 * b3 * (s * s - r1 * r1);
  };
  if (r <= r1) return inner(r);
  if (r <= r2) return outer(r);
  return outer(r2);
}

void StationaryVortexParams::validate() const {
  if (!(r1 > 0.0) || !(r2 > r1)) throw ConfigError("stationary vortex needs 0 < r1 < r2");
}

ConservedState init_stationary_vortex(const GridSpec& grid, const ModelParams& model,
                                      const StationaryVortexParams& params) {
  require_unit_square(grid, "stationary vortex");
  model.validate();
  params.validate();
  const double eps2 = model.epsilon * model.epsilon;
  return fill(grid, [&](double x, double y) {
    const double dx = x - 0.5;
    const double dy = y - 0.5;
    const double r = std::sqrt(dx * dx + dy * dy);
    const double rho = 1.0 + 0.5 * eps2 * params.swirl_integral(r);
    // u_theta / r tends to a1 at the center, where both offsets vanish.
    const double ratio = r > 0.0 ? params.swirl(r) / r : params.a1();
    return std::array<double, 3>{rho, ratio * dy, -ratio * dx};
  });
}

WellPreparedPoint well_prepared_point(double x, double y, WellPreparedMode) {
  const double sx = std::sin(kPi * x);
  const double sy = std::sin(kPi * y);
  WellPreparedPoint p;
  p.rho2 = std::cos(2.0 * kPi * x) * std::cos(2.0 * kPi * y);
  p.u0 = {sx * sx * std::sin(2.0 * kPi * y), -std::sin(2.0 * kPi * x) * sy * sy};
  p.u1 = {std::sin(2.0 * kPi * (x + y)), std::cos(2.0 * kPi * x)};
  return p;
}

ConservedState init_well_prepared(const GridSpec& grid, const ModelParams& model,
                                  WellPreparedMode mode) {
  require_unit_square(grid, "well-prepared data");
  const double eps = model.epsilon;
  return fill(grid, [&](double x, double y) {
    const WellPreparedPoint p = well_prepared_point(x, y, mode);
    return std::array<double, 3>{1.0 + eps * eps * p.rho2, p.u0[0] + eps * p.u1[0],
                                 p.u0[1] + eps * p.u1[1]};
  });
}

}  // namespace apimex
