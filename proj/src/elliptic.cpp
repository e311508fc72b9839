#include "apimex/elliptic.hpp"

#include <cmath>
#include <string>

namespace apimex {

namespace {

double dot(const Field& a, const Field& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double mean_of(const Field& a) {
  double s = 0.0;
  for (double v : a) s += v;
  return s / static_cast<double>(a.size());
}

// out = scale * L x
void laplacian_into(const Field& x, const Mesh& mesh, Stencil stencil, double scale, Field& out) {
  const std::size_t n = mesh.size();
  for (std::size_t c = 0; c < n; ++c) out[c] = 0.0;
  const int reach = stencil == Stencil::ExactComposition ? 2 : 1;
  for (int m = 0; m < mesh.dim(); ++m) {
    const double h = mesh.dx(m) * reach;
    const double w = scale / (h * h);
    for (std::size_t c = 0; c < n; ++c) {
      out[c] += w * (x[mesh.neighbor(c, m, reach)] - 2.0 * x[c] + x[mesh.neighbor(c, m, -reach)]);
    }
  }
}

void apply_into(const LinearOperatorSpec& spec, const Mesh& mesh, const Field& x, Field& out) {
  laplacian_into(x, mesh, spec.stencil, spec.coef, out);
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = x[c] - out[c];
}

}  // namespace

Field laplacian(const Field& x, const Mesh& mesh, Stencil stencil) {
  Field out(mesh.size());
  laplacian_into(x, mesh, stencil, 1.0, out);
  return out;
}

Field apply_operator(const LinearOperatorSpec& spec, const Mesh& mesh, const Field& x) {
  Field out(mesh.size());
  apply_into(spec, mesh, x, out);
  return out;
}

EllipticSolution solve(const LinearOperatorSpec& spec, const Mesh& mesh, const Field& rhs,
                       const SolverOptions& options) {
  const std::size_t n = mesh.size();
  if (rhs.size() != n) throw DomainError("elliptic rhs does not match the grid");
  if (!(options.tol > 0.0)) throw ConfigError("elliptic tolerance must be positive");
  if (!(spec.coef >= 0.0) || !std::isfinite(spec.coef)) {
    throw DomainError("elliptic coefficient must be finite and non-negative");
  }
  for (double v : rhs) {
    if (!std::isfinite(v)) throw SolverError("elliptic rhs is not finite");
  }

  EllipticSolution sol;
  sol.mean = mean_of(rhs);
  Field b(n);
  for (std::size_t c = 0; c < n; ++c) b[c] = rhs[c] - sol.mean;
  const double rhs_norm = std::sqrt(dot(rhs, rhs));
  const double b_norm = std::sqrt(dot(b, b));
  sol.fluctuation.assign(n, 0.0);

  if (b_norm == 0.0 || spec.coef == 0.0) {
    sol.fluctuation = b;
    sol.rho = rhs;
    sol.report = {0, 0.0, true};
    return sol;
  }

  const std::size_t max_it = options.max_iterations > 0 ? options.max_iterations : 10 * n;
  const double target = options.tol * b_norm;
  Field& x = sol.fluctuation;
  Field r = b;
  Field p = b;
  Field ap(n);
  double rr = dot(r, r);
  std::size_t it = 0;
  while (std::sqrt(rr) > target && it < max_it) {
    apply_into(spec, mesh, p, ap);
    const double alpha = rr / dot(p, ap);
    for (std::size_t c = 0; c < n; ++c) {
      x[c] += alpha * p[c];
      r[c] -= alpha * ap[c];
    }
    const double rr_new = dot(r, r);
    const double beta = rr_new / rr;
    rr = rr_new;
    for (std::size_t c = 0; c < n; ++c) p[c] = r[c] + beta * p[c];
    ++it;
  }

  sol.report.iterations = it;
  sol.report.relative_residual = rhs_norm > 0.0 ? std::sqrt(rr) / rhs_norm : 0.0;
  sol.report.converged = std::sqrt(rr) <= target;
  if (!sol.report.converged) {
    throw EllipticSolveError("elliptic solve did not converge in " + std::to_string(it) +
                                 " iterations (residual " + std::to_string(std::sqrt(rr) / b_norm) +
                                 " relative to the fluctuating rhs)",
                             sol.report);
  }

  // Remove the round-off drift of the mean so mass is carried by `mean` alone.
  const double drift = mean_of(x);
  for (double& v : x) v -= drift;
  sol.rho.resize(n);
  for (std::size_t c = 0; c < n; ++c) sol.rho[c] = sol.mean + x[c];
  return sol;
}

}  // namespace apimex
