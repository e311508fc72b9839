#pragma once

// The per-stage Helmholtz problem (I - coef L_h) rho = rhs on a periodic grid.

#include <cstddef>

#include "apimex/core.hpp"

namespace apimex {

/// Discrete Laplacian used in the stage solve.
///  - ExactComposition: divergence(gradient(.)) of the wide central pair,
///    (w_{i+2} - 2 w_i + w_{i-2}) / (4 dx^2) per axis.
///  - CompactLaplacian: (w_{i+1} - 2 w_i + w_{i-1}) / dx^2 per axis.
enum class Stencil { ExactComposition, CompactLaplacian };

struct LinearOperatorSpec {
  double coef = 0.0;  // dt^2 a_kk^2 / eps^2
  Stencil stencil = Stencil::ExactComposition;
};

struct EllipticSolveReport {
  std::size_t iterations = 0;
  double relative_residual = 0.0;  // ||A x - b|| / ||b||
  bool converged = false;
};

struct SolverOptions {
  double tol = 1e-12;
  std::size_t max_iterations = 0;  // 0 selects 10 * cell count
};

/// Solution split into its mean and the zero-mean fluctuation. The operator
/// maps constants to themselves, so the mean comes straight from the rhs and
/// conjugate gradients only see the fluctuation.
struct EllipticSolution {
  Field rho;
  Field fluctuation;
  double mean = 0.0;
  EllipticSolveReport report;
};

class EllipticSolveError : public SolverError {
 public:
  EllipticSolveError(const std::string& what, EllipticSolveReport report)
      : SolverError(what), report_(report) {}
  const EllipticSolveReport& report() const { return report_; }

 private:
  EllipticSolveReport report_;
};

Field laplacian(const Field& x, const Mesh& mesh, Stencil stencil);

/// x - coef * L_h x
Field apply_operator(const LinearOperatorSpec& spec, const Mesh& mesh, const Field& x);

/// Conjugate gradients on the fluctuation, stopping when the residual falls
/// below tol times the norm of the fluctuating rhs. Throws
/// EllipticSolveError when max_iterations is exhausted.
EllipticSolution solve(const LinearOperatorSpec& spec, const Mesh& mesh, const Field& rhs,
                       const SolverOptions& options = {});

}  // namespace apimex
