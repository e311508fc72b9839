#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "apimex/elliptic.hpp"
#include "apimex/spatial.hpp"
#include "test_support.hpp"

using namespace apimex;
using namespace testing_support;

TEST_CASE("composed Laplacian equals divergence of gradient") {
  for (int dim = 1; dim <= 3; ++dim) {
    const GridSpec g = GridSpec::make(dim, {6, 5, 4}, {0, 0, 0}, {1.0, 0.7, 1.3});
    const Mesh mesh(g);
    std::mt19937_64 rng(17 + dim);
    const Field x = random_field(g.cell_count(), rng);
    const Field a = laplacian(x, mesh, Stencil::ExactComposition);
    const Field b = divergence(gradient(x, mesh), mesh);
    CHECK(max_abs_diff(a, b) <= 1e-11 * (1.0 + max_abs(b)));
  }
}

TEST_CASE("compact Laplacian is the five-point stencil") {
  const GridSpec g = GridSpec::make(2, {5, 7, 1}, {0, 0, 0}, {1.0, 2.0, 1.0});
  const Mesh mesh(g);
  std::mt19937_64 rng(2);
  const Field x = random_field(g.cell_count(), rng);
  const Field l = laplacian(x, mesh, Stencil::CompactLaplacian);
  auto at = [&](long i, long j) { return x[g.flat(wrap_index({i, j, 0}, g))]; };
  for (long j = 0; j < 7; ++j) {
    for (long i = 0; i < 5; ++i) {
      const double ref = (at(i + 1, j) - 2 * at(i, j) + at(i - 1, j)) / (g.dx[0] * g.dx[0]) +
                         (at(i, j + 1) - 2 * at(i, j) + at(i, j - 1)) / (g.dx[1] * g.dx[1]);
      CHECK(l[g.flat({i, j, 0})] == doctest::Approx(ref));
    }
  }
}

TEST_CASE("Laplacians annihilate constants and are exact on quadratics in the interior") {
  const GridSpec g = GridSpec::uniform(1, 32);
  const Mesh mesh(g);
  for (Stencil s : {Stencil::ExactComposition, Stencil::CompactLaplacian}) {
    CHECK(max_abs(laplacian(Field(32, 4.0), mesh, s)) == 0.0);
    Field x(32);
    for (int i = 0; i < 32; ++i) x[i] = std::pow(g.cell_center(0, i), 2);
    const Field l = laplacian(x, mesh, s);
    for (int i = 2; i < 30; ++i) CHECK(l[i] == doctest::Approx(2.0));
  }
}

TEST_CASE("operator is symmetric positive definite") {
  const GridSpec g = GridSpec::make(2, {6, 5, 1}, {0, 0, 0}, {1, 1, 1});
  const Mesh mesh(g);
  for (Stencil s : {Stencil::ExactComposition, Stencil::CompactLaplacian}) {
    const LinearOperatorSpec spec{0.37, s};
    const Eigen::MatrixXd a =
        assemble(g.cell_count(), [&](const Field& x) { return apply_operator(spec, mesh, x); });
    CHECK((a - a.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(a);
    CHECK(eig.eigenvalues().minCoeff() == doctest::Approx(1.0));
    // constants are eigenvectors with eigenvalue 1
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(a.rows());
    CHECK(((a * ones) - ones).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("CG matches a dense LU oracle on random problems") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> coef(0.0, 50.0);
  std::uniform_int_distribution<int> size(4, 12);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 1 + trial % 2;
    const GridSpec g =
        GridSpec::make(dim, {size(rng), size(rng), 1}, {0, 0, 0}, {1.0, 1.5, 1.0});
    const Mesh mesh(g);
    const LinearOperatorSpec spec{coef(rng),
                                  trial % 3 == 0 ? Stencil::CompactLaplacian
                                                 : Stencil::ExactComposition};
    const Field rhs = random_field(g.cell_count(), rng, 0.5, 1.5);
    const EllipticSolution sol = solve(spec, mesh, rhs, {1e-13, 0});
    const Eigen::MatrixXd a =
        assemble(g.cell_count(), [&](const Field& x) { return apply_operator(spec, mesh, x); });
    const Eigen::VectorXd ref = a.partialPivLu().solve(to_eigen(rhs));
    CHECK(sol.report.converged);
    CHECK((to_eigen(sol.rho) - ref).cwiseAbs().maxCoeff() <= 1e-10);
    CHECK(sol.report.relative_residual <= 1e-12);
  }
}

TEST_CASE("mean is carried exactly and the fluctuation has zero mean") {
  const GridSpec g = GridSpec::uniform(2, 16);
  const Mesh mesh(g);
  std::mt19937_64 rng(77);
  const Field rhs = random_field(g.cell_count(), rng, 0.9, 1.1);
  const EllipticSolution sol = solve({25.0, Stencil::ExactComposition}, mesh, rhs);
  double mr = 0.0, mf = 0.0, ms = 0.0;
  for (std::size_t c = 0; c < rhs.size(); ++c) {
    mr += rhs[c];
    mf += sol.fluctuation[c];
    ms += sol.rho[c];
  }
  const double n = static_cast<double>(rhs.size());
  CHECK(sol.mean == doctest::Approx(mr / n).epsilon(1e-15));
  CHECK(std::fabs(mf / n) <= 1e-15);
  CHECK(ms / n == doctest::Approx(mr / n).epsilon(1e-14));
  for (std::size_t c = 0; c < rhs.size(); ++c) {
    CHECK(sol.rho[c] == doctest::Approx(sol.mean + sol.fluctuation[c]).epsilon(1e-15));
  }
}

TEST_CASE("trivial cases skip iteration") {
  const GridSpec g = GridSpec::uniform(2, 8);
  const Mesh mesh(g);
  const EllipticSolution c = solve({10.0, Stencil::ExactComposition}, mesh, Field(64, 2.5));
  CHECK(c.report.iterations == 0);
  CHECK(c.rho == Field(64, 2.5));
  std::mt19937_64 rng(1);
  const Field rhs = random_field(64, rng);
  const EllipticSolution z = solve({0.0, Stencil::ExactComposition}, mesh, rhs);
  CHECK(z.rho == rhs);
}

TEST_CASE("a large coefficient flattens the solution") {
  const GridSpec g = GridSpec::uniform(2, 16);
  const Mesh mesh(g);
  std::mt19937_64 rng(6);
  const Field rhs = smooth_field(g, rng, 0.1);
  Field shifted = rhs;
  for (double& v : shifted) v += 1.0;
  const EllipticSolution sol = solve({1e8, Stencil::ExactComposition}, mesh, shifted);
  CHECK(max_abs(sol.fluctuation) <= 1e-5);
}

TEST_CASE("iteration budget exhaustion raises with a report") {
  const GridSpec g = GridSpec::uniform(2, 16);
  const Mesh mesh(g);
  std::mt19937_64 rng(3);
  const Field rhs = random_field(g.cell_count(), rng);
  try {
    solve({100.0, Stencil::ExactComposition}, mesh, rhs, {1e-14, 2});
    FAIL("expected EllipticSolveError");
  } catch (const EllipticSolveError& e) {
    CHECK(e.report().iterations == 2);
    CHECK_FALSE(e.report().converged);
    CHECK(e.report().relative_residual > 1e-14);
  }
  CHECK_THROWS_AS(solve({1.0, Stencil::ExactComposition}, mesh, Field(3, 1.0)), DomainError);
  CHECK_THROWS_AS(solve({-1.0, Stencil::ExactComposition}, mesh, rhs), DomainError);
  Field bad = rhs;
  bad[0] = NAN;
  CHECK_THROWS_AS(solve({1.0, Stencil::ExactComposition}, mesh, bad), SolverError);
}
