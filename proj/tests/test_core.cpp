#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "apimex/core.hpp"
#include "test_support.hpp"

using namespace apimex;

TEST_CASE("grid construction validates its arguments") {
  CHECK_THROWS_AS(GridSpec::make(0, {8, 8, 8}, {0, 0, 0}, {1, 1, 1}), ConfigError);
  CHECK_THROWS_AS(GridSpec::make(4, {8, 8, 8}, {0, 0, 0}, {1, 1, 1}), ConfigError);
  CHECK_THROWS_AS(GridSpec::make(2, {3, 8, 8}, {0, 0, 0}, {1, 1, 1}), ConfigError);
  CHECK_THROWS_AS(GridSpec::make(2, {8, 8, 8}, {0, 0, 0}, {1, 0, 1}), ConfigError);
  CHECK_THROWS_AS(GridSpec::make(1, {8, 8, 8}, {0, 0, 0}, {-1, 1, 1}), ConfigError);
  // unused axes are not validated
  CHECK_NOTHROW(GridSpec::make(1, {8, 0, 0}, {0, 0, 0}, {1, 0, 0}));
}

TEST_CASE("uniform grid geometry") {
  const GridSpec g = GridSpec::uniform(2, 10, 1.0);
  CHECK(g.cell_count() == 100);
  CHECK(g.dx[0] == doctest::Approx(0.1));
  CHECK(g.cell_volume() == doctest::Approx(0.01));
  CHECK(g.min_spacing() == doctest::Approx(0.1));
  CHECK(g.cell_center(0, 0) == doctest::Approx(0.05));
  CHECK(g.cell_center(1, 9) == doctest::Approx(0.95));
  CHECK(g.n[2] == 1);

  const GridSpec a = GridSpec::make(2, {8, 4, 1}, {-1.0, 2.0, 0.0}, {2.0, 1.0, 1.0});
  CHECK(a.dx[0] == doctest::Approx(0.25));
  CHECK(a.dx[1] == doctest::Approx(0.25));
  CHECK(a.cell_center(0, 0) == doctest::Approx(-0.875));
  CHECK(a.min_spacing() == doctest::Approx(0.25));
}

TEST_CASE("flat and unflatten are inverse, x fastest") {
  for (int dim = 1; dim <= 3; ++dim) {
    const GridSpec g = GridSpec::make(dim, {5, 4, 6}, {0, 0, 0}, {1, 1, 1});
    for (std::size_t c = 0; c < g.cell_count(); ++c) CHECK(g.flat(g.unflatten(c)) == c);
  }
  const GridSpec g = GridSpec::make(2, {5, 4, 1}, {0, 0, 0}, {1, 1, 1});
  CHECK(g.flat({1, 0, 0}) == 1);
  CHECK(g.flat({0, 1, 0}) == 5);
  CHECK(g.stride(1) == 5);
}

TEST_CASE("wrap_index reduces into range") {
  const GridSpec g = GridSpec::uniform(2, 6);
  CHECK(wrap_index({-1, 7, 0}, g) == MultiIndex{5, 1, 0});
  CHECK(wrap_index({-13, 12, 0}, g) == MultiIndex{5, 0, 0});
  CHECK(wrap_index({3, 2, 0}, g) == MultiIndex{3, 2, 0});
}

TEST_CASE("mesh neighbours match the wrapped multi-index oracle") {
  for (int dim = 1; dim <= 3; ++dim) {
    const GridSpec g = GridSpec::make(dim, {5, 4, 6}, {0, 0, 0}, {1, 1, 1});
    const Mesh mesh(g);
    for (std::size_t c = 0; c < g.cell_count(); ++c) {
      for (int m = 0; m < dim; ++m) {
        for (int off = -2; off <= 2; ++off) {
          MultiIndex i = g.unflatten(c);
          i[m] += off;
          CHECK(mesh.neighbor(c, m, off) == g.flat(wrap_index(i, g)));
        }
      }
    }
  }
}

TEST_CASE("model parameters") {
  CHECK_NOTHROW(ModelParams{1e-6, 2.0}.validate());
  CHECK_NOTHROW(ModelParams{1.0, 1.0}.validate());
  CHECK_THROWS_AS((ModelParams{0.0, 2.0}.validate()), ConfigError);
  CHECK_THROWS_AS((ModelParams{-1e-3, 2.0}.validate()), ConfigError);
  CHECK_THROWS_AS((ModelParams{1e-2, 0.5}.validate()), ConfigError);
  CHECK_THROWS_AS((ModelParams{NAN, 2.0}.validate()), ConfigError);
}

TEST_CASE("equation of state") {
  CHECK(pressure(1.0, 2.0) == 1.0);
  CHECK(pressure(2.0, 2.0) == doctest::Approx(4.0));
  CHECK(pressure(3.0, 1.0) == doctest::Approx(3.0));
  CHECK_THROWS_AS(pressure(0.0, 2.0), DomainError);
  CHECK_THROWS_AS(pressure_excess(-1.0, 2.0), DomainError);

  // Oracle: long double evaluation of rho^gamma - rho.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(0.2, 3.0);
  for (int k = 0; k < 200; ++k) {
    const double rho = d(rng);
    for (double gamma : {1.0, 1.4, 2.0, 3.0}) {
      const long double ref = std::pow(static_cast<long double>(rho), gamma) - rho;
      CHECK(pressure_excess(rho, gamma) ==
            doctest::Approx(static_cast<double>(ref)).epsilon(1e-12).scale(1.0));
    }
  }
  // Near rho = 1 the excess keeps full relative accuracy where the naive
  // difference cancels. For gamma = 2 the exact value is rho (rho - 1).
  for (double e : {1e-6, 1e-9, 1e-12}) {
    const double rho = 1.0 + e;
    CHECK(pressure_excess(rho, 2.0) == doctest::Approx(rho * (rho - 1.0)).epsilon(1e-13));
  }
  CHECK(pressure_excess(1.0, 2.0) == 0.0);
}

TEST_CASE("state helpers") {
  const GridSpec g = GridSpec::uniform(2, 4, 2.0);
  ConservedState s = ConservedState::zeros(g);
  CHECK(s.q.size() == 2);
  CHECK_NOTHROW(s.check_shape(g));
  CHECK_THROWS_AS(s.check_positive(), DomainError);
  for (auto& r : s.rho) r = 2.0;
  for (auto& q : s.q[0]) q = 3.0;
  CHECK_NOTHROW(s.check_positive());
  const auto u = primitive_velocity(s);
  CHECK(u[0][5] == doctest::Approx(1.5));
  CHECK(u[1][5] == 0.0);
  CHECK(integrate(s.rho, g) == doctest::Approx(8.0));

  ConservedState bad = s;
  bad.q.pop_back();
  CHECK_THROWS_AS(bad.check_shape(g), DomainError);
  bad = s;
  bad.rho[3] = NAN;
  CHECK_THROWS_AS(bad.check_positive(), DomainError);
}
