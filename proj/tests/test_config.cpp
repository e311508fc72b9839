#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "apimex/config.hpp"

using namespace apimex;

namespace {

std::string error_of(RunConfig& cfg, const std::string& key, const std::string& value,
                     const std::string& where = "test") {
  try {
    set_config_value(cfg, key, value, where);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& s, const std::string& part) {
  return s.find(part) != std::string::npos;
}

}  // namespace

TEST_CASE("defaults") {
  const RunConfig cfg;
  CHECK(cfg.problem == "traveling_vortex");
  CHECK(cfg.tableau == "DP2-A(2,4,2)");
  CHECK(cfg.cfl == 0.45);
  CHECK(cfg.gamma == 2.0);
  CHECK(cfg.limiter == Limiter::Minmod);
  CHECK(cfg.stencil == Stencil::ExactComposition);
  CHECK(cfg.eta_relation == EtaRelation::Steady);
  CHECK(cfg.grids == std::vector<int>{20, 40, 80, 160});
  CHECK(cfg.epsilons == std::vector<double>{1e-2, 1e-3, 1e-4, 1e-5});
  CHECK_NOTHROW(validate(cfg));
}

TEST_CASE("every key round-trips through its textual form") {
  RunConfig cfg;
  cfg.epsilon = 1.0 / 3.0;
  cfg.epsilons = {0.1, 1e-7};
  cfg.grids = {8, 16};
  cfg.limiter = Limiter::None;
  cfg.eta_relation = EtaRelation::Paper;
  cfg.dp1_variant = Dp1Variant::RowSum;
  for (const std::string& key : config_keys()) {
    RunConfig other;
    set_config_value(other, key, get_config_value(cfg, key), "roundtrip");
    CHECK_MESSAGE(get_config_value(other, key) == get_config_value(cfg, key), key);
  }
  CHECK(get_config_value(cfg, "epsilon") == "0.33333333333333331");
  CHECK(get_config_value(cfg, "limiter") == "none");
  CHECK(get_config_value(cfg, "grids") == "8,16");
}

TEST_CASE("values are parsed and range-checked") {
  RunConfig cfg;
  set_config_value(cfg, "n", "64", "t");
  set_config_value(cfg, "epsilon", " 1e-4 ", "t");
  set_config_value(cfg, "stencil", "compact", "t");
  set_config_value(cfg, "grids", "20, 40,80", "t");
  set_config_value(cfg, "tableau", "DP2-A1(2,4,2)", "t");
  set_config_value(cfg, "elliptic_max_iter", "50", "t");
  CHECK(cfg.n == 64);
  CHECK(cfg.elliptic_max_iter == 50);
  CHECK(cfg.epsilon == 1e-4);
  CHECK(cfg.stencil == Stencil::CompactLaplacian);
  CHECK(cfg.grids == std::vector<int>{20, 40, 80});

  CHECK(contains(error_of(cfg, "cfl", "1.5"), "0 < cfl < 1"));
  CHECK(contains(error_of(cfg, "cfl", "0"), "cfl"));
  CHECK(contains(error_of(cfg, "n", "3"), "n"));
  CHECK(contains(error_of(cfg, "n", "12abc"), "n"));
  CHECK(contains(error_of(cfg, "epsilon", "-1"), "epsilon"));
  CHECK(contains(error_of(cfg, "epsilon", "nan"), "epsilon"));
  CHECK(contains(error_of(cfg, "gamma", "0.9"), "gamma"));
  CHECK(contains(error_of(cfg, "limiter", "superbee"), "limiter"));
  CHECK(contains(error_of(cfg, "problem", "sod"), "problem"));
  CHECK(contains(error_of(cfg, "grids", "20,,40"), "grids"));
  CHECK(contains(error_of(cfg, "epsilons", "1e-2,0"), "epsilons"));
  CHECK(contains(error_of(cfg, "steps", "0"), "steps"));
  CHECK(contains(error_of(cfg, "elliptic_max_iter", "-1"), "elliptic_max_iter"));
  CHECK(contains(error_of(cfg, "colour", "red"), "unknown key 'colour'"));
  CHECK(contains(error_of(cfg, "cfl", "2", "--cfl"), "--cfl"));
  // rejected values leave the config untouched
  CHECK(cfg.cfl == 0.45);
  CHECK(cfg.n == 64);
}

TEST_CASE("unknown tableau is a lookup error naming the source") {
  RunConfig cfg;
  try {
    set_config_value(cfg, "tableau", "RK4", "--tableau");
    FAIL("expected LookupError");
  } catch (const LookupError& e) {
    CHECK(contains(e.what(), "--tableau"));
    CHECK(contains(e.what(), "RK4"));
  }
}

TEST_CASE("config text: comments, blanks and line numbers") {
  RunConfig cfg;
  apply_config_text(cfg,
                    "# comment\n"
                    "\n"
                    "n = 32   # trailing comment\n"
                    "  epsilon=1e-3\n"
                    "limiter = none\n",
                    "run.cfg");
  CHECK(cfg.n == 32);
  CHECK(cfg.epsilon == 1e-3);
  CHECK(cfg.limiter == Limiter::None);

  RunConfig bad;
  try {
    apply_config_text(bad, "n = 32\ncfl = 1.5\n", "run.cfg");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(contains(e.what(), "run.cfg:2"));
    CHECK(contains(e.what(), "cfl"));
  }
  try {
    apply_config_text(bad, "n 32\n", "x.cfg");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(contains(e.what(), "x.cfg:1"));
  }
}

TEST_CASE("later sources win") {
  const std::string path = "test_config_precedence.cfg";
  {
    std::ofstream f(path);
    f << "epsilon = 1e-3\nn = 24\n";
  }
  RunConfig cfg;
  apply_config_file(cfg, path);
  set_config_value(cfg, "epsilon", "1e-5", "--epsilon");
  CHECK(cfg.epsilon == 1e-5);
  CHECK(cfg.n == 24);
  std::remove(path.c_str());
  CHECK_THROWS_AS(apply_config_file(cfg, "does/not/exist.cfg"), ConfigError);
}

TEST_CASE("cross validation") {
  RunConfig cfg;
  cfg.grids.clear();
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = RunConfig{};
  cfg.problem = "nope";
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = RunConfig{};
  cfg.tableau = "nope";
  CHECK_THROWS_AS(validate(cfg), LookupError);
}
