#pragma once

// Run configuration: flat `key = value` files with `#` comments, overlaid by
// command-line values. Later sources win; unknown keys are errors.

#include <string>
#include <string_view>
#include <vector>

#include "apimex/elliptic.hpp"
#include "apimex/problems.hpp"
#include "apimex/spatial.hpp"
#include "apimex/tableaux.hpp"

namespace apimex {

struct RunConfig {
  std::string problem = "traveling_vortex";
  int n = 40;
  double epsilon = 1e-2;
  double gamma = 2.0;
  std::string tableau = "DP2-A(2,4,2)";
  Dp1Variant dp1_variant = Dp1Variant::Verbatim;
  double cfl = 0.45;
  double t_end = 0.1;
  Limiter limiter = Limiter::Minmod;
  Stencil stencil = Stencil::ExactComposition;
  double elliptic_tol = 1e-12;
  int elliptic_max_iter = 0;  // 0 selects 10 * cell count
  EtaRelation eta_relation = EtaRelation::Steady;
  std::string out = "out";
  int dump_every = 0;  // steps between field dumps, 0 = final state only
  std::vector<int> grids{20, 40, 80, 160};
  std::vector<double> epsilons{1e-2, 1e-3, 1e-4, 1e-5};
  int steps = 10;  // fixed step count of ap-sweep
};

std::vector<std::string> config_keys();

/// Parses `value` into `key`. `where` names the source for messages
/// ("run.cfg:3", "--epsilon"). Throws ConfigError.
void set_config_value(RunConfig& cfg, std::string_view key, std::string_view value,
                      std::string_view where);

/// Current value of `key` in the same textual form the parser accepts.
std::string get_config_value(const RunConfig& cfg, std::string_view key);

/// Applies `key = value` lines of `text` on top of `cfg`.
void apply_config_text(RunConfig& cfg, std::string_view text, std::string_view origin);

/// Applies a config file on top of `cfg`. Throws ConfigError if unreadable.
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Cross-field validation; every error names the offending key.
void validate(const RunConfig& cfg);

std::string to_string(Limiter limiter);
std::string to_string(Stencil stencil);
std::string to_string(EtaRelation relation);

}  // namespace apimex
