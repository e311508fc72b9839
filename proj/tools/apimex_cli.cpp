// Command-line front end over the C interface.
//
//   apimex_cli run          single run with field dumps and diagnostics.csv
//   apimex_cli convergence  traveling-vortex EOC tables, one CSV per epsilon
//   apimex_cli ap-sweep     well-prepared data, density and divergence per epsilon
//   apimex_cli tableau-check
//
// Exit codes: 0 success, 1 configuration error, 2 solver failure.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "apimex/apimex.h"

namespace {

void print_line(const char* line, void*) { std::fprintf(stderr, "%s\n", line); }

int exit_code(apimex_status st) {
  switch (st) {
    case APIMEX_OK:
      return 0;
    case APIMEX_ERR_SOLVER:
    case APIMEX_ERR_INTERNAL:
      return 2;
    default:
      return 1;
  }
}

int report(apimex_status st) {
  if (st != APIMEX_OK) std::fprintf(stderr, "error: %s\n", apimex_last_error());
  return exit_code(st);
}

struct Overrides {
  std::optional<std::string> config;
  // (config key, flag name, value) in command-line flag order
  std::vector<std::pair<std::string, std::string>> names;
  std::vector<std::optional<std::string>> values;

  void add(CLI::App& app, const std::string& flag, const std::string& key,
           const std::string& help) {
    names.emplace_back(key, flag);
    values.emplace_back();
    // values is reserved up front, so the address stays valid.
    app.add_option(flag, values.back(), help);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"AP IMEX-RK finite-volume solver for the low Mach isentropic Euler equations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(apimex_version()));

  Overrides ov;
  ov.values.reserve(32);
  app.add_option("--config", ov.config, "key = value file, applied before the flags");
  ov.add(app, "--problem", "problem", "traveling_vortex, stationary_vortex or well_prepared");
  ov.add(app, "--n", "n", "cells per axis");
  ov.add(app, "--epsilon", "epsilon", "scaled Mach number");
  ov.add(app, "--gamma", "gamma", "EOS exponent");
  ov.add(app, "--tableau", "tableau", "DP1-A(2,4,2), DP2-A(2,4,2) or ARS(1,1,1)");
  ov.add(app, "--dp1-variant", "dp1_variant", "verbatim or rowsum");
  ov.add(app, "--cfl", "cfl", "CFL number in (0, 1)");
  ov.add(app, "--t-end", "t_end", "final time");
  ov.add(app, "--limiter", "limiter", "minmod or none");
  ov.add(app, "--stencil", "stencil", "composed or compact");
  ov.add(app, "--elliptic-tol", "elliptic_tol", "relative CG tolerance");
  ov.add(app, "--elliptic-max-iter", "elliptic_max_iter", "CG iteration cap, 0 = 10 * cells");
  ov.add(app, "--eta-relation", "eta_relation", "steady or paper");
  ov.add(app, "--out", "out", "output directory");
  ov.add(app, "--dump-every", "dump_every", "steps between field dumps, 0 = final only");
  ov.add(app, "--grids", "grids", "comma-separated grid sizes (convergence)");
  ov.add(app, "--epsilons", "epsilons", "comma-separated epsilons (convergence, ap-sweep)");
  ov.add(app, "--steps", "steps", "steps per epsilon (ap-sweep)");

  auto* run = app.add_subcommand("run", "single run: field dumps and diagnostics.csv");
  auto* conv = app.add_subcommand("convergence", "traveling-vortex EOC table per epsilon");
  auto* sweep = app.add_subcommand("ap-sweep", "AP scaling data on well-prepared data");
  auto* check = app.add_subcommand("tableau-check", "validate the shipped tableaux");
  std::optional<std::string> check_name;
  check->add_option("name", check_name, "tableau to check (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  apimex_config* raw = nullptr;
  if (apimex_config_create(&raw) != APIMEX_OK) return report(APIMEX_ERR_INTERNAL);
  std::unique_ptr<apimex_config, decltype(&apimex_config_destroy)> cfg(raw,
                                                                       apimex_config_destroy);
  if (ov.config) {
    if (const auto st = apimex_config_load_file(cfg.get(), ov.config->c_str()); st != APIMEX_OK) {
      return report(st);
    }
  }
  for (std::size_t i = 0; i < ov.names.size(); ++i) {
    if (!ov.values[i]) continue;
    const auto& [key, flag] = ov.names[i];
    const auto st = apimex_config_set(cfg.get(), key.c_str(), ov.values[i]->c_str(), flag.c_str());
    if (st != APIMEX_OK) return report(st);
  }

  if (run->parsed()) return report(apimex_cmd_run(cfg.get(), print_line, nullptr));
  if (conv->parsed()) return report(apimex_cmd_convergence(cfg.get(), print_line, nullptr));
  if (sweep->parsed()) return report(apimex_cmd_ap_sweep(cfg.get(), print_line, nullptr));
  if (check->parsed()) {
    int passed = 0;
    const auto st = apimex_tableau_check(
        cfg.get(), check_name ? check_name->c_str() : nullptr,
        [](const char* text, void*) { std::fputs(text, stdout); }, nullptr, &passed);
    if (st != APIMEX_OK) return report(st);
    return passed ? 0 : 2;
  }
  return 1;
}
