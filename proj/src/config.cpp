#include "apimex/config.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace apimex {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::string_view where, std::string_view key, const std::string& msg) {
  throw ConfigError(std::string(where) + ": " + std::string(key) + ": " + msg);
}

double parse_real(std::string_view key, std::string_view value, std::string_view where) {
  const std::string s(trim(value));
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    fail(where, key, "expected a real number, got '" + s + "'");
  }
  return v;
}

int parse_int(std::string_view key, std::string_view value, std::string_view where) {
  const std::string s(trim(value));
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE || v < -1000000000L ||
      v > 1000000000L) {
    fail(where, key, "expected an integer, got '" + s + "'");
  }
  return static_cast<int>(v);
}

std::vector<std::string_view> split_list(std::string_view value) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (start <= value.size()) {
    const auto comma = value.find(',', start);
    const auto end = comma == std::string_view::npos ? value.size() : comma;
    items.push_back(trim(value.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string to_string(Limiter limiter) { return limiter == Limiter::Minmod ? "minmod" : "none"; }

std::string to_string(Stencil stencil) {
  return stencil == Stencil::ExactComposition ? "composed" : "compact";
}

std::string to_string(EtaRelation relation) {
  return relation == EtaRelation::Steady ? "steady" : "paper";
}

std::vector<std::string> config_keys() {
  return {"problem", "n",            "epsilon",      "gamma", "tableau",    "dp1_variant",
          "cfl",     "t_end",        "limiter",      "stencil", "elliptic_tol", "elliptic_max_iter",
          "eta_relation", "out",     "dump_every",   "grids",        "epsilons", "steps"};
}

void set_config_value(RunConfig& cfg, std::string_view key, std::string_view raw,
                      std::string_view where) {
  const std::string_view value = trim(raw);
  if (key == "problem") {
    if (value != "traveling_vortex" && value != "stationary_vortex" && value != "well_prepared") {
      fail(where, key,
           "unknown problem '" + std::string(value) +
               "' (traveling_vortex, stationary_vortex, well_prepared)");
    }
    cfg.problem = value;
  } else if (key == "n") {
    const int n = parse_int(key, value, where);
    if (n < 4) fail(where, key, "needs at least 4 cells per axis");
    cfg.n = n;
  } else if (key == "epsilon") {
    const double e = parse_real(key, value, where);
    if (!(e > 0.0)) fail(where, key, "must be positive");
    cfg.epsilon = e;
  } else if (key == "gamma") {
    const double g = parse_real(key, value, where);
    if (!(g >= 1.0)) fail(where, key, "must be >= 1");
    cfg.gamma = g;
  } else if (key == "tableau") {
    try {
      (void)get_tableau(value);
    } catch (const LookupError& e) {
      throw LookupError(std::string(where) + ": tableau: " + e.what());
    }
    cfg.tableau = value;
  } else if (key == "dp1_variant") {
    if (value == "verbatim") {
      cfg.dp1_variant = Dp1Variant::Verbatim;
    } else if (value == "rowsum") {
      cfg.dp1_variant = Dp1Variant::RowSum;
    } else {
      fail(where, key, "expected verbatim or rowsum");
    }
  } else if (key == "cfl") {
    const double c = parse_real(key, value, where);
    if (!(c > 0.0) || !(c < 1.0)) fail(where, key, "CFL number must satisfy 0 < cfl < 1");
    cfg.cfl = c;
  } else if (key == "t_end") {
    const double t = parse_real(key, value, where);
    if (!(t >= 0.0)) fail(where, key, "must be non-negative");
    cfg.t_end = t;
  } else if (key == "limiter") {
    if (value == "minmod") {
      cfg.limiter = Limiter::Minmod;
    } else if (value == "none") {
      cfg.limiter = Limiter::None;
    } else {
      fail(where, key, "expected minmod or none");
    }
  } else if (key == "stencil") {
    if (value == "composed") {
      cfg.stencil = Stencil::ExactComposition;
    } else if (value == "compact") {
      cfg.stencil = Stencil::CompactLaplacian;
    } else {
      fail(where, key, "expected composed or compact");
    }
  } else if (key == "elliptic_tol") {
    const double t = parse_real(key, value, where);
    if (!(t > 0.0) || !(t < 1.0)) fail(where, key, "must lie in (0, 1)");
    cfg.elliptic_tol = t;
  } else if (key == "elliptic_max_iter") {
    const int m = parse_int(key, value, where);
    if (m < 0) fail(where, key, "must be >= 0");
    cfg.elliptic_max_iter = m;
  } else if (key == "eta_relation") {
    if (value == "steady") {
      cfg.eta_relation = EtaRelation::Steady;
    } else if (value == "paper") {
      cfg.eta_relation = EtaRelation::Paper;
    } else {
      fail(where, key, "expected steady or paper");
    }
  } else if (key == "out") {
    if (value.empty()) fail(where, key, "must not be empty");
    cfg.out = value;
  } else if (key == "dump_every") {
    const int d = parse_int(key, value, where);
    if (d < 0) fail(where, key, "must be >= 0");
    cfg.dump_every = d;
  } else if (key == "grids") {
    std::vector<int> grids;
    for (auto item : split_list(value)) {
      const int n = parse_int(key, item, where);
      if (n < 4) fail(where, key, "every grid needs at least 4 cells per axis");
      grids.push_back(n);
    }
    cfg.grids = std::move(grids);
  } else if (key == "epsilons") {
    std::vector<double> eps;
    for (auto item : split_list(value)) {
      const double e = parse_real(key, item, where);
      if (!(e > 0.0)) fail(where, key, "every epsilon must be positive");
      eps.push_back(e);
    }
    cfg.epsilons = std::move(eps);
  } else if (key == "steps") {
    const int s = parse_int(key, value, where);
    if (s < 1) fail(where, key, "must be >= 1");
    cfg.steps = s;
  } else {
    throw ConfigError(std::string(where) + ": unknown key '" + std::string(key) + "'");
  }
}

std::string get_config_value(const RunConfig& cfg, std::string_view key) {
  if (key == "problem") return cfg.problem;
  if (key == "n") return std::to_string(cfg.n);
  if (key == "epsilon") return format_real(cfg.epsilon);
  if (key == "gamma") return format_real(cfg.gamma);
  if (key == "tableau") return cfg.tableau;
  if (key == "dp1_variant") return cfg.dp1_variant == Dp1Variant::Verbatim ? "verbatim" : "rowsum";
  if (key == "cfl") return format_real(cfg.cfl);
  if (key == "t_end") return format_real(cfg.t_end);
  if (key == "limiter") return to_string(cfg.limiter);
  if (key == "stencil") return to_string(cfg.stencil);
  if (key == "elliptic_tol") return format_real(cfg.elliptic_tol);
  if (key == "elliptic_max_iter") return std::to_string(cfg.elliptic_max_iter);
  if (key == "eta_relation") return to_string(cfg.eta_relation);
  if (key == "out") return cfg.out;
  if (key == "dump_every") return std::to_string(cfg.dump_every);
  if (key == "steps") return std::to_string(cfg.steps);
  if (key == "grids") {
    std::string s;
    for (std::size_t i = 0; i < cfg.grids.size(); ++i) {
      s += (i ? "," : "") + std::to_string(cfg.grids[i]);
    }
    return s;
  }
  if (key == "epsilons") {
    std::string s;
    for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) {
      s += (i ? "," : "") + format_real(cfg.epsilons[i]);
    }
    return s;
  }
  throw ConfigError("unknown key '" + std::string(key) + "'");
}

void apply_config_text(RunConfig& cfg, std::string_view text, std::string_view origin) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = std::string(origin) + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(where + ": expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError(where + ": missing key");
    set_config_value(cfg, key, line.substr(eq + 1), where);
  }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  apply_config_text(cfg, ss.str(), path);
}

void validate(const RunConfig& cfg) {
  if (cfg.problem == "stationary_vortex" || cfg.problem == "well_prepared" ||
      cfg.problem == "traveling_vortex") {
    // all posed on the unit square in 2-d
  } else {
    throw ConfigError("problem: unknown problem '" + cfg.problem + "'");
  }
  if (cfg.n < 4) throw ConfigError("n: needs at least 4 cells per axis");
  if (!(cfg.epsilon > 0.0)) throw ConfigError("epsilon: must be positive");
  if (!(cfg.gamma >= 1.0)) throw ConfigError("gamma: must be >= 1");
  if (!(cfg.cfl > 0.0 && cfg.cfl < 1.0)) throw ConfigError("cfl: must satisfy 0 < cfl < 1");
  if (!(cfg.t_end >= 0.0)) throw ConfigError("t_end: must be non-negative");
  if (!(cfg.elliptic_tol > 0.0)) throw ConfigError("elliptic_tol: must be positive");
  if (cfg.elliptic_max_iter < 0) throw ConfigError("elliptic_max_iter: must be >= 0");
  if (cfg.dump_every < 0) throw ConfigError("dump_every: must be >= 0");
  if (cfg.steps < 1) throw ConfigError("steps: must be >= 1");
  if (cfg.grids.empty()) throw ConfigError("grids: must not be empty");
  if (cfg.epsilons.empty()) throw ConfigError("epsilons: must not be empty");
  (void)get_tableau(cfg.tableau, cfg.dp1_variant);
}

}  // namespace apimex
