#include "apimex/apimex.h"

#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "apimex/experiments.hpp"

struct apimex_config {
  apimex::RunConfig cfg;
};

struct apimex_solver {
  apimex::Case problem;
  apimex::Mesh mesh;
  apimex::ConservedState state;
  std::size_t steps = 0;

  explicit apimex_solver(apimex::Case c)
      : problem(std::move(c)), mesh(problem.grid), state(problem.initial) {}
};

namespace {

thread_local std::string last_error;

apimex_status fail(apimex_status status, const std::string& msg) {
  last_error = msg;
  return status;
}

// Runs body and maps exceptions onto status codes.
template <class Body>
apimex_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return APIMEX_OK;
  } catch (const apimex::LookupError& e) {
    return fail(APIMEX_ERR_LOOKUP, e.what());
  } catch (const apimex::ConfigError& e) {
    return fail(APIMEX_ERR_CONFIG, e.what());
  } catch (const apimex::SolverError& e) {
    return fail(APIMEX_ERR_SOLVER, e.what());
  } catch (const apimex::IoError& e) {
    return fail(APIMEX_ERR_IO, e.what());
  } catch (const apimex::DomainError& e) {
    return fail(APIMEX_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(APIMEX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(APIMEX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(APIMEX_ERR_INTERNAL, "unknown exception");
  }
}

apimex::LogFn make_log(apimex_log_fn fn, void* user) {
  if (!fn) return {};
  return [fn, user](const std::string& line) { fn(line.c_str(), user); };
}

}  // namespace

extern "C" {

const char* apimex_version(void) { return "1.0.0"; }

const char* apimex_last_error(void) { return last_error.c_str(); }

apimex_status apimex_config_create(apimex_config** out) {
  if (!out) return fail(APIMEX_ERR_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] { *out = new apimex_config{}; });
}

void apimex_config_destroy(apimex_config* cfg) { delete cfg; }

apimex_status apimex_config_load_file(apimex_config* cfg, const char* path) {
  if (!cfg || !path) return fail(APIMEX_ERR_ARGUMENT, "null argument");
  return guarded([&] { apimex::apply_config_file(cfg->cfg, path); });
}

apimex_status apimex_config_set(apimex_config* cfg, const char* key, const char* value,
                                const char* origin) {
  if (!cfg || !key || !value) return fail(APIMEX_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    apimex::set_config_value(cfg->cfg, key, value, origin ? origin : key);
  });
}

apimex_status apimex_config_get(const apimex_config* cfg, const char* key, char* buf,
                                size_t size, size_t* needed) {
  if (!cfg || !key) return fail(APIMEX_ERR_ARGUMENT, "null argument");
  std::string value;
  const apimex_status st = guarded([&] { value = apimex::get_config_value(cfg->cfg, key); });
  if (st != APIMEX_OK) return st;
  if (needed) *needed = value.size() + 1;
  if (!buf) return APIMEX_OK;
  if (size < value.size() + 1) {
    if (size > 0) buf[0] = '\0';
    return fail(APIMEX_ERR_ARGUMENT, "buffer too small for value of '" + std::string(key) + "'");
  }
  std::memcpy(buf, value.c_str(), value.size() + 1);
  return APIMEX_OK;
}

apimex_status apimex_cmd_run(const apimex_config* cfg, apimex_log_fn log, void* user) {
  if (!cfg) return fail(APIMEX_ERR_ARGUMENT, "null config");
  return guarded([&] { apimex::cmd_run(cfg->cfg, make_log(log, user)); });
}

apimex_status apimex_cmd_convergence(const apimex_config* cfg, apimex_log_fn log, void* user) {
  if (!cfg) return fail(APIMEX_ERR_ARGUMENT, "null config");
  return guarded([&] { apimex::cmd_convergence(cfg->cfg, make_log(log, user)); });
}

apimex_status apimex_cmd_ap_sweep(const apimex_config* cfg, apimex_log_fn log, void* user) {
  if (!cfg) return fail(APIMEX_ERR_ARGUMENT, "null config");
  return guarded([&] { apimex::cmd_ap_sweep(cfg->cfg, make_log(log, user)); });
}

apimex_status apimex_tableau_check(const apimex_config* cfg, const char* name, apimex_log_fn log,
                                   void* user, int* passed) {
  if (!cfg) return fail(APIMEX_ERR_ARGUMENT, "null config");
  return guarded([&] {
    std::vector<std::string> names;
    if (name) names.emplace_back(name);
    bool ok = false;
    const std::string report = apimex::tableau_check_report(names, cfg->cfg.dp1_variant, &ok);
    if (log) log(report.c_str(), user);
    if (passed) *passed = ok ? 1 : 0;
  });
}

apimex_status apimex_solver_create(const apimex_config* cfg, apimex_solver** out) {
  if (!cfg || !out) return fail(APIMEX_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new apimex_solver(apimex::build_case(cfg->cfg)); });
}

void apimex_solver_destroy(apimex_solver* solver) { delete solver; }

apimex_status apimex_solver_step(apimex_solver* solver, size_t steps) {
  if (!solver) return fail(APIMEX_ERR_ARGUMENT, "null solver");
  return guarded([&] {
    const auto res = apimex::run_steps(solver->state, solver->problem.step, solver->problem.model,
                                       solver->mesh, steps);
    solver->state = res.state;
    solver->steps += res.diagnostics.size();
  });
}

apimex_status apimex_solver_advance(apimex_solver* solver, double t_end) {
  if (!solver) return fail(APIMEX_ERR_ARGUMENT, "null solver");
  return guarded([&] {
    const auto res = apimex::run(solver->state, solver->problem.step, solver->problem.model,
                                 solver->mesh, t_end);
    solver->state = res.state;
    solver->steps += res.diagnostics.size();
  });
}

double apimex_solver_time(const apimex_solver* solver) {
  return solver ? solver->state.time : 0.0;
}

size_t apimex_solver_steps_taken(const apimex_solver* solver) {
  return solver ? solver->steps : 0;
}

size_t apimex_solver_cell_count(const apimex_solver* solver) {
  return solver ? solver->mesh.size() : 0;
}

apimex_status apimex_solver_copy_fields(const apimex_solver* solver, double* rho, double* q1,
                                        double* q2) {
  if (!solver) return fail(APIMEX_ERR_ARGUMENT, "null solver");
  return guarded([&] {
    const auto& s = solver->state;
    const std::size_t n = s.rho.size();
    if (rho) std::memcpy(rho, s.rho.data(), n * sizeof(double));
    if (q1) std::memcpy(q1, s.q[0].data(), n * sizeof(double));
    if (q2) std::memcpy(q2, s.q[1].data(), n * sizeof(double));
  });
}

apimex_status apimex_solver_write_fields(const apimex_solver* solver, const char* path) {
  if (!solver || !path) return fail(APIMEX_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    apimex::write_fields_file(path, solver->state, solver->problem.grid, solver->problem.model);
  });
}

}  // extern "C"
