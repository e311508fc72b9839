#include "apimex/tableaux.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace apimex {

namespace {

constexpr double kSingularPivot = 1e-14;

bool rows_match(const Matrix& m, std::size_t n) {
  if (m.size() != n) return false;
  for (const auto& row : m) {
    if (row.size() != n) return false;
  }
  return true;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double sum(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v;
  return s;
}

double max_row_sum_mismatch(const Matrix& a, const std::vector<double>& c) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::fmax(worst, std::fabs(sum(a[i]) - c[i]));
  return worst;
}

double max_last_row_mismatch(const Matrix& a, const std::vector<double>& w) {
  double worst = 0.0;
  const auto& last = a.back();
  for (std::size_t j = 0; j < w.size(); ++j) worst = std::fmax(worst, std::fabs(last[j] - w[j]));
  return worst;
}

}  // namespace

const char* to_string(TableauKind kind) {
  switch (kind) {
    case TableauKind::TypeA:
      return "TypeA";
    case TableauKind::TypeCK:
      return "TypeCK";
    case TableauKind::Unclassified:
      break;
  }
  return "Unclassified";
}

TableauKind classify(const Matrix& a) {
  const std::size_t s = a.size();
  if (s == 0 || !rows_match(a, s)) return TableauKind::Unclassified;
  // Lower triangular: the determinant is the product of the diagonal.
  bool invertible = true;
  for (std::size_t i = 0; i < s; ++i) invertible = invertible && std::fabs(a[i][i]) > kSingularPivot;
  if (invertible) return TableauKind::TypeA;
  if (s < 2) return TableauKind::Unclassified;
  for (double v : a[0]) {
    if (v != 0.0) return TableauKind::Unclassified;
  }
  for (std::size_t i = 1; i < s; ++i) {
    if (std::fabs(a[i][i]) <= kSingularPivot) return TableauKind::Unclassified;
  }
  return TableauKind::TypeCK;
}

DoubleTableau make_tableau(std::string name, int order, Matrix a_exp, Matrix a_imp,
                           std::vector<double> c_exp, std::vector<double> c_imp,
                           std::vector<double> w_exp, std::vector<double> w_imp) {
  const std::size_t s = a_imp.size();
  if (s == 0 || !rows_match(a_exp, s) || !rows_match(a_imp, s) || c_exp.size() != s ||
      c_imp.size() != s || w_exp.size() != s || w_imp.size() != s) {
    throw ConfigError("tableau '" + name + "' has inconsistent dimensions");
  }
  DoubleTableau t;
  t.name = std::move(name);
  t.stages = static_cast<int>(s);
  t.order = order;
  t.a_exp = std::move(a_exp);
  t.a_imp = std::move(a_imp);
  t.c_exp = std::move(c_exp);
  t.c_imp = std::move(c_imp);
  t.w_exp = std::move(w_exp);
  t.w_imp = std::move(w_imp);
  t.kind = classify(t.a_imp);
  return t;
}

std::vector<std::string> available_tableaux() {
  return {"DP1-A(2,4,2)", "DP2-A(2,4,2)", "ARS(1,1,1)"};
}

DoubleTableau get_tableau(std::string_view name, Dp1Variant variant) {
  if (name == "DP1-A(2,4,2)") {
    const double r2 = variant == Dp1Variant::RowSum ? 1.0 / 3.0 : 0.0;
    return make_tableau(std::string(name), 2,
                        {{0, 0, 0, 0}, {r2, 0, 0, 0}, {1, 0, 0, 0}, {0.5, 0, 0.5, 0}},
                        {{0.5, 0, 0, 0},
                         {1.0 / 6.0, 0.5, 0, 0},
                         {-0.5, 0.5, 0.5, 0},
                         {1.5, -1.5, 0.5, 0.5}},
                        {0, 1.0 / 3.0, 1, 1}, {0.5, 2.0 / 3.0, 0.5, 1}, {0.5, 0, 0.5, 0},
                        {1.5, -1.5, 0.5, 0.5});
  }
  if (name == "DP2-A(2,4,2)" || name == "DP2-A1(2,4,2)") {
    const double g = kDirkGamma;
    return make_tableau("DP2-A(2,4,2)", 2,
                        {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0.5, 0.5, 0}},
                        {{g, 0, 0, 0}, {-g, g, 0, 0}, {0, 1 - g, g, 0}, {0, 0.5, 0.5 - g, g}},
                        {0, 0, 1, 1}, {g, 0, 1, 1}, {0, 0.5, 0.5, 0}, {0, 0.5, 0.5 - g, g});
  }
  if (name == "ARS(1,1,1)") {
    // Forward/backward Euler pair; stage 1 is the trivial stage at t^n.
    return make_tableau(std::string(name), 1, {{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}, {0, 1}, {0, 1},
                        {1, 0}, {0, 1});
  }
  std::string msg = "unknown tableau '" + std::string(name) + "'; available:";
  for (const auto& n : available_tableaux()) msg += " " + n;
  throw LookupError(msg);
}

bool ValidationReport::passed() const {
  for (const auto& c : checks) {
    if (c.required && !c.passed) return false;
  }
  return true;
}

const ValidationCheck* ValidationReport::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  os << "tableau " << tableau << " (" << apimex::to_string(kind) << ")\n";
  for (const auto& c : checks) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-4s %-44s residual=%.3e%s\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                  c.required ? "" : " (informational)");
    os << line;
  }
  os << (passed() ? "result: PASS\n" : "result: FAIL\n");
  return os.str();
}

ValidationReport validate_tableau(const DoubleTableau& t) {
  ValidationReport r;
  r.tableau = t.name;
  r.kind = classify(t.a_imp);
  const std::size_t s = t.a_imp.size();
  auto add = [&](std::string name, double residual, double tol, bool required) {
    r.checks.push_back({std::move(name), residual <= tol, residual, required});
  };

  double upper_exp = 0.0;
  double upper_imp = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (j >= i) upper_exp = std::fmax(upper_exp, std::fabs(t.a_exp[i][j]));
      if (j > i) upper_imp = std::fmax(upper_imp, std::fabs(t.a_imp[i][j]));
    }
  }
  add("explicit matrix strictly lower triangular", upper_exp, 0.0, true);
  add("implicit matrix lower triangular", upper_imp, 0.0, true);
  add("explicit stiffly accurate (last row = weights)", max_last_row_mismatch(t.a_exp, t.w_exp),
      0.0, true);
  add("implicit stiffly accurate (last row = weights)", max_last_row_mismatch(t.a_imp, t.w_imp),
      0.0, true);
  add("explicit order 1 (sum w = 1)", std::fabs(sum(t.w_exp) - 1.0), kTableauTolerance, true);
  add("implicit order 1 (sum w = 1)", std::fabs(sum(t.w_imp) - 1.0), kTableauTolerance, true);
  const bool second = t.order >= 2;
  add("explicit order 2 (w.c = 1/2)", std::fabs(dot(t.w_exp, t.c_exp) - 0.5), kTableauTolerance,
      second);
  add("implicit order 2 (w.c = 1/2)", std::fabs(dot(t.w_imp, t.c_imp) - 0.5), kTableauTolerance,
      second);
  add("explicit abscissae are row sums", max_row_sum_mismatch(t.a_exp, t.c_exp),
      kTableauTolerance, false);
  add("implicit abscissae are row sums", max_row_sum_mismatch(t.a_imp, t.c_imp),
      kTableauTolerance, false);

  // Coupling conditions use the row sums, which is what an autonomous flux sees.
  std::vector<double> rs_exp(s);
  std::vector<double> rs_imp(s);
  for (std::size_t i = 0; i < s; ++i) {
    rs_exp[i] = sum(t.a_exp[i]);
    rs_imp[i] = sum(t.a_imp[i]);
  }
  add("coupling order 2 (w_exp.A_imp 1 = 1/2)", std::fabs(dot(t.w_exp, rs_imp) - 0.5),
      kTableauTolerance, false);
  add("coupling order 2 (w_imp.A_exp 1 = 1/2)", std::fabs(dot(t.w_imp, rs_exp) - 0.5),
      kTableauTolerance, false);

  const bool classified = r.kind != TableauKind::Unclassified;
  r.checks.push_back({std::string("classification ") + apimex::to_string(r.kind), classified,
                      0.0, true});
  return r;
}

}  // namespace apimex
