#pragma once

// Double Butcher tableaux for additive IMEX Runge-Kutta schemes.

#include <string>
#include <string_view>
#include <vector>

#include "apimex/error.hpp"

namespace apimex {

using Matrix = std::vector<std::vector<double>>;

enum class TableauKind { TypeA, TypeCK, Unclassified };

const char* to_string(TableauKind kind);

/// Paired explicit/implicit tableaux. The explicit matrix is strictly lower
/// triangular, the implicit one lower triangular (diagonally implicit).
struct DoubleTableau {
  std::string name;
  int stages = 0;
  int order = 1;  // claimed order; order-2 conditions are required when >= 2
  Matrix a_exp;
  Matrix a_imp;
  std::vector<double> c_exp;
  std::vector<double> c_imp;
  std::vector<double> w_exp;
  std::vector<double> w_imp;
  TableauKind kind = TableauKind::Unclassified;
};

/// Builds a tableau and computes `kind` from the implicit matrix.
DoubleTableau make_tableau(std::string name, int order, Matrix a_exp, Matrix a_imp,
                           std::vector<double> c_exp, std::vector<double> c_imp,
                           std::vector<double> w_exp, std::vector<double> w_imp);

/// Type-A if the implicit matrix is invertible, type-CK if its first row is
/// zero and the trailing block is invertible.
TableauKind classify(const Matrix& a_imp);

/// Second explicit row of DP1-A(2,4,2): as printed (zero) or the row-sum
/// consistent (1/3, 0, 0, 0).
enum class Dp1Variant { Verbatim, RowSum };

/// Implicit diagonal parameter of DP2-A(2,4,2).
inline constexpr double kDirkGamma = 0.29289321881345247560;  // 1 - 1/sqrt(2)

/// Looks up a shipped tableau. Throws LookupError listing the valid names.
DoubleTableau get_tableau(std::string_view name, Dp1Variant variant = Dp1Variant::Verbatim);

std::vector<std::string> available_tableaux();

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  bool required = true;  // informational checks never fail the report
};

struct ValidationReport {
  std::string tableau;
  TableauKind kind = TableauKind::Unclassified;
  std::vector<ValidationCheck> checks;

  bool passed() const;
  const ValidationCheck* find(std::string_view name) const;
  std::string to_string() const;
};

inline constexpr double kTableauTolerance = 1e-14;

ValidationReport validate_tableau(const DoubleTableau& t);

}  // namespace apimex
