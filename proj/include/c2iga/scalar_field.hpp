#pragma once

#include <map>
#include <memory>
#include <string>

namespace c2iga {

/// f(x1, x2) parsed from a small expression language: x1, x2, numbers,
/// + - * /, unary minus, parentheses, sin, cos, exp, pow(a, b).
class ScalarField {
 public:
  static ScalarField parse(const std::string& expr);
  /// A registered name, or else an expression.
  static ScalarField lookup(const std::string& name_or_expr);

  double operator()(double x1, double x2) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::shared_ptr<const Node> root_;
  std::string text_;
};

/// Registered named fields (name -> expression).
const std::map<std::string, std::string>& named_fields();

/// Name of the field used by the convergence tables.
inline constexpr const char* kDefaultField = "wave";

}  // namespace c2iga
