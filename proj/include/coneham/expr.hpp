#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coneham/error.hpp"

namespace coneham {

/// Values bound to the expression variables t, s, v.
struct Bindings {
  double t = 0.0;
  double s = 0.0;
  double v = 0.0;
};

enum class Builtin { abs, min, max, exp, sqrt };

/// Parsed arithmetic expression over reals and the variables t, s, v:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := '-' unary | primary
///   primary := number | variable | name '(' expr (',' expr)* ')' | '(' expr ')'
/// Functions: abs, min, max, exp, sqrt.
class Expr {
 public:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Number {
    double value;
  };
  struct Variable {
    char name;
  };
  struct Negate {
    NodePtr operand;
  };
  struct Binary {
    char op;
    NodePtr lhs, rhs;
    std::size_t offset;  // position of the operator
  };
  struct Call {
    Builtin fn;
    std::vector<NodePtr> args;
    std::size_t offset;
  };
  struct Node {
    std::variant<Number, Variable, Negate, Binary, Call> data;
  };

  Expr() = default;
  Expr(NodePtr root, std::string source) : root_(std::move(root)), source_(std::move(source)) {}

  /// Throws Error(evaluation) with the operator offset on division by zero.
  double eval(const Bindings& b) const;
  double operator()(double t, double s, double v) const { return eval({t, s, v}); }

  /// Fully parenthesized text that parses back to the same tree.
  std::string to_string() const;
  const std::string& source() const noexcept { return source_; }
  /// Variables referenced, as a sorted string such as "tv".
  std::string variables() const;
  bool constant() const { return variables().empty(); }
  const NodePtr& root() const noexcept { return root_; }

  /// Structural equality of the trees (sources are ignored).
  friend bool operator==(const Expr& a, const Expr& b);

 private:
  NodePtr root_;
  std::string source_;
};

Expr parse_expr(std::string_view text);

/// Parses and checks that only variables from `allowed` are referenced.
Expr parse_expr(std::string_view text, std::string_view allowed);

}  // namespace coneham
