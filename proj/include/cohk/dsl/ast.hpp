#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

/// Abstract syntax of kernel expressions.
///
///   expr    ::= ident [ "(" arglist ")" ]
///   arglist ::= arg { "," arg }
///   arg     ::= expr | number | "-" number
namespace cohk::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// A numeric argument or a child expression.
using Arg = std::variant<double, ExprPtr>;

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Expr {
  std::string name;
  std::vector<Arg> args;
  SourcePos pos;
};

inline bool is_number(const Arg& a) { return std::holds_alternative<double>(a); }
inline double number_of(const Arg& a) { return std::get<double>(a); }
inline const Expr& expr_of(const Arg& a) { return *std::get<ExprPtr>(a); }

/// Canonical text: no whitespace except ", " between arguments; numbers in
/// shortest round-trip form.
std::string print(const Expr& e);

/// Indented tree, one node per line.
std::string pretty(const Expr& e);

/// Terminals have depth 1.
std::size_t depth(const Expr& e);

/// Structural equality (positions ignored).
bool same_tree(const Expr& a, const Expr& b);

}  // namespace cohk::dsl
