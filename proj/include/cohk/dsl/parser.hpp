#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cohk/dsl/ast.hpp"
#include "cohk/errors.hpp"

namespace cohk::dsl {

/// Syntax or validation failure with a 1-based source position. `expected`
/// lists the tokens that would have been accepted (empty for range and
/// arity errors raised after a complete token).
class ParseError : public Error {
 public:
  ParseError(SourcePos pos, const std::string& message, std::vector<std::string> expected = {});
  SourcePos pos() const noexcept { return pos_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  /// Message without the position prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  SourcePos pos_;
  std::string detail_;
  std::vector<std::string> expected_;
};

enum class NumberRule {
  Any,
  Positive,
  NonNegativeInteger,
  PositiveInteger,
  NonZeroInteger,
};

struct Slot {
  bool is_expr;
  NumberRule rule = NumberRule::Any;
  /// Inclusive magnitude cap for integer rules.
  double max_magnitude = 0.0;
  const char* role = "";
};

/// Argument signature of a grammar production. `pairs` marks the variadic
/// (weight, expr) list of `sum`, where `slots` holds the repeated pair.
struct Signature {
  std::string name;
  std::vector<Slot> slots;
  bool pairs = false;
  bool terminal = false;
};

const std::vector<Signature>& signatures();
const Signature* find_signature(std::string_view name);

constexpr std::size_t max_depth = 64;

/// Parses and validates one expression spanning the whole text.
ExprPtr parse(std::string_view text);

}  // namespace cohk::dsl
