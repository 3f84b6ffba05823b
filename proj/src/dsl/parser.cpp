#include "cohk/dsl/parser.hpp"

#include <charconv>
#include <cmath>
#include <optional>

#include "cohk/format.hpp"

namespace cohk::dsl {

namespace {

std::string join_expected(const std::vector<std::string>& expected) {
  std::string s;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) s += ", ";
    s += expected[i];
  }
  return s;
}

std::string compose(SourcePos pos, const std::string& message, const std::vector<std::string>& expected) {
  std::string s = std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message;
  if (!expected.empty()) s += " (expected one of: " + join_expected(expected) + ")";
  return s;
}

}  // namespace

ParseError::ParseError(SourcePos pos, const std::string& message, std::vector<std::string> expected)
    : Error("parse", compose(pos, message, expected)), pos_(pos), detail_(message), expected_(std::move(expected)) {}

const std::vector<Signature>& signatures() {
  static const std::vector<Signature> table = [] {
    const Slot e{true};
    auto num = [](NumberRule rule, const char* role, double cap = 0.0) { return Slot{false, rule, cap, role}; };
    std::vector<Signature> t;
    for (const char* name : {"delta", "linear", "klauder", "min", "invsum", "szego", "sinc"})
      t.push_back({name, {}, false, true});
    t.push_back({"spin", {num(NumberRule::NonNegativeInteger, "two_j", 4096)}, false, true});
    t.push_back({"glauber", {num(NumberRule::Positive, "hbar")}, false, true});
    t.push_back({"normalize", {e}});
    t.push_back({"scale_const", {num(NumberRule::Any, "c"), e}});
    t.push_back({"sum", {num(NumberRule::Positive, "weight"), e}, true});
    t.push_back({"prod", {e, e}});
    t.push_back({"tensor", {e, e, num(NumberRule::PositiveInteger, "split", 4096)}});
    t.push_back({"pow", {e, num(NumberRule::PositiveInteger, "n", 1024)}});
    t.push_back({"expk", {num(NumberRule::Positive, "beta"), e}});
    t.push_back({"resolvent", {num(NumberRule::Positive, "c"), e}});
    t.push_back({"conj", {e}});
    t.push_back({"re", {e}});
    t.push_back({"pext", {e, num(NumberRule::NonZeroInteger, "degree", 1024)}});
    return t;
  }();
  return table;
}

const Signature* find_signature(std::string_view name) {
  for (const Signature& s : signatures())
    if (s.name == name) return &s;
  return nullptr;
}

namespace {

enum class Tok { Ident, Number, LParen, RParen, Comma, Minus, End };

struct Token {
  Tok kind;
  std::string text;
  double value = 0.0;
  SourcePos pos;
};

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  /// `expected` is only used for diagnostics on malformed input.
  Token next(const std::vector<std::string>& expected) {
    skip_space();
    const SourcePos pos = pos_;
    if (i_ >= text_.size()) return {Tok::End, "end of input", 0.0, pos};
    const char c = text_[i_];
    if (is_letter(c)) {
      const std::size_t start = i_;
      while (i_ < text_.size() && (is_letter(text_[i_]) || is_digit(text_[i_]) || text_[i_] == '_')) advance();
      return {Tok::Ident, std::string(text_.substr(start, i_ - start)), 0.0, pos};
    }
    if (is_digit(c) || c == '.') return number(pos, expected);
    advance();
    switch (c) {
      case '(': return {Tok::LParen, "(", 0.0, pos};
      case ')': return {Tok::RParen, ")", 0.0, pos};
      case ',': return {Tok::Comma, ",", 0.0, pos};
      case '-': return {Tok::Minus, "-", 0.0, pos};
      default: break;
    }
    throw ParseError(pos, "unexpected character '" + std::string(1, c) + "'", expected);
  }

 private:
  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (i_ < text_.size() && (text_[i_] == ' ' || text_[i_] == '\t' || text_[i_] == '\n' || text_[i_] == '\r'))
      advance();
  }

  void digits() {
    while (i_ < text_.size() && is_digit(text_[i_])) advance();
  }

  Token number(SourcePos pos, const std::vector<std::string>& expected) {
    const std::size_t start = i_;
    const std::size_t int_start = i_;
    digits();
    bool any_digits = i_ > int_start;
    if (i_ < text_.size() && text_[i_] == '.') {
      advance();
      const std::size_t frac_start = i_;
      digits();
      any_digits = any_digits || i_ > frac_start;
    }
    if (!any_digits) throw ParseError(pos, "malformed number", expected);
    if (i_ < text_.size() && (text_[i_] == 'e' || text_[i_] == 'E')) {
      advance();
      if (i_ < text_.size() && (text_[i_] == '+' || text_[i_] == '-')) advance();
      const std::size_t exp_start = i_;
      digits();
      if (i_ == exp_start) throw ParseError(pos_, "malformed exponent", {"digit"});
    }
    if (i_ < text_.size() && (is_letter(text_[i_]) || text_[i_] == '_'))
      throw ParseError(pos_, "identifier characters directly after a number", {",", ")"});
    const std::string_view lit = text_.substr(start, i_ - start);
    double v = 0.0;
    const auto res = std::from_chars(lit.data(), lit.data() + lit.size(), v);
    if (res.ec == std::errc::result_out_of_range || !std::isfinite(v))
      throw ParseError(pos, "number out of range: " + std::string(lit));
    if (res.ec != std::errc() || res.ptr != lit.data() + lit.size())
      throw ParseError(pos, "malformed number: " + std::string(lit), expected);
    return {Tok::Number, std::string(lit), v, pos};
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
};

const std::vector<std::string>& arg_start() {
  static const std::vector<std::string> s{"identifier", "number", "-"};
  return s;
}

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

std::optional<std::string> violates(const Slot& slot, double v) {
  const bool integral = std::floor(v) == v;
  switch (slot.rule) {
    case NumberRule::Any:
      return std::nullopt;
    case NumberRule::Positive:
      if (v > 0.0) return std::nullopt;
      return std::string("must be positive");
    case NumberRule::NonNegativeInteger:
      if (integral && v >= 0.0 && v <= slot.max_magnitude) return std::nullopt;
      return "must be an integer in [0, " + format_number(slot.max_magnitude) + "]";
    case NumberRule::PositiveInteger:
      if (integral && v >= 1.0 && v <= slot.max_magnitude) return std::nullopt;
      return "must be an integer in [1, " + format_number(slot.max_magnitude) + "]";
    case NumberRule::NonZeroInteger:
      if (integral && v != 0.0 && std::abs(v) <= slot.max_magnitude) return std::nullopt;
      return "must be a nonzero integer with magnitude at most " + format_number(slot.max_magnitude);
  }
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  ExprPtr run() {
    advance({"identifier"});
    ExprPtr e = expr(1, {"(", "end of input"});
    if (tok_.kind != Tok::End) throw ParseError(tok_.pos, "unexpected " + describe(tok_), {"end of input"});
    return e;
  }

 private:
  void advance(const std::vector<std::string>& expected) { tok_ = lex_.next(expected); }

  /// `follow` lists what may come after a bare identifier in this context.
  ExprPtr expr(std::size_t level, const std::vector<std::string>& follow) {
    if (tok_.kind != Tok::Ident) throw ParseError(tok_.pos, "unexpected " + describe(tok_), {"identifier"});
    const Token ident = tok_;
    const Signature* sig = find_signature(ident.text);
    if (!sig) {
      std::vector<std::string> names;
      for (const Signature& s : signatures()) names.push_back(s.name);
      throw ParseError(ident.pos, "unknown identifier '" + ident.text + "'", names);
    }
    if (level > max_depth)
      throw ParseError(ident.pos, "expression depth exceeds " + std::to_string(max_depth));

    auto node = std::make_shared<Expr>();
    node->name = ident.text;
    node->pos = ident.pos;
    std::vector<SourcePos> arg_pos;
    advance(follow);
    if (tok_.kind == Tok::LParen) {
      advance(arg_start());
      while (true) {
        arg_pos.push_back(tok_.pos);
        node->args.push_back(arg(level));
        if (tok_.kind == Tok::Comma) {
          advance(arg_start());
          continue;
        }
        if (tok_.kind == Tok::RParen) {
          advance(follow);
          break;
        }
        throw ParseError(tok_.pos, "unexpected " + describe(tok_), {",", ")"});
      }
    }
    validate(*sig, *node, arg_pos);
    return node;
  }

  Arg arg(std::size_t level) {
    if (tok_.kind == Tok::Minus) {
      advance({"number"});
      if (tok_.kind != Tok::Number) throw ParseError(tok_.pos, "unexpected " + describe(tok_), {"number"});
      const double v = -tok_.value;
      advance({",", ")"});
      return v;
    }
    if (tok_.kind == Tok::Number) {
      const double v = tok_.value;
      advance({",", ")"});
      return v;
    }
    if (tok_.kind == Tok::Ident) return expr(level + 1, {"(", ",", ")"});
    throw ParseError(tok_.pos, "unexpected " + describe(tok_), arg_start());
  }

  static void validate(const Signature& sig, const Expr& node, const std::vector<SourcePos>& arg_pos) {
    const std::size_t n = node.args.size();
    if (sig.pairs) {
      if (n == 0 || n % 2 != 0)
        throw ParseError(node.pos, sig.name + " takes a nonempty list of (weight, expression) pairs, got " +
                                       std::to_string(n) + " arguments");
    } else if (n != sig.slots.size()) {
      throw ParseError(node.pos, sig.name + " takes " + std::to_string(sig.slots.size()) + " argument" +
                                     (sig.slots.size() == 1 ? "" : "s") + ", got " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Slot& slot = sig.slots[i % sig.slots.size()];
      if (slot.is_expr && is_number(node.args[i]))
        throw ParseError(arg_pos[i], sig.name + " argument " + std::to_string(i + 1) + " must be an expression");
      if (!slot.is_expr) {
        if (!is_number(node.args[i]))
          throw ParseError(arg_pos[i], sig.name + " argument " + std::to_string(i + 1) + " (" + slot.role +
                                           ") must be a number");
        if (const auto why = violates(slot, number_of(node.args[i])))
          throw ParseError(arg_pos[i], sig.name + " " + slot.role + " = " + format_number(number_of(node.args[i])) +
                                           " " + *why);
      }
    }
  }

  Lexer lex_;
  Token tok_{Tok::End, "", 0.0, {}};
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).run(); }

}  // namespace cohk::dsl
