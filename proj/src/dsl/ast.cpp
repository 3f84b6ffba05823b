#include "cohk/dsl/ast.hpp"

#include <algorithm>

#include "cohk/format.hpp"

namespace cohk::dsl {

std::string print(const Expr& e) {
  std::string out = e.name;
  if (e.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ", ";
    out += is_number(e.args[i]) ? format_number(number_of(e.args[i])) : print(expr_of(e.args[i]));
  }
  out += ')';
  return out;
}

namespace {

void pretty_into(const Expr& e, std::size_t indent, std::string& out) {
  out.append(2 * indent, ' ');
  out += e.name;
  std::vector<std::string> numbers;
  for (const Arg& a : e.args)
    if (is_number(a)) numbers.push_back(format_number(number_of(a)));
  if (!numbers.empty()) {
    out += " [";
    for (std::size_t i = 0; i < numbers.size(); ++i) {
      if (i) out += ", ";
      out += numbers[i];
    }
    out += ']';
  }
  out += '\n';
  for (const Arg& a : e.args)
    if (!is_number(a)) pretty_into(expr_of(a), indent + 1, out);
}

}  // namespace

std::string pretty(const Expr& e) {
  std::string out;
  pretty_into(e, 0, out);
  return out;
}

std::size_t depth(const Expr& e) {
  std::size_t d = 0;
  for (const Arg& a : e.args)
    if (!is_number(a)) d = std::max(d, depth(expr_of(a)));
  return d + 1;
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.name != b.name || a.args.size() != b.args.size()) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (is_number(a.args[i]) != is_number(b.args[i])) return false;
    if (is_number(a.args[i])) {
      if (number_of(a.args[i]) != number_of(b.args[i])) return false;
    } else if (!same_tree(expr_of(a.args[i]), expr_of(b.args[i]))) {
      return false;
    }
  }
  return true;
}

}  // namespace cohk::dsl
