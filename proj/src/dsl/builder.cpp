#include "cohk/dsl/builder.hpp"

#include <vector>

#include "cohk/combinators.hpp"
#include "cohk/dsl/parser.hpp"
#include "cohk/errors.hpp"
#include "cohk/structure.hpp"
#include "cohk/zoo.hpp"

namespace cohk::dsl {

namespace {

Kernel child(const Expr& e, std::size_t i) { return build(expr_of(e.args[i])); }
double num(const Expr& e, std::size_t i) { return number_of(e.args[i]); }
int integer(const Expr& e, std::size_t i) { return static_cast<int>(number_of(e.args[i])); }

}  // namespace

Kernel build(const Expr& e) {
  const Signature* sig = find_signature(e.name);
  if (!sig) throw ParseError(e.pos, "unknown identifier '" + e.name + "'");
  if (sig->terminal) {
    std::vector<double> params;
    for (const Arg& a : e.args) params.push_back(number_of(a));
    return zoo::make(e.name, params);
  }
  const std::string& n = e.name;
  if (n == "normalize") return normalize(child(e, 0));
  if (n == "scale_const") return scale_const(child(e, 1), num(e, 0));
  if (n == "sum") {
    std::vector<WeightedKernelList::Item> items;
    for (std::size_t i = 0; i + 1 < e.args.size(); i += 2) items.push_back({num(e, i), child(e, i + 1)});
    return weighted_sum(WeightedKernelList(std::move(items)));
  }
  if (n == "prod") return product(child(e, 0), child(e, 1));
  if (n == "tensor") return tensor(child(e, 0), child(e, 1), static_cast<std::size_t>(num(e, 2)));
  if (n == "pow") return pow(child(e, 0), integer(e, 1));
  if (n == "expk") return expk(num(e, 0), child(e, 1));
  if (n == "resolvent") return resolvent(num(e, 0), child(e, 1));
  if (n == "conj") return conjugate(child(e, 0));
  if (n == "re") return real_part(child(e, 0));
  if (n == "pext") return projective_extension(child(e, 0), integer(e, 1));
  throw ParseError(e.pos, "no constructor for '" + n + "'");
}

Kernel compile(std::string_view text) { return build(*parse(text)); }

}  // namespace cohk::dsl
