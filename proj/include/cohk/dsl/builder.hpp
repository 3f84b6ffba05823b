#pragma once

#include <string_view>

#include "cohk/dsl/ast.hpp"
#include "cohk/kernel.hpp"

namespace cohk::dsl {

/// Kernel denoted by a validated expression. `expk(beta, e)` exponentiates
/// the values of `e`. The result's trace equals print(e).
Kernel build(const Expr& e);

/// parse + build.
Kernel compile(std::string_view text);

}  // namespace cohk::dsl
