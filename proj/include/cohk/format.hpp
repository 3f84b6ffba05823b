#pragma once

#include <string>

#include "cohk/point.hpp"

namespace cohk {

/// Shortest decimal that parses back to the same double.
std::string format_number(double x);

/// "re+imi" with 17 significant digits per component.
std::string format_complex(Complex z);

/// Real value with 17 significant digits.
std::string format_real(double x);

}  // namespace cohk
