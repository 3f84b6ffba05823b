#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cohk/kernel.hpp"

/// Named coherent products with validated parameters and carriers.
///
/// Carrier summary (checked at every evaluation, CarrierError on violation):
///   delta          self-conjugate points (all coordinates real), any dimension
///   linear, spin, glauber, klauder   C^n, any n >= 1
///   min, invsum    positive reals (dimension 1, imaginary part exactly 0)
///   szego, schur_dbr                 open unit disk (dimension 1)
///   sinc           C (dimension 1)
namespace cohk::zoo {

/// 1 if w = conj(z) coordinatewise (exact comparison), else 0.
Kernel delta();
/// z^* w.
Kernel linear();
/// (z^* w)^{2j}; `two_j` >= 0.
Kernel spin(int two_j);
/// exp((z^* w - |z|^2/2 - |w|^2/2) / hbar), hbar > 0.
Kernel glauber(double hbar);
/// exp(conj(z_0) + w_0 + zr^* wr) for z = [z_0, zr].
Kernel klauder();
Kernel min_kernel();
/// 1 / (z + w).
Kernel invsum();
/// 1 / (1 - conj(z) w).
Kernel szego();
/// sinc(conj(z) - w).
Kernel sinc();

/// Analytic self-map of the disk into its closure.
using SchurFunction = std::function<Complex(Complex)>;
/// (1 - conj(s(z)) s(w)) / (1 - conj(z) w). |s(z)| > 1 raises CarrierError.
Kernel schur_dbr(SchurFunction s, std::string name = "s");

/// sin(x)/x with the series 1 - x^2/6 + x^4/120 for |x| < 1e-4.
Complex sinc_value(Complex x);

struct ZooEntry {
  std::string name;
  std::string carrier;
  std::vector<std::string> params;
  /// Admissibility of a single point (dimension included where fixed).
  std::function<bool(const Point&)> admissible;
};

/// Entries constructible from numeric parameters (schur_dbr needs a
/// function and is library-only).
const std::vector<ZooEntry>& entries();
const ZooEntry* find_entry(std::string_view name);

/// Builds a zoo kernel by name. Throws DomainError for unknown names,
/// wrong parameter counts or out-of-range parameters.
Kernel make(std::string_view name, std::span<const double> params = {});

}  // namespace cohk::zoo
