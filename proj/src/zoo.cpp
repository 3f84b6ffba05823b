#include "cohk/zoo.hpp"

#include <cmath>

#include "cohk/errors.hpp"
#include "cohk/format.hpp"

namespace cohk::zoo {

namespace {

bool positive_real_scalar(const Point& z) {
  return z.dimension() == 1 && z[0].imag() == 0.0 && z[0].real() > 0.0;
}

bool in_unit_disk(const Point& z) { return z.dimension() == 1 && std::abs(z[0]) < 1.0; }

void require(bool ok, const std::string& entry, const char* what) {
  if (!ok) throw CarrierError(entry, what);
}

}  // namespace

Complex sinc_value(Complex x) {
  if (std::abs(x) < 1e-4) {
    const Complex x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

Kernel delta() {
  return Kernel("delta", [](const Point& z, const Point& w) -> Complex {
    require(z.is_real() && w.is_real(), "delta", "points must be self-conjugate (real coordinates)");
    return w.coords() == z.conjugated().coords() ? 1.0 : 0.0;
  });
}

Kernel linear() {
  return Kernel("linear", [](const Point& z, const Point& w) { return dot(z, w); });
}

Kernel spin(int two_j) {
  if (two_j < 0) throw DomainError("spin: 2j must be a nonnegative integer");
  return Kernel("spin(" + std::to_string(two_j) + ")", [two_j](const Point& z, const Point& w) {
    if (two_j == 0) return Complex(1.0);
    const Complex base = dot(z, w);
    Complex r = base;
    for (int i = 1; i < two_j; ++i) r *= base;
    return r;
  });
}

Kernel glauber(double hbar) {
  if (!std::isfinite(hbar) || hbar <= 0.0) throw DomainError("glauber: hbar must be positive");
  return Kernel("glauber(" + format_number(hbar) + ")", [hbar](const Point& z, const Point& w) {
    const Complex arg = dot(z, w) - 0.5 * (squared_norm(z) + squared_norm(w));
    return std::exp(arg / hbar);
  });
}

Kernel klauder() {
  return Kernel("klauder", [](const Point& z, const Point& w) {
    const std::size_t d = z.dimension();
    Complex arg = std::conj(z[0]) + w[0];
    if (d > 1) arg += dot(z.slice(1, d), w.slice(1, d));
    if (arg.real() > 709.0) throw OverflowError("klauder: exponent too large");
    return std::exp(arg);
  });
}

Kernel min_kernel() {
  return Kernel(
      "min",
      [](const Point& z, const Point& w) {
        require(positive_real_scalar(z) && positive_real_scalar(w), "min", "points must be positive reals");
        return Complex(std::min(z[0].real(), w[0].real()));
      },
      1);
}

Kernel invsum() {
  return Kernel(
      "invsum",
      [](const Point& z, const Point& w) {
        require(positive_real_scalar(z) && positive_real_scalar(w), "invsum", "points must be positive reals");
        return Complex(1.0 / (z[0].real() + w[0].real()));
      },
      1);
}

Kernel szego() {
  return Kernel(
      "szego",
      [](const Point& z, const Point& w) {
        require(in_unit_disk(z) && in_unit_disk(w), "szego", "points must lie in the open unit disk");
        return 1.0 / (1.0 - std::conj(z[0]) * w[0]);
      },
      1);
}

Kernel sinc() {
  return Kernel(
      "sinc", [](const Point& z, const Point& w) { return sinc_value(std::conj(z[0]) - w[0]); }, 1);
}

Kernel schur_dbr(SchurFunction s, std::string name) {
  if (!s) throw DomainError("schur_dbr: Schur function must be callable");
  const std::string trace = "schur_dbr(" + name + ")";
  return Kernel(
      trace,
      [s = std::move(s), trace](const Point& z, const Point& w) {
        require(in_unit_disk(z) && in_unit_disk(w), trace, "points must lie in the open unit disk");
        const Complex sz = s(z[0]);
        const Complex sw = s(w[0]);
        require(std::abs(sz) <= 1.0 + 1e-12 && std::abs(sw) <= 1.0 + 1e-12, trace,
                "Schur function leaves the closed unit disk");
        return (1.0 - std::conj(sz) * sw) / (1.0 - std::conj(z[0]) * w[0]);
      },
      1);
}

const std::vector<ZooEntry>& entries() {
  static const std::vector<ZooEntry> table = {
      {"delta", "self-conjugate points of C^n", {}, [](const Point& z) { return z.is_real(); }},
      {"linear", "C^n", {}, [](const Point&) { return true; }},
      {"spin", "C^n (unit sphere of C^2 in applications)", {"two_j"}, [](const Point&) { return true; }},
      {"glauber", "C^n", {"hbar"}, [](const Point&) { return true; }},
      {"klauder", "C x V, point [z_0, z]", {}, [](const Point&) { return true; }},
      {"min", "positive reals", {}, positive_real_scalar},
      {"invsum", "positive reals", {}, positive_real_scalar},
      {"szego", "open unit disk", {}, in_unit_disk},
      {"sinc", "C", {}, [](const Point& z) { return z.dimension() == 1; }},
  };
  return table;
}

const ZooEntry* find_entry(std::string_view name) {
  for (const ZooEntry& e : entries())
    if (e.name == name) return &e;
  return nullptr;
}

Kernel make(std::string_view name, std::span<const double> params) {
  const ZooEntry* entry = find_entry(name);
  if (!entry) throw DomainError("unknown zoo kernel '" + std::string(name) + "'");
  if (params.size() != entry->params.size())
    throw DomainError(std::string(name) + " takes " + std::to_string(entry->params.size()) + " parameter(s), got " +
                      std::to_string(params.size()));
  if (name == "delta") return delta();
  if (name == "linear") return linear();
  if (name == "spin") {
    const double t = params[0];
    if (!(t >= 0.0) || std::floor(t) != t || t > 1e6) throw DomainError("spin: 2j must be a nonnegative integer");
    return spin(static_cast<int>(t));
  }
  if (name == "glauber") return glauber(params[0]);
  if (name == "klauder") return klauder();
  if (name == "min") return min_kernel();
  if (name == "invsum") return invsum();
  if (name == "szego") return szego();
  return sinc();
}

}  // namespace cohk::zoo
