#include "cohk/combinators.hpp"

#include <cmath>

#include "cohk/errors.hpp"
#include "cohk/format.hpp"

namespace cohk {

Kernel constant(double c) {
  if (!std::isfinite(c) || c < 0.0) throw DomainError("constant kernel needs a finite c >= 0");
  return Kernel("const(" + format_number(c) + ")", [c](const Point&, const Point&) { return Complex(c); });
}

Kernel pullback(const Kernel& k, PointMap u, std::string name) {
  if (!u) throw DomainError("pullback map must be callable");
  return Kernel("pullback(" + k.trace() + ", " + name + ")",
                [k, u = std::move(u)](const Point& z, const Point& w) { return k(u(z), u(w)); });
}

Kernel restrict_to(const Kernel& k, PointPredicate member, std::string name) {
  if (!member) throw DomainError("restriction predicate must be callable");
  const std::string trace = "restrict(" + k.trace() + ", " + name + ")";
  return Kernel(
      trace,
      [k, member = std::move(member), trace](const Point& z, const Point& w) {
        if (!member(z) || !member(w)) throw CarrierError(trace, "point outside the restricted set");
        return k(z, w);
      },
      k.dimension());
}

Kernel scale(const Kernel& k, PointFunction gamma, std::string name) {
  if (!gamma) throw DomainError("scale function must be callable");
  return Kernel(
      "scale(" + k.trace() + ", " + name + ")",
      [k, gamma = std::move(gamma)](const Point& z, const Point& w) {
        return std::conj(gamma(z)) * k(z, w) * gamma(w);
      },
      k.dimension());
}

Kernel scale_const(const Kernel& k, Complex c) {
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) throw DomainError("scale constant must be finite");
  const std::string label =
      c.imag() == 0.0 ? format_number(c.real()) : "(" + format_number(c.real()) + "," + format_number(c.imag()) + ")";
  return Kernel(
      "scale_const(" + label + ", " + k.trace() + ")",
      [k, c](const Point& z, const Point& w) { return std::conj(c) * k(z, w) * c; }, k.dimension());
}

Kernel normalize(const Kernel& k, const Tolerance& tol) {
  const std::string trace = "normalize(" + k.trace() + ")";
  return Kernel(
      trace,
      [k, tol, trace](const Point& z, const Point& w) {
        const double kzz = k(z, z).real();
        const double kww = z == w ? kzz : k(w, w).real();
        if (kzz <= tol.abs() || kww <= tol.abs())
          throw DomainError(trace + ": division by a vanishing length");
        if (z == w) return k(z, w) / kzz;
        return k(z, w) / (std::sqrt(kzz) * std::sqrt(kww));
      },
      k.dimension());
}

WeightedKernelList::WeightedKernelList(std::vector<Item> items) : items_(std::move(items)) {
  if (items_.empty()) throw DomainError("weighted sum needs at least one kernel");
  for (const Item& it : items_) {
    if (!std::isfinite(it.weight) || it.weight <= 0.0) throw DomainError("weights must be finite and positive");
  }
}

Kernel weighted_sum(const WeightedKernelList& list) {
  std::string trace = "sum(";
  for (std::size_t i = 0; i < list.items().size(); ++i) {
    if (i) trace += ", ";
    trace += format_number(list.items()[i].weight) + ", " + list.items()[i].kernel.trace();
  }
  trace += ")";
  return Kernel(trace, [items = list.items()](const Point& z, const Point& w) {
    Complex s = 0.0;
    for (const auto& it : items) s += it.weight * it.kernel(z, w);
    return s;
  });
}

Kernel disjoint_union(std::vector<UnionPart> parts) {
  if (parts.empty()) throw DomainError("disjoint union needs at least one part");
  std::string trace = "union(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!parts[i].member) throw DomainError("union part predicate must be callable");
    if (i) trace += ", ";
    trace += parts[i].name + ": " + parts[i].kernel.trace();
  }
  trace += ")";
  auto locate = [parts, trace](const Point& z) {
    std::size_t found = parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!parts[i].member(z)) continue;
      if (found != parts.size()) throw CarrierError(trace, "point lies in more than one part");
      found = i;
    }
    if (found == parts.size()) throw CarrierError(trace, "point lies in no part");
    return found;
  };
  return Kernel(trace, [parts, locate](const Point& z, const Point& w) -> Complex {
    const std::size_t pz = locate(z);
    const std::size_t pw = locate(w);
    if (pz != pw) return 0.0;
    return parts[pz].kernel(z, w);
  });
}

Kernel product(const Kernel& k1, const Kernel& k2) {
  std::optional<std::size_t> dim = k1.dimension() ? k1.dimension() : k2.dimension();
  if (k1.dimension() && k2.dimension() && *k1.dimension() != *k2.dimension())
    throw DimensionError("product of kernels on different dimensions");
  return Kernel(
      "prod(" + k1.trace() + ", " + k2.trace() + ")",
      [k1, k2](const Point& z, const Point& w) { return k1(z, w) * k2(z, w); }, dim);
}

Kernel tensor(const Kernel& k1, const Kernel& k2, std::size_t split) {
  if (k1.dimension() && *k1.dimension() != split)
    throw DimensionError("tensor split " + std::to_string(split) + " does not match first factor dimension " +
                         std::to_string(*k1.dimension()));
  std::optional<std::size_t> dim;
  if (k2.dimension()) dim = split + *k2.dimension();
  const std::string trace = "tensor(" + k1.trace() + ", " + k2.trace() + ", " + std::to_string(split) + ")";
  return Kernel(
      trace,
      [k1, k2, split, trace](const Point& z, const Point& w) {
        if (split >= z.dimension())
          throw DimensionError(trace + ": split must leave coordinates for both factors, point dimension " +
                               std::to_string(z.dimension()));
        const std::size_t d = z.dimension();
        return k1(z.slice(0, split), w.slice(0, split)) * k2(z.slice(split, d), w.slice(split, d));
      },
      dim);
}

Kernel pow(const Kernel& k, int n) {
  if (n < 1) throw DomainError("pow exponent must be a positive integer");
  return Kernel(
      "pow(" + k.trace() + ", " + std::to_string(n) + ")",
      [k, n](const Point& z, const Point& w) {
        const Complex base = k(z, w);
        Complex r = base;
        for (int i = 1; i < n; ++i) r *= base;
        return r;
      },
      k.dimension());
}

Kernel expk(double beta, const ExtendedLogKernel& f) {
  if (!std::isfinite(beta) || beta <= 0.0) throw DomainError("expk needs a finite beta > 0");
  const std::string trace = "expk(" + format_number(beta) + ", " + f.trace() + ")";
  return Kernel(trace, [beta, f, trace](const Point& z, const Point& w) {
    try {
      return f(z, w).exp_scaled(beta);
    } catch (const OverflowError& e) {
      throw OverflowError(trace + ": " + e.what());
    }
  });
}

Kernel expk(double beta, const Kernel& k) {
  if (!std::isfinite(beta) || beta <= 0.0) throw DomainError("expk needs a finite beta > 0");
  const std::string trace = "expk(" + format_number(beta) + ", " + k.trace() + ")";
  return Kernel(
      trace,
      [beta, k, trace](const Point& z, const Point& w) {
        try {
          return LogValue(k(z, w)).exp_scaled(beta);
        } catch (const OverflowError& e) {
          throw OverflowError(trace + ": " + e.what());
        }
      },
      k.dimension());
}

Kernel resolvent(double c, const Kernel& k) {
  if (!std::isfinite(c) || c <= 0.0) throw DomainError("resolvent needs a finite c > 0");
  const std::string trace = "resolvent(" + format_number(c) + ", " + k.trace() + ")";
  return Kernel(
      trace,
      [c, k, trace](const Point& z, const Point& w) {
        const Complex v = k(z, w);
        if (!(std::abs(v) < c)) throw DomainError(trace + ": |K(z,w)| >= c");
        return 1.0 / (c - v);
      },
      k.dimension());
}

Kernel conjugate(const Kernel& k) {
  return Kernel(
      "conj(" + k.trace() + ")", [k](const Point& z, const Point& w) { return std::conj(k(z, w)); },
      k.dimension());
}

Kernel real_part(const Kernel& k) {
  return Kernel(
      "re(" + k.trace() + ")", [k](const Point& z, const Point& w) { return Complex(k(z, w).real()); },
      k.dimension());
}

ExtendedLogKernel cond_affine(PointFunction f, double gamma, const ExtendedLogKernel& base, std::string name) {
  if (!f) throw DomainError("cond_affine function must be callable");
  if (!std::isfinite(gamma) || gamma < 0.0) throw DomainError("cond_affine needs a finite gamma >= 0");
  return ExtendedLogKernel(
      "cond_affine(" + name + ", " + format_number(gamma) + ", " + base.trace() + ")",
      [f = std::move(f), gamma, base](const Point& z, const Point& w) -> LogValue {
        const Complex affine = std::conj(f(z)) + f(w);
        if (gamma == 0.0) return affine;
        const LogValue b = base(z, w);
        if (b.is_neg_inf()) return LogValue::neg_inf();
        return affine + gamma * b.value();
      });
}

}  // namespace cohk
