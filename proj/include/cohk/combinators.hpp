#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cohk/kernel.hpp"
#include "cohk/log_kernel.hpp"

namespace cohk {

using PointFunction = std::function<Complex(const Point&)>;
using PointPredicate = std::function<bool(const Point&)>;

/// The constant kernel K(z,w) = c, of positive type for c >= 0.
Kernel constant(double c);

/// K(u(z), u(w)). `name` labels u in the construction trace.
Kernel pullback(const Kernel& k, PointMap u, std::string name = "u");

/// Restriction of k to points accepted by `member`; other points raise
/// CarrierError.
Kernel restrict_to(const Kernel& k, PointPredicate member, std::string name = "Y");

/// conj(gamma(z)) K(z,w) gamma(w).
Kernel scale(const Kernel& k, PointFunction gamma, std::string name = "gamma");

/// scale() with gamma constant; equals |c|^2 K.
Kernel scale_const(const Kernel& k, Complex c);

/// K(z,w) / sqrt(K(z,z) K(w,w)). Points with K(z,z) <= tol.abs() raise
/// DomainError at evaluation.
Kernel normalize(const Kernel& k, const Tolerance& tol = {});

/// Nonempty list of (weight > 0, kernel).
class WeightedKernelList {
 public:
  struct Item {
    double weight;
    Kernel kernel;
  };

  explicit WeightedKernelList(std::vector<Item> items);
  const std::vector<Item>& items() const noexcept { return items_; }

 private:
  std::vector<Item> items_;
};

Kernel weighted_sum(const WeightedKernelList& items);

struct UnionPart {
  PointPredicate member;
  Kernel kernel;
  std::string name = "part";
};

/// K_l(z,w) if z and w lie in the same part l, else 0. A point in no part
/// (or in several) raises CarrierError.
Kernel disjoint_union(std::vector<UnionPart> parts);

/// Pointwise product K1(z,w) K2(z,w).
Kernel product(const Kernel& k1, const Kernel& k2);

/// K1(z[0,split), w[0,split)) K2(z[split,), w[split,)) on concatenated points.
Kernel tensor(const Kernel& k1, const Kernel& k2, std::size_t split);

/// K(z,w)^n by repeated multiplication, n >= 1.
Kernel pow(const Kernel& k, int n);

/// exp(beta F(z,w)) with exp(-inf) = 0, beta > 0.
Kernel expk(double beta, const ExtendedLogKernel& f);
/// exp(beta K(z,w)).
Kernel expk(double beta, const Kernel& k);

/// 1 / (c - K(z,w)); |K(z,w)| >= c at evaluation raises DomainError.
Kernel resolvent(double c, const Kernel& k);

Kernel conjugate(const Kernel& k);
Kernel real_part(const Kernel& k);

/// conj(f(z)) + f(w) + gamma F(z,w); conditionally positive whenever F is.
/// For gamma = 0 the F term is dropped even where F = -inf.
ExtendedLogKernel cond_affine(PointFunction f, double gamma, const ExtendedLogKernel& base,
                              std::string name = "f");

}  // namespace cohk
