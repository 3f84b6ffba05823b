#include "cohk/structure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cohk/errors.hpp"

namespace cohk {

namespace {

Complex int_power(Complex x, int e) {
  Complex r = 1.0;
  const Complex b = e < 0 ? 1.0 / x : x;
  for (int i = 0; i < std::abs(e); ++i) r *= b;
  return r;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

NormalityReport is_normal(const Kernel& k, const PointSet& pts, const Tolerance& tol) {
  NormalityReport r;
  const Matrix g = evaluation_matrix(k, pts, pts);
  const double diag_bound = tol.bound(1.0);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    const double dev = std::abs(g(j, j) - 1.0);
    r.max_diagonal_deviation = std::max(r.max_diagonal_deviation, dev);
    if (dev > diag_bound) r.bad_diagonal.push_back(j);
  }
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t l = j + 1; l < pts.size(); ++l) {
      if (pts[j].coords() == pts[l].coords()) continue;
      const double m = std::max(std::abs(g(j, l)), std::abs(g(l, j)));
      r.max_offdiagonal_modulus = std::max(r.max_offdiagonal_modulus, m);
      // |K| must stay strictly below 1; values within rounding of 1 count as
      // touching the unit circle.
      if (m >= 1.0 - tol.abs()) r.bad_pairs.emplace_back(j, l);
    }
  }
  r.normal = r.bad_diagonal.empty() && r.bad_pairs.empty();
  return r;
}

ProjectivePoint::ProjectivePoint(Complex scalar, Point base) : scalar_(scalar), base_(std::move(base)) {
  if (scalar_ == Complex(0.0)) throw DomainError("projective point scalar must be nonzero");
  if (!std::isfinite(scalar_.real()) || !std::isfinite(scalar_.imag()))
    throw DomainError("projective point scalar must be finite");
}

Point ProjectivePoint::encode() const {
  std::vector<Complex> c;
  c.reserve(base_.dimension() + 1);
  c.push_back(scalar_);
  c.insert(c.end(), base_.coords().begin(), base_.coords().end());
  return Point(std::move(c), base_.tag());
}

ProjectivePoint ProjectivePoint::decode(const Point& encoded) {
  if (encoded.dimension() < 2) throw DimensionError("projective point needs a scalar and a base coordinate");
  return ProjectivePoint(encoded[0], encoded.slice(1, encoded.dimension()));
}

Kernel projective_extension(const Kernel& k, int degree) {
  if (degree == 0) throw DomainError("projective extension degree must be nonzero");
  std::optional<std::size_t> dim;
  if (k.dimension()) dim = *k.dimension() + 1;
  return Kernel(
      "pext(" + k.trace() + ", " + std::to_string(degree) + ")",
      [k, degree](const Point& p, const Point& q) {
        const ProjectivePoint a = ProjectivePoint::decode(p);
        const ProjectivePoint b = ProjectivePoint::decode(q);
        return int_power(std::conj(a.scalar()), degree) * k(a.base(), b.base()) * int_power(b.scalar(), degree);
      },
      dim);
}

ScalarAction linear_action() {
  return [](Complex lambda, const Point& z) { return z.scaled(lambda); };
}

ScalarAction projective_action() {
  return [](Complex lambda, const Point& p) { return ProjectivePoint::decode(p).scaled(lambda).encode(); };
}

std::vector<Complex> default_projective_scalars() {
  return {Complex(2.0, 0.0), Complex(0.0, 1.0), Complex(-1.0, 0.0), Complex(0.5, 0.5)};
}

ProjectivityReport check_projective(const Kernel& k, const ScalarAction& action, int degree, const PointSet& pts,
                                    const std::vector<Complex>& scalars, const Tolerance& tol) {
  if (degree == 0) throw DomainError("projectivity degree must be nonzero");
  ProjectivityReport r;
  double scale = 0.0;
  for (const Complex lambda : scalars) {
    if (lambda == Complex(0.0)) throw DomainError("projectivity scalars must be nonzero");
    const Complex le = int_power(lambda, degree);
    const Complex cle = std::conj(le);
    for (const Point& z : pts) {
      const Point lz = action(lambda, z);
      const Point clz = action(std::conj(lambda), z);
      for (const Point& w : pts) {
        const Point lw = action(lambda, w);
        const Complex kzw = k(z, w);
        const Complex k_z_lw = k(z, lw);
        scale = std::max({scale, std::abs(kzw), std::abs(k_z_lw), std::abs(le * kzw)});
        r.forward_deviation = std::max(r.forward_deviation, std::abs(k_z_lw - le * kzw));
        r.adjoint_deviation = std::max(r.adjoint_deviation, std::abs(k(lz, w) - cle * kzw));
        r.swap_deviation = std::max(r.swap_deviation, std::abs(k_z_lw - k(clz, w)));
      }
    }
  }
  r.threshold = tol.bound(scale);
  r.projective = r.forward_deviation <= r.threshold && r.adjoint_deviation <= r.threshold &&
                 r.swap_deviation <= r.threshold;
  return r;
}

CoherentVector projective_lift_isometry(const Kernel& base, int degree, const CoherentVector& over_pz) {
  if (degree == 0) throw DomainError("projective extension degree must be nonzero");
  std::vector<CoherentVector::Term> terms;
  terms.reserve(over_pz.terms().size());
  for (const auto& t : over_pz.terms()) {
    const ProjectivePoint p = ProjectivePoint::decode(t.point);
    terms.push_back({t.coefficient * int_power(p.scalar(), degree), p.base()});
  }
  return CoherentVector(base, std::move(terms));
}

std::size_t QuotientPartition::class_of(std::size_t index) const {
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (std::find(classes[c].begin(), classes[c].end(), index) != classes[c].end()) return c;
  throw DomainError("index " + std::to_string(index) + " is not in the partition");
}

QuotientPartition nondegenerate_quotient(const Kernel& k, const PointSet& pts, const Tolerance& tol) {
  const Matrix g = evaluation_matrix(k, pts, pts);
  const double bound = tol.bound(g.cwiseAbs().maxCoeff());
  const std::size_t n = pts.size();
  DisjointSets sets(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = j + 1; l < n; ++l)
      if ((g.row(j) - g.row(l)).cwiseAbs().maxCoeff() <= bound) sets.unite(j, l);

  QuotientPartition q;
  std::vector<std::size_t> class_index(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find(i);
    if (class_index[root] == n) {
      class_index[root] = q.classes.size();
      q.classes.emplace_back();
      q.representatives.push_back(i);
    }
    q.classes[class_index[root]].push_back(i);
  }
  return q;
}

PointSet quotient_points(const PointSet& pts, const QuotientPartition& partition) {
  return pts.subset(partition.representatives);
}

}  // namespace cohk
