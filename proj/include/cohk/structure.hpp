#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "cohk/kernel.hpp"
#include "cohk/quantum_space.hpp"

namespace cohk {

struct NormalityReport {
  bool normal = false;
  /// Indices j with |K(z_j,z_j) - 1| beyond tolerance.
  std::vector<std::size_t> bad_diagonal;
  /// Pairs j < k of distinct points with |K(z_j,z_k)| >= 1 - tol.abs().
  std::vector<std::pair<std::size_t, std::size_t>> bad_pairs;
  double max_diagonal_deviation = 0.0;
  double max_offdiagonal_modulus = 0.0;
};

/// K(z,z) = 1 within tolerance on the sample and |K(z,w)| < 1 - tol.abs()
/// for distinct sample points (unequal coordinates). Moduli within rounding
/// of 1 count as violations.
NormalityReport is_normal(const Kernel& k, const PointSet& pts, const Tolerance& tol = {});

/// Element (lambda, z) of the projective extension C^* x Z. Encoded as a
/// Point whose first coordinate is lambda and whose remaining coordinates
/// are those of z.
class ProjectivePoint {
 public:
  ProjectivePoint(Complex scalar, Point base);

  Complex scalar() const noexcept { return scalar_; }
  const Point& base() const noexcept { return base_; }

  Point encode() const;
  static ProjectivePoint decode(const Point& encoded);

  /// mu (lambda, z) = (mu lambda, z).
  ProjectivePoint scaled(Complex mu) const { return ProjectivePoint(mu * scalar_, base_); }

 private:
  Complex scalar_;
  Point base_;
};

/// conj(lambda)^e K(z,w) lambda'^e on encoded projective points.
Kernel projective_extension(const Kernel& k, int degree);

using ScalarAction = std::function<Point(Complex, const Point&)>;

/// lambda . p = lambda p coordinatewise.
ScalarAction linear_action();
/// Scalar action of the projective extension on encoded points.
ScalarAction projective_action();

/// {2, i, -1, (1+i)/2}.
std::vector<Complex> default_projective_scalars();

struct ProjectivityReport {
  /// max |K(z, lambda w) - lambda^e K(z,w)|.
  double forward_deviation = 0.0;
  /// max |K(lambda z, w) - conj(lambda)^e K(z,w)|.
  double adjoint_deviation = 0.0;
  /// max |K(z, lambda w) - K(conj(lambda) z, w)|.
  double swap_deviation = 0.0;
  double threshold = 0.0;
  bool projective = false;
};

ProjectivityReport check_projective(const Kernel& k, const ScalarAction& action, int degree, const PointSet& pts,
                                    const std::vector<Complex>& scalars = default_projective_scalars(),
                                    const Tolerance& tol = {});

/// sum c_l |(lambda_l, z_l)> -> sum c_l lambda_l^e |z_l>.
CoherentVector projective_lift_isometry(const Kernel& base, int degree, const CoherentVector& over_pz);

struct QuotientPartition {
  std::vector<std::vector<std::size_t>> classes;
  /// Lowest index of each class, parallel to `classes`.
  std::vector<std::size_t> representatives;

  std::size_t class_of(std::size_t index) const;
};

/// Groups sample indices whose gram rows agree entrywise within tolerance
/// (transitive closure). The sample itself is the probe set, so this
/// under-approximates the equivalence on the whole carrier.
QuotientPartition nondegenerate_quotient(const Kernel& k, const PointSet& pts, const Tolerance& tol = {});

/// Representative points of each class, in class order.
PointSet quotient_points(const PointSet& pts, const QuotientPartition& partition);

}  // namespace cohk
