#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "cohk/point.hpp"

namespace cohk {

using Matrix = Eigen::MatrixXcd;

/// A coherent product K(z, w): Hermitian, antilinear in the first slot by
/// convention, of positive type on its admissible carrier.
///
/// Kernels are immutable handles sharing their evaluator; copying is cheap
/// and evaluation is safe from any number of threads.
class Kernel {
 public:
  using Evaluator = std::function<Complex(const Point&, const Point&)>;

  /// `dimension` pins the coordinate count of admissible points; leave
  /// empty for kernels defined on every dimension.
  Kernel(std::string trace, Evaluator eval, std::optional<std::size_t> dimension = std::nullopt);

  /// Checks dimension compatibility, then evaluates.
  Complex operator()(const Point& z, const Point& w) const;

  const std::string& trace() const noexcept;
  std::optional<std::size_t> dimension() const noexcept;

  /// Handle identity (two handles to the same constructed kernel).
  bool same_as(const Kernel& other) const noexcept { return impl_ == other.impl_; }

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

inline Complex evaluate(const Kernel& k, const Point& z, const Point& w) { return k(z, w); }

/// Hermitian matrix of kernel values on a sample. Construction hermitizes
/// ((G + G^*)/2) and keeps the size of that correction.
class GramMatrix {
 public:
  /// Wraps a raw matrix (no generating kernel). Must be square.
  static GramMatrix from_entries(const Matrix& raw);

  const Matrix& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  Complex operator()(std::size_t j, std::size_t k) const { return entries_(j, k); }

  /// max_{jk} |G_jk - (G_jk + conj(G_kj))/2| of the raw values.
  double hermitization_correction() const noexcept { return correction_; }
  /// Correction above 1e-6 times the Frobenius norm of the raw matrix.
  bool numerically_non_hermitian() const noexcept;

  const std::optional<Kernel>& kernel() const noexcept { return kernel_; }
  const std::optional<PointSet>& points() const noexcept { return points_; }

 private:
  GramMatrix(const Matrix& raw, std::optional<Kernel> k, std::optional<PointSet> pts);

  Matrix entries_;
  double correction_ = 0.0;
  double raw_norm_ = 0.0;
  std::optional<Kernel> kernel_;
  std::optional<PointSet> points_;

  friend GramMatrix gram(const Kernel& k, const PointSet& pts);
};

/// G_jk = K(z_j, z_k). Evaluation errors are rethrown as EvaluationError
/// carrying (j, k).
GramMatrix gram(const Kernel& k, const PointSet& pts);

/// Raw evaluation matrix without hermitization.
Matrix evaluation_matrix(const Kernel& k, const PointSet& rows, const PointSet& cols);

struct PositivityVerdict {
  bool psd = false;
  /// Smallest eigenvalue of the tested form; +inf when the form is empty.
  double min_eigenvalue = 0.0;
  /// Largest |eigenvalue| of the tested form.
  double spectral_norm = 0.0;
  /// psd iff min_eigenvalue >= -threshold.
  double threshold = 0.0;
  Eigen::VectorXd eigenvalues;
};

/// Eigenvalues of a Hermitian matrix in ascending order; throws EigenError
/// on solver failure.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& m);

PositivityVerdict is_psd(const GramMatrix& g, const Tolerance& tol = {});
PositivityVerdict is_psd(const Matrix& hermitian, const Tolerance& tol = {});

/// Orthonormal basis (n x (n-1)) of {u : sum_k u_k = 0}.
Matrix sum_zero_basis(std::size_t n);

/// psd test of B^* G B with B = sum_zero_basis(n).
PositivityVerdict is_conditionally_psd(const GramMatrix& g, const Tolerance& tol = {});

/// Transform G -> G - g 1^* - 1 g^* + G_aa 1 1^* with g_j = G_ja, the matrix
/// form of the Schoenberg transform with base index a.
Matrix schoenberg_transform(const Matrix& g, std::size_t base_index);

/// Re K(z,z) after validating that K(z,z) is real and nonnegative within
/// tolerance. Throws NonCoherentError otherwise.
double diagonal_value(const Kernel& k, const Point& z, const Tolerance& tol = {});

/// n(z) = sqrt(K(z,z)).
double length(const Kernel& k, const Point& z, const Tolerance& tol = {});

/// d(z,w) = sqrt(K(z,z) + K(w,w) - 2 Re K(z,w)), clamped at 0.
double distance(const Kernel& k, const Point& z, const Point& w, const Tolerance& tol = {});

/// arccos(|K(z,w)| / (n(z) n(w))) in [0, pi/2].
double angle(const Kernel& k, const Point& z, const Point& w, const Tolerance& tol = {});

using PointMap = std::function<Point(const Point&)>;

struct MorphismReport {
  double max_deviation = 0.0;
  double max_abs_value = 0.0;
  double threshold = 0.0;
  bool is_morphism = false;
};

/// Compares K2(rho(z_j), rho(z_k)) with K(z_j, z_k) over all sample pairs.
MorphismReport check_morphism(const Kernel& k, const Kernel& k2, const PointMap& rho,
                              const PointSet& pts, const Tolerance& tol = {});

}  // namespace cohk
