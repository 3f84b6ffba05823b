#pragma once

#include <vector>

#include "cohk/kernel.hpp"
#include "cohk/log_kernel.hpp"

namespace cohk {

/// P_a(z,w) = F(z,w) - F(z,a) - F(a,w) + F(a,a). A -inf value at
/// evaluation raises DomainError: split the sample into finiteness classes
/// first (see is_conditionally_positive).
Kernel schoenberg_transform(const ExtendedLogKernel& f, const Point& a);

/// Values of F on a sample; -inf entries are reported in `neg_inf`.
struct LogMatrix {
  Matrix values;
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> neg_inf;
};
LogMatrix log_matrix(const ExtendedLogKernel& f, const PointSet& pts);

struct ConditionalPositivityReport {
  bool conditionally_positive = false;
  /// Finiteness classes (indices into the sample), lowest index first.
  std::vector<std::vector<std::size_t>> classes;
  /// Verdict of P_a on each class, a = the class's first index. Classes
  /// whose diagonal is -inf (F = -inf on the class) carry a trivial verdict.
  std::vector<PositivityVerdict> class_verdicts;
  double min_eigenvalue = 0.0;
};

/// Conditional positivity in the extended sense: F finite inside classes
/// linked by finite values, -inf across them, and conditionally positive on
/// each class. A -inf pattern that is asymmetric or not a clean class
/// decomposition raises DomainError.
ConditionalPositivityReport is_conditionally_positive(const ExtendedLogKernel& f, const PointSet& pts,
                                                      const Tolerance& tol = {});

/// F(z_j,z_k) = g_j + g_k - ||q_j - q_k||^2 on the sample.
struct MengerEmbedding {
  /// Row k is q_k; columns are ordered by descending eigenvalue.
  Eigen::MatrixXd coordinates;
  Eigen::VectorXd g;
  /// max_{jk} |F - (g_j + g_k - ||q_j - q_k||^2)|.
  double residual = 0.0;

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(coordinates.cols()); }
};

/// Requires F real and symmetric on the sample. Embedding dimension is the
/// numerical rank of P_a (eigenvalues > tol.rel * lambda_max); each column is
/// signed so its largest-magnitude entry is positive. NotPositiveError when
/// negative eigenvalues exceed the tolerance.
MengerEmbedding menger_embed(const ExtendedLogKernel& f, const PointSet& pts, const Tolerance& tol = {});

struct BwRow {
  double beta;
  double min_eigenvalue;
  bool psd;
};

struct BwProbeReport {
  std::vector<BwRow> rows;
  /// Passing on a finite sample is necessary, never sufficient, for beta to
  /// lie in the Berezin-Wallach set.
  static constexpr bool sample_necessary_only = true;

  std::vector<double> admissible_betas() const;
};

/// psd verdict of the gram of exp(beta F) for each beta.
BwProbeReport bw_probe(const ExtendedLogKernel& f, const PointSet& pts, const std::vector<double>& betas,
                       const Tolerance& tol = {});

struct BwClosureReport {
  /// max |exp((b1+b2)F) - exp(b1 F) exp(b2 F)| relative to max(1, max|entry|).
  double product_identity_deviation = 0.0;
  bool product_identity_holds = false;
  PositivityVerdict sum_verdict;
  bool closed = false;
};

/// Sum closure of the pass set: b1 and b2 must pass (DomainError otherwise);
/// checks the entrywise-product identity (to 1e-14 relative) and the psd
/// verdict for b1 + b2.
BwClosureReport bw_closure_check(const ExtendedLogKernel& f, const PointSet& pts, double beta1, double beta2,
                                 const Tolerance& tol = {});

}  // namespace cohk
