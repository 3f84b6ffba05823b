#include "cohk/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "cohk/errors.hpp"

namespace cohk {

struct Kernel::Impl {
  std::string trace;
  Evaluator eval;
  std::optional<std::size_t> dimension;
};

Kernel::Kernel(std::string trace, Evaluator eval, std::optional<std::size_t> dimension)
    : impl_(std::make_shared<const Impl>(Impl{std::move(trace), std::move(eval), dimension})) {
  if (!impl_->eval) throw DomainError("kernel evaluator must be callable");
}

Complex Kernel::operator()(const Point& z, const Point& w) const {
  if (z.dimension() != w.dimension())
    throw DimensionError(impl_->trace + ": points of dimension " + std::to_string(z.dimension()) +
                         " and " + std::to_string(w.dimension()));
  if (impl_->dimension && z.dimension() != *impl_->dimension)
    throw DimensionError(impl_->trace + ": expects dimension " + std::to_string(*impl_->dimension) +
                         ", got " + std::to_string(z.dimension()));
  return impl_->eval(z, w);
}

const std::string& Kernel::trace() const noexcept { return impl_->trace; }

std::optional<std::size_t> Kernel::dimension() const noexcept { return impl_->dimension; }

GramMatrix::GramMatrix(const Matrix& raw, std::optional<Kernel> k, std::optional<PointSet> pts)
    : kernel_(std::move(k)), points_(std::move(pts)) {
  if (raw.rows() != raw.cols()) throw DimensionError("gram matrix must be square");
  entries_ = (raw + raw.adjoint()) / 2.0;
  correction_ = raw.rows() == 0 ? 0.0 : (raw - entries_).cwiseAbs().maxCoeff();
  raw_norm_ = raw.norm();
}

GramMatrix GramMatrix::from_entries(const Matrix& raw) {
  for (Eigen::Index j = 0; j < raw.rows(); ++j)
    for (Eigen::Index k = 0; k < raw.cols(); ++k)
      if (!std::isfinite(raw(j, k).real()) || !std::isfinite(raw(j, k).imag()))
        throw DomainError("matrix entries must be finite");
  return GramMatrix(raw, std::nullopt, std::nullopt);
}

bool GramMatrix::numerically_non_hermitian() const noexcept { return correction_ > 1e-6 * raw_norm_; }

Matrix evaluation_matrix(const Kernel& k, const PointSet& rows, const PointSet& cols) {
  Matrix m(rows.size(), cols.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t l = 0; l < cols.size(); ++l) {
      try {
        m(j, l) = k(rows[j], cols[l]);
      } catch (const Error& e) {
        throw EvaluationError(j, l, e.kind(), e.what());
      }
    }
  }
  return m;
}

GramMatrix gram(const Kernel& k, const PointSet& pts) {
  return GramMatrix(evaluation_matrix(k, pts, pts), k, pts);
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("eigenvalues of a non-square matrix");
  if (m.rows() == 0) return Eigen::VectorXd();
  if (!m.allFinite()) throw EigenError("matrix has non-finite entries");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw EigenError("Hermitian eigensolver did not converge");
  return solver.eigenvalues();
}

PositivityVerdict is_psd(const Matrix& hermitian, const Tolerance& tol) {
  PositivityVerdict v;
  v.eigenvalues = hermitian_eigenvalues(hermitian);
  if (v.eigenvalues.size() == 0) {
    v.psd = true;
    v.min_eigenvalue = std::numeric_limits<double>::infinity();
    v.threshold = tol.bound(0.0);
    return v;
  }
  v.min_eigenvalue = v.eigenvalues(0);
  v.spectral_norm = v.eigenvalues.cwiseAbs().maxCoeff();
  v.threshold = tol.bound(v.spectral_norm);
  v.psd = v.min_eigenvalue >= -v.threshold;
  return v;
}

PositivityVerdict is_psd(const GramMatrix& g, const Tolerance& tol) { return is_psd(g.entries(), tol); }

Matrix sum_zero_basis(std::size_t n) {
  if (n <= 1) return Matrix(static_cast<Eigen::Index>(n), 0);
  const auto m = static_cast<Eigen::Index>(n);
  // Householder reflector H with H e_0 proportional to the all-ones vector;
  // its remaining columns span the orthogonal complement.
  Eigen::VectorXcd v = Eigen::VectorXcd::Constant(m, 1.0 / std::sqrt(static_cast<double>(n)));
  v(0) += 1.0;
  const double vv = v.squaredNorm();
  Matrix h = Matrix::Identity(m, m) - (2.0 / vv) * v * v.adjoint();
  return h.rightCols(m - 1);
}

PositivityVerdict is_conditionally_psd(const GramMatrix& g, const Tolerance& tol) {
  const Matrix b = sum_zero_basis(g.size());
  Matrix projected = b.adjoint() * g.entries() * b;
  projected = (projected + projected.adjoint()) / 2.0;
  return is_psd(projected, tol);
}

Matrix schoenberg_transform(const Matrix& g, std::size_t base_index) {
  const auto n = g.rows();
  if (g.cols() != n) throw DimensionError("schoenberg transform of a non-square matrix");
  const auto a = static_cast<Eigen::Index>(base_index);
  if (a >= n) throw DomainError("schoenberg base index out of range");
  Matrix p(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) p(j, k) = g(j, k) - g(j, a) - g(a, k) + g(a, a);
  return p;
}

double diagonal_value(const Kernel& k, const Point& z, const Tolerance& tol) {
  const Complex d = k(z, z);
  const double bound = tol.bound(std::abs(d));
  if (std::abs(d.imag()) > bound || d.real() < -bound)
    throw NonCoherentError(k.trace() + ": K(z,z) = (" + std::to_string(d.real()) + "," +
                           std::to_string(d.imag()) + ") is not real and nonnegative");
  return std::max(0.0, d.real());
}

double length(const Kernel& k, const Point& z, const Tolerance& tol) {
  return std::sqrt(diagonal_value(k, z, tol));
}

double distance(const Kernel& k, const Point& z, const Point& w, const Tolerance& tol) {
  const double kzz = diagonal_value(k, z, tol);
  const double kww = diagonal_value(k, w, tol);
  const double sq = kzz + kww - 2.0 * k(z, w).real();
  return std::sqrt(std::max(0.0, sq));
}

double angle(const Kernel& k, const Point& z, const Point& w, const Tolerance& tol) {
  const double nz = length(k, z, tol);
  const double nw = length(k, w, tol);
  if (nz <= tol.abs() || nw <= tol.abs()) throw DomainError(k.trace() + ": angle at a zero-length point");
  const double c = std::abs(k(z, w)) / (nz * nw);
  if (c > 1.0 + tol.bound(1.0))
    throw NonCoherentError(k.trace() + ": Cauchy-Schwarz violated, |K(z,w)|/(n(z)n(w)) = " +
                           std::to_string(c));
  return std::acos(std::clamp(c, 0.0, 1.0));
}

MorphismReport check_morphism(const Kernel& k, const Kernel& k2, const PointMap& rho,
                              const PointSet& pts, const Tolerance& tol) {
  std::vector<Point> images;
  images.reserve(pts.size());
  for (const Point& p : pts) images.push_back(rho(p));
  const Matrix original = evaluation_matrix(k, pts, pts);
  const PointSet mapped(std::move(images));
  const Matrix transported = evaluation_matrix(k2, mapped, mapped);
  MorphismReport r;
  r.max_deviation = (transported - original).cwiseAbs().maxCoeff();
  r.max_abs_value = original.cwiseAbs().maxCoeff();
  r.threshold = tol.bound(r.max_abs_value);
  r.is_morphism = r.max_deviation <= r.threshold;
  return r;
}

}  // namespace cohk
