#include "cohk/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cohk/errors.hpp"
#include "cohk/format.hpp"

namespace cohk {

Kernel schoenberg_transform(const ExtendedLogKernel& f, const Point& a) {
  const std::string trace = "schoenberg(" + f.trace() + ")";
  return Kernel(trace, [f, a, trace](const Point& z, const Point& w) {
    const LogValue terms[] = {f(z, w), f(z, a), f(a, w), f(a, a)};
    for (const LogValue& t : terms)
      if (t.is_neg_inf())
        throw DomainError(trace + ": F = -inf encountered; decompose the sample into finiteness classes");
    return terms[0].value() - terms[1].value() - terms[2].value() + terms[3].value();
  });
}

LogMatrix log_matrix(const ExtendedLogKernel& f, const PointSet& pts) {
  const auto n = static_cast<Eigen::Index>(pts.size());
  LogMatrix m{Matrix::Zero(n, n), Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>::Constant(n, n, false)};
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      try {
        const LogValue v = f(pts[j], pts[k]);
        if (v.is_neg_inf())
          m.neg_inf(j, k) = true;
        else
          m.values(j, k) = v.value();
      } catch (const Error& e) {
        throw EvaluationError(j, k, e.kind(), e.what());
      }
    }
  }
  return m;
}

namespace {

void require_conj_symmetric(const Matrix& g, const Tolerance& tol, const std::string& what) {
  if (g.size() == 0) return;
  const double dev = (g - g.adjoint()).cwiseAbs().maxCoeff();
  if (dev > tol.bound(g.cwiseAbs().maxCoeff()))
    throw DomainError(what + " is not conjugate-symmetric on the sample (deviation " + format_number(dev) + ")");
}

Matrix exp_gram(const LogMatrix& m, double beta) {
  Matrix g(m.values.rows(), m.values.cols());
  for (Eigen::Index j = 0; j < g.rows(); ++j)
    for (Eigen::Index k = 0; k < g.cols(); ++k)
      g(j, k) = m.neg_inf(j, k) ? Complex(0.0) : LogValue(m.values(j, k)).exp_scaled(beta);
  return g;
}

}  // namespace

ConditionalPositivityReport is_conditionally_positive(const ExtendedLogKernel& f, const PointSet& pts,
                                                      const Tolerance& tol) {
  const LogMatrix m = log_matrix(f, pts);
  const std::size_t n = pts.size();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (m.neg_inf(j, k) != m.neg_inf(k, j))
        throw DomainError(f.trace() + ": asymmetric -inf pattern at (" + std::to_string(j) + "," +
                          std::to_string(k) + ")");

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k)
      if (!m.neg_inf(j, k)) {
        const std::size_t a = find(j), b = find(k);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }

  ConditionalPositivityReport r;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] == n) {
      slot[root] = r.classes.size();
      r.classes.emplace_back();
    }
    r.classes[slot[root]].push_back(i);
  }

  r.conditionally_positive = true;
  r.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& cls : r.classes) {
    const auto size = static_cast<Eigen::Index>(cls.size());
    if (cls.size() == 1 && m.neg_inf(cls[0], cls[0])) {
      PositivityVerdict trivial;
      trivial.psd = true;
      trivial.min_eigenvalue = std::numeric_limits<double>::infinity();
      r.class_verdicts.push_back(trivial);
      continue;
    }
    Matrix g(size, size);
    for (Eigen::Index j = 0; j < size; ++j) {
      for (Eigen::Index k = 0; k < size; ++k) {
        if (m.neg_inf(cls[j], cls[k]))
          throw DomainError(f.trace() + ": -inf inside a finiteness class at (" + std::to_string(cls[j]) + "," +
                            std::to_string(cls[k]) + ")");
        g(j, k) = m.values(cls[j], cls[k]);
      }
    }
    require_conj_symmetric(g, tol, f.trace());
    Matrix p = schoenberg_transform(g, 0);
    p = (p + p.adjoint()) / 2.0;
    PositivityVerdict v = is_psd(p, tol);
    r.conditionally_positive = r.conditionally_positive && v.psd;
    r.min_eigenvalue = std::min(r.min_eigenvalue, v.min_eigenvalue);
    r.class_verdicts.push_back(std::move(v));
  }
  return r;
}

MengerEmbedding menger_embed(const ExtendedLogKernel& f, const PointSet& pts, const Tolerance& tol) {
  const LogMatrix m = log_matrix(f, pts);
  if (m.neg_inf.any()) throw DomainError(f.trace() + ": Menger embedding needs finite values");
  const double scale = m.values.cwiseAbs().maxCoeff();
  const double bound = tol.bound(scale);
  if (m.values.imag().cwiseAbs().maxCoeff() > bound) throw DomainError(f.trace() + ": F must be real on the sample");
  const Eigen::MatrixXd fr = m.values.real();
  if ((fr - fr.transpose()).cwiseAbs().maxCoeff() > bound)
    throw DomainError(f.trace() + ": F must be symmetric on the sample");
  const Eigen::MatrixXd fs = (fr + fr.transpose()) / 2.0;

  const Eigen::Index n = fs.rows();
  Eigen::MatrixXd p(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k) p(j, k) = 0.5 * (fs(j, k) - fs(j, 0) - fs(0, k) + fs(0, 0));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(p);
  if (solver.info() != Eigen::Success) throw EigenError("symmetric eigensolver did not converge");
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const double lambda_max = lambda.cwiseAbs().maxCoeff();
  if (lambda.size() > 0 && lambda(0) < -tol.bound(lambda_max))
    throw NotPositiveError(f.trace() + ": not conditionally positive (Schoenberg eigenvalue " +
                           format_number(lambda(0)) + ")");

  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = lambda.size() - 1; i >= 0; --i)
    if (lambda(i) > tol.rel() * lambda_max && lambda(i) > 0.0) keep.push_back(i);

  MengerEmbedding e;
  e.coordinates.resize(n, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) {
    Eigen::VectorXd col = std::sqrt(lambda(keep[c])) * solver.eigenvectors().col(keep[c]);
    Eigen::Index arg = 0;
    col.cwiseAbs().maxCoeff(&arg);
    if (col(arg) < 0.0) col = -col;
    e.coordinates.col(static_cast<Eigen::Index>(c)) = col;
  }
  e.g = 0.5 * fs.diagonal();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const double sq = (e.coordinates.row(j) - e.coordinates.row(k)).squaredNorm();
      e.residual = std::max(e.residual, std::abs(fr(j, k) - (e.g(j) + e.g(k) - sq)));
    }
  }
  return e;
}

std::vector<double> BwProbeReport::admissible_betas() const {
  std::vector<double> out;
  for (const BwRow& r : rows)
    if (r.psd) out.push_back(r.beta);
  return out;
}

BwProbeReport bw_probe(const ExtendedLogKernel& f, const PointSet& pts, const std::vector<double>& betas,
                       const Tolerance& tol) {
  const LogMatrix m = log_matrix(f, pts);
  BwProbeReport r;
  for (const double beta : betas) {
    if (!std::isfinite(beta) || beta <= 0.0) throw DomainError("bw probe betas must be positive");
    Matrix g;
    try {
      g = exp_gram(m, beta);
    } catch (const OverflowError& e) {
      throw OverflowError("beta = " + format_number(beta) + ": " + e.what());
    }
    const PositivityVerdict v = is_psd(GramMatrix::from_entries(g), tol);
    r.rows.push_back({beta, v.min_eigenvalue, v.psd});
  }
  return r;
}

BwClosureReport bw_closure_check(const ExtendedLogKernel& f, const PointSet& pts, double beta1, double beta2,
                                 const Tolerance& tol) {
  const BwProbeReport pre = bw_probe(f, pts, {beta1, beta2}, tol);
  if (!pre.rows[0].psd || !pre.rows[1].psd)
    throw DomainError("closure check needs both betas to pass the probe");
  const LogMatrix m = log_matrix(f, pts);
  const Matrix g1 = exp_gram(m, beta1);
  const Matrix g2 = exp_gram(m, beta2);
  const Matrix g12 = exp_gram(m, beta1 + beta2);
  BwClosureReport r;
  const Matrix prod = g1.cwiseProduct(g2);
  r.product_identity_deviation =
      (g12 - prod).cwiseAbs().maxCoeff() / std::max(1.0, g12.cwiseAbs().maxCoeff());
  r.product_identity_holds = r.product_identity_deviation <= 1e-14;
  r.sum_verdict = is_psd(GramMatrix::from_entries(g12), tol);
  r.closed = r.product_identity_holds && r.sum_verdict.psd;
  return r;
}

}  // namespace cohk
