#include "cohk/quantum_space.hpp"

#include <algorithm>
#include <cmath>

#include "cohk/errors.hpp"

namespace cohk {

CoherentVector::CoherentVector(Kernel k, std::vector<Term> terms) : kernel_(std::move(k)), terms_(std::move(terms)) {
  for (const Term& t : terms_) {
    if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag()))
      throw DomainError("coherent vector coefficients must be finite");
  }
}

CoherentVector CoherentVector::operator+(const CoherentVector& other) const {
  if (!kernel_.same_as(other.kernel_))
    throw KernelMismatchError("adding vectors of different kernels (" + kernel_.trace() + ", " +
                              other.kernel_.trace() + ")");
  std::vector<Term> t = terms_;
  t.insert(t.end(), other.terms_.begin(), other.terms_.end());
  return CoherentVector(kernel_, std::move(t));
}

CoherentVector CoherentVector::operator-(const CoherentVector& other) const { return *this + (-1.0 * other); }

CoherentVector operator*(Complex a, const CoherentVector& v) {
  std::vector<CoherentVector::Term> t = v.terms_;
  for (auto& term : t) term.coefficient *= a;
  return CoherentVector(v.kernel_, std::move(t));
}

CoherentVector coherent_state(const Kernel& k, const Point& z) {
  (void)k(z, z);
  return CoherentVector(k, {{1.0, z}});
}

Complex inner(const CoherentVector& phi, const CoherentVector& psi) {
  if (!phi.kernel().same_as(psi.kernel()))
    throw KernelMismatchError("inner product of vectors of different kernels (" + phi.kernel().trace() + ", " +
                              psi.kernel().trace() + ")");
  Complex s = 0.0;
  for (const auto& a : phi.terms())
    for (const auto& b : psi.terms()) s += std::conj(a.coefficient) * b.coefficient * phi.kernel()(a.point, b.point);
  return s;
}

double norm_squared(const CoherentVector& psi) { return inner(psi, psi).real(); }

double norm(const CoherentVector& psi) { return std::sqrt(std::max(0.0, norm_squared(psi))); }

Complex evaluate_function(const CoherentVector& psi, const Point& z) {
  Complex s = 0.0;
  for (const auto& t : psi.terms()) s += t.coefficient * psi.kernel()(z, t.point);
  return s;
}

ParameterMap identity_parameter_map() {
  return [](std::span<const Complex> x) { return Point(std::vector<Complex>(x.begin(), x.end())); };
}

double default_step(std::span<const Complex> base) {
  double scale = 1.0;
  for (Complex c : base) scale = std::max(scale, std::abs(c));
  return 1e-4 * scale;
}

Stencil combine(const Stencil& s1, Complex a, const Stencil& s2, Complex b) {
  Stencil out;
  auto add = [&out](const StencilNode& n, Complex factor) {
    for (auto& existing : out) {
      if (existing.offset == n.offset) {
        existing.weight += factor * n.weight;
        return;
      }
    }
    out.push_back({factor * n.weight, n.offset});
  };
  for (const auto& n : s1) add(n, a);
  for (const auto& n : s2) add(n, b);
  return out;
}

namespace {

Stencil basic_central(std::size_t dim, std::size_t axis, int order, double h, Complex direction) {
  auto node = [&](Complex weight, double t) {
    std::vector<Complex> off(dim, 0.0);
    off[axis] = t * direction;
    return StencilNode{weight, std::move(off)};
  };
  if (order == 1) return {node(1.0 / (2.0 * h), h), node(-1.0 / (2.0 * h), -h)};
  return {node(1.0 / (h * h), h), node(-2.0 / (h * h), 0.0), node(1.0 / (h * h), -h)};
}

}  // namespace

Stencil central_difference(std::size_t dim, std::size_t axis, int order, double h, bool richardson,
                           Complex direction) {
  if (axis >= dim) throw DomainError("stencil axis out of range");
  if (order != 1 && order != 2) throw DomainError("central differences support derivative order 1 or 2");
  if (!std::isfinite(h) || h <= 0.0) throw DomainError("stencil step must be positive");
  if (!richardson) return basic_central(dim, axis, order, h, direction);
  return combine(basic_central(dim, axis, order, h / 2.0, direction), 4.0 / 3.0,
                 basic_central(dim, axis, order, h, direction), -1.0 / 3.0);
}

CoherentVector diff_state(const DiffStateSpec& spec, const Kernel& k) {
  if (!spec.u) throw DomainError("diff state needs a parameter map");
  if (spec.stencil.empty()) throw DomainError("diff state stencil must be nonempty");
  std::vector<CoherentVector::Term> terms;
  terms.reserve(spec.stencil.size());
  for (const StencilNode& n : spec.stencil) {
    if (n.offset.size() != spec.base.size()) throw DimensionError("stencil offset dimension differs from base");
    double r2 = 0.0;
    std::vector<Complex> x = spec.base;
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] += n.offset[i];
      r2 += std::norm(n.offset[i]);
    }
    if (std::sqrt(r2) > spec.domain_radius) throw DomainError("stencil offset outside the declared domain radius");
    Point p = spec.u(x);
    (void)k(p, p);
    terms.push_back({n.weight, std::move(p)});
  }
  return CoherentVector(k, std::move(terms));
}

Interpolant min_norm_interpolant(const Kernel& k, const Point& x, Complex alpha, const Tolerance& tol) {
  const double kxx = diagonal_value(k, x, tol);
  if (kxx <= tol.abs()) throw DomainError(k.trace() + ": K(x,x) vanishes, no interpolant exists");
  CoherentVector v(k, {{alpha / kxx, x}});
  return {std::move(v), std::norm(alpha) / kxx};
}

KreinVerdict krein_membership_probe(const Kernel& k, const PointFunction& psi_values, const PointSet& pts,
                                    double eps, const Tolerance& tol) {
  if (!std::isfinite(eps) || eps <= 0.0) throw DomainError("krein probe needs eps > 0");
  Matrix m = evaluation_matrix(k, pts, pts);
  Eigen::VectorXcd p(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) p(i) = psi_values(pts[i]);
  m -= eps * p * p.adjoint();
  return {is_psd(GramMatrix::from_entries(m), tol)};
}

Matrix eigenbasis_reconstruction(const GramMatrix& g, const Tolerance& tol) {
  if (g.size() == 0) return Matrix(0, 0);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(g.entries());
  if (solver.info() != Eigen::Success) throw EigenError("Hermitian eigensolver did not converge");
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const double bound = tol.bound(lambda.cwiseAbs().maxCoeff());
  if (lambda(0) < -bound)
    throw NotPositiveError("gram matrix is not positive semidefinite (lambda_min = " + std::to_string(lambda(0)) +
                           ")");
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = lambda.size() - 1; i >= 0; --i)
    if (lambda(i) > bound) keep.push_back(i);
  Matrix psi(g.entries().rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c)
    psi.col(static_cast<Eigen::Index>(c)) = std::sqrt(lambda(keep[c])) * solver.eigenvectors().col(keep[c]);
  return psi;
}

}  // namespace cohk
