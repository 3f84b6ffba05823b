#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "cohk/combinators.hpp"
#include "cohk/kernel.hpp"

namespace cohk {

/// Formal finite combination sum_k c_k |z_k> in the quantum space of a
/// kernel. Terms are kept as given: repeated points are not merged.
class CoherentVector {
 public:
  struct Term {
    Complex coefficient;
    Point point;
  };

  explicit CoherentVector(Kernel k, std::vector<Term> terms = {});

  const Kernel& kernel() const noexcept { return kernel_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }

  /// Term concatenation; KernelMismatchError unless both share the kernel.
  CoherentVector operator+(const CoherentVector& other) const;
  CoherentVector operator-(const CoherentVector& other) const;
  friend CoherentVector operator*(Complex a, const CoherentVector& v);

 private:
  Kernel kernel_;
  std::vector<Term> terms_;
};

/// |z>, validated by evaluating K(z,z).
CoherentVector coherent_state(const Kernel& k, const Point& z);

/// sum_{j,k} conj(c_j) d_k K(z_j, w_k).
Complex inner(const CoherentVector& phi, const CoherentVector& psi);
/// Re <psi, psi> (may be slightly negative from rounding).
double norm_squared(const CoherentVector& psi);
double norm(const CoherentVector& psi);

/// psi(z) = <z|psi> = sum_k c_k K(z, z_k).
Complex evaluate_function(const CoherentVector& psi, const Point& z);

/// Finite-difference stencil over a parameter space X ⊂ C^d: the operator
/// f -> sum_i weight_i f(x + offset_i).
struct StencilNode {
  Complex weight;
  std::vector<Complex> offset;
};
using Stencil = std::vector<StencilNode>;

using ParameterMap = std::function<Point(std::span<const Complex>)>;

/// Parameter map x -> Point(x).
ParameterMap identity_parameter_map();

struct DiffStateSpec {
  ParameterMap u;
  Stencil stencil;
  std::vector<Complex> base;
  double domain_radius = std::numeric_limits<double>::infinity();
};

/// Step 1e-4 scaled by max(1, max_i |x_i|).
double default_step(std::span<const Complex> base);

/// Central difference for d/dt f(x + t e_axis * direction) at t = 0 (order 1)
/// or d^2/dt^2 (order 2), step h. With `richardson`, one extrapolation level
/// (4 D(h/2) - D(h)) / 3 lifts the truncation error from O(h^2) to O(h^4).
Stencil central_difference(std::size_t dim, std::size_t axis, int order, double h, bool richardson = false,
                           Complex direction = 1.0);

/// Linear combination a s1 + b s2 with identical offsets merged.
Stencil combine(const Stencil& s1, Complex a, const Stencil& s2, Complex b);

/// sum_i weight_i |u(x + offset_i)>. Its function values approximate
/// A(x) K(z, u(x)) for the differential operator A the stencil discretizes.
CoherentVector diff_state(const DiffStateSpec& spec, const Kernel& k);

struct Interpolant {
  CoherentVector vector;
  double norm_squared;
};

/// Minimum-norm psi with psi(x) = alpha: (alpha / K(x,x)) |x>, norm^2
/// |alpha|^2 / K(x,x). DomainError when K(x,x) is within tolerance of 0.
Interpolant min_norm_interpolant(const Kernel& k, const Point& x, Complex alpha, const Tolerance& tol = {});

struct KreinVerdict {
  PositivityVerdict verdict;
  /// psd on a sample is necessary, never sufficient, for membership with
  /// ||psi||^2 <= 1/eps.
  static constexpr bool sample_necessary_only = true;
};

/// psd test of the gram of K(z,w) - eps psi(z) conj(psi(w)) on the sample.
KreinVerdict krein_membership_probe(const Kernel& k, const PointFunction& psi_values, const PointSet& pts,
                                    double eps, const Tolerance& tol = {});

/// Columns sqrt(lambda_a) v_a over eigenvalues above the tolerance bound,
/// descending, so that Psi Psi^* reconstructs g. NotPositiveError when an
/// eigenvalue is below -bound.
Matrix eigenbasis_reconstruction(const GramMatrix& g, const Tolerance& tol = {});

}  // namespace cohk
