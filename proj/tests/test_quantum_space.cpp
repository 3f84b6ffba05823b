#include <doctest.h>

#include <cmath>

#include "cohk/errors.hpp"
#include "cohk/quantum_space.hpp"
#include "cohk/zoo.hpp"
#include "support.hpp"

using namespace cohk;

TEST_CASE("inner product is sesquilinear") {
  const Kernel k = zoo::linear();
  const Point a({Complex(1.0, 1.0)});
  const Point b({2.0});
  const CoherentVector u(k, {{Complex(0.0, 1.0), a}});
  const CoherentVector v(k, {{3.0, b}});
  // conj(i) * 3 * conj(1 + i) * 2 = -i * 3 * (1 - i) * 2 = -6 - 6i
  CHECK(std::abs(inner(u, v) - Complex(-6.0, -6.0)) < 1e-15);
  CHECK(std::abs(inner(v, u) - std::conj(inner(u, v))) < 1e-15);
  CHECK(std::abs(inner(Complex(2.0, -1.0) * u, v) - std::conj(Complex(2.0, -1.0)) * inner(u, v)) < 1e-14);
  CHECK(norm_squared(u - u) == 0.0);
  CHECK((u + v).terms().size() == 2);
}

TEST_CASE("vectors of different kernels do not mix") {
  const CoherentVector u(zoo::linear(), {{1.0, Point({1.0})}});
  const CoherentVector v(zoo::linear(), {{1.0, Point({1.0})}});
  CHECK_THROWS_AS(u + v, KernelMismatchError);
  CHECK_THROWS_AS(inner(u, v), KernelMismatchError);
  const Kernel k = zoo::linear();
  CHECK_NOTHROW(inner(CoherentVector(k, {{1.0, Point({1.0})}}), CoherentVector(k, {{1.0, Point({2.0})}})));
  CHECK_THROWS_AS(CoherentVector(k, {{Complex(NAN, 0.0), Point({1.0})}}), DomainError);
}

TEST_CASE("reproducing property and distance") {
  const Kernel k = zoo::glauber(0.8);
  const Point z({Complex(0.1, -0.4)});
  const Point w({Complex(0.5, 0.2)});
  CHECK(evaluate_function(coherent_state(k, w), z) == k(z, w));
  CHECK(std::abs(norm(coherent_state(k, z) - coherent_state(k, w)) - distance(k, z, w)) < 1e-12);
  CHECK_THROWS_AS(coherent_state(zoo::szego(), Point({2.0})), CarrierError);
}

TEST_CASE("central difference stencils") {
  const Stencil s1 = central_difference(1, 0, 1, 0.1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0].weight == Complex(5.0));
  const Stencil s2 = central_difference(2, 1, 2, 0.5);
  REQUIRE(s2.size() == 3);
  CHECK(s2[1].weight == Complex(-8.0));
  CHECK(s2[0].offset[0] == Complex(0.0));
  CHECK(s2[0].offset[1] == Complex(0.5));
  // Richardson: 4/3 D(h/2) - 1/3 D(h), five distinct nodes for order 2.
  CHECK(central_difference(1, 0, 2, 0.2, true).size() == 5);
  CHECK(central_difference(1, 0, 1, 0.2, true).size() == 4);
  CHECK_THROWS_AS(central_difference(1, 1, 1, 0.1), DomainError);
  CHECK_THROWS_AS(central_difference(1, 0, 3, 0.1), DomainError);
  CHECK_THROWS_AS(central_difference(1, 0, 1, 0.0), DomainError);
  CHECK(default_step(std::vector<Complex>{Complex(30.0, 40.0)}) == doctest::Approx(5e-3));
}

TEST_CASE("combined stencils merge shared offsets") {
  const Stencil a = central_difference(1, 0, 2, 0.1);
  const Stencil c = combine(a, 1.0, a, -1.0);
  REQUIRE(c.size() == 3);
  for (const StencilNode& n : c) CHECK(n.weight == Complex(0.0));
}

TEST_CASE("differential states match closed-form derivatives of glauber(1)") {
  // K(s,t) = exp(st - s^2/2 - t^2/2) on the real line: derivatives at any
  // real base are d_s d_t K = 1, d_s^2 d_t^2 K = 3, d_s d_t^2 K = 0,
  // d_t^2 K = -1 (symbolic reference).
  const Kernel k = zoo::glauber(1.0);
  const std::vector<Complex> base{0.3};
  const double h = 1e-4;
  const CoherentVector d0(k, {{1.0, Point({0.3})}});
  const CoherentVector d1 = diff_state({identity_parameter_map(), central_difference(1, 0, 1, h), base}, k);
  const CoherentVector d2 = diff_state({identity_parameter_map(), central_difference(1, 0, 2, h), base}, k);
  CHECK(std::abs(inner(d1, d1) - 1.0) < 1e-6);
  CHECK(std::abs(inner(d0, d1)) < 1e-6);
  CHECK(std::abs(inner(d0, d2) + 1.0) < 1e-6);

  // <z|psi> for z = 0.1 + 0.2i, symbolic reference.
  const Point z({Complex(0.1, 0.2)});
  CHECK(std::abs(evaluate_function(d1, z) - Complex(-0.20333466421612057, -0.18028955055423583)) < 1e-6);
  CHECK(std::abs(evaluate_function(d2, z) - Complex(-0.95445151419351407, 0.13433762710878313)) < 1e-6);

  // Second-by-second inners need a larger step with extrapolation.
  const CoherentVector r2 =
      diff_state({identity_parameter_map(), central_difference(1, 0, 2, 1e-2, true), base}, k);
  CHECK(std::abs(inner(r2, r2) - 3.0) < 1e-6);
  const CoherentVector r1 =
      diff_state({identity_parameter_map(), central_difference(1, 0, 1, 1e-2, true), base}, k);
  CHECK(std::abs(inner(r1, r2)) < 1e-6);
}

TEST_CASE("diff states respect the domain radius") {
  DiffStateSpec spec{identity_parameter_map(), central_difference(1, 0, 1, 0.5), {0.0}, 0.1};
  CHECK_THROWS_AS(diff_state(spec, zoo::linear()), DomainError);
  spec.domain_radius = 1.0;
  CHECK_NOTHROW(diff_state(spec, zoo::linear()));
  spec.base = {0.0, 0.0};
  CHECK_THROWS_AS(diff_state(spec, zoo::linear()), DimensionError);
}

TEST_CASE("minimum-norm interpolant") {
  const Kernel k = zoo::szego();
  const Point x({0.5});
  const Interpolant it = min_norm_interpolant(k, x, Complex(2.0, 1.0));
  CHECK(std::abs(evaluate_function(it.vector, x) - Complex(2.0, 1.0)) < 1e-14);
  // |alpha|^2 / K(x,x) = 5 / (4/3)
  CHECK(it.norm_squared == doctest::Approx(3.75));
  CHECK(norm_squared(it.vector) == doctest::Approx(3.75));
  CHECK_THROWS_AS(min_norm_interpolant(zoo::linear(), Point({0.0}), 1.0), DomainError);
}

TEST_CASE("krein probe threshold for a coherent state") {
  // psi = |a>: K - eps psi psi^* stays psd iff eps <= 1 / K(a,a).
  const Kernel k = zoo::linear();
  const Point a({Complex(0.6, 0.8)});
  const PointSet pts{Point({1.0}), Point({Complex(0.0, 1.0)}), a};
  const PointFunction psi = [k, a](const Point& z) { return k(z, a); };
  CHECK(krein_membership_probe(k, psi, pts, 0.9).verdict.psd);
  CHECK_FALSE(krein_membership_probe(k, psi, pts, 1.1).verdict.psd);
  CHECK_THROWS_AS(krein_membership_probe(k, psi, pts, 0.0), DomainError);
  static_assert(KreinVerdict::sample_necessary_only);
}

TEST_CASE("eigenbasis reconstruction recovers the gram") {
  testing::Rng rng(3);
  const PointSet pts = testing::sample(rng, {testing::Coord::Complex, testing::Coord::Complex}, 6);
  const GramMatrix g = gram(zoo::linear(), pts);
  const Matrix psi = eigenbasis_reconstruction(g);
  CHECK(psi.cols() == 2);
  CHECK((psi * psi.adjoint() - g.entries()).cwiseAbs().maxCoeff() < 1e-12);
  Matrix bad(2, 2);
  bad << 1, 2, 2, 1;
  CHECK_THROWS_AS(eigenbasis_reconstruction(GramMatrix::from_entries(bad)), NotPositiveError);
}
