#include <doctest.h>

#include <cmath>
#include <limits>

#include "cohk/errors.hpp"
#include "cohk/kernel.hpp"
#include "cohk/log_kernel.hpp"
#include "cohk/zoo.hpp"

using namespace cohk;

namespace {

Matrix real_matrix(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

}  // namespace

TEST_CASE("points reject empty and non-finite coordinates") {
  CHECK_THROWS_AS(Point(std::vector<Complex>{}), DimensionError);
  CHECK_THROWS_AS(Point({Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)}), DomainError);
  CHECK_THROWS_AS(Point({Complex(0.0, std::numeric_limits<double>::infinity())}), DomainError);
  const Point p({Complex(1.0, 2.0), Complex(-3.0, 0.5)}, "a");
  CHECK(p.dimension() == 2);
  CHECK(p.tag() == "a");
  CHECK(p.conjugated()[0] == Complex(1.0, -2.0));
  CHECK(p.scaled(Complex(0.0, 1.0))[1] == Complex(-0.5, -3.0));
  CHECK_FALSE(p.is_real());
  CHECK(Point({2.0, -1.0}).is_real());
}

TEST_CASE("dot is antilinear in the first slot") {
  const Point z({Complex(0.0, 1.0)});
  const Point w({Complex(2.0, 0.0)});
  CHECK(dot(z, w) == Complex(0.0, -2.0));
  CHECK(dot(w, z) == Complex(0.0, 2.0));
  CHECK(squared_norm(Point({Complex(3.0, 4.0)})) == doctest::Approx(25.0));
}

TEST_CASE("point sets need equal dimensions") {
  CHECK_THROWS_AS(PointSet(std::vector<Point>{}), DomainError);
  CHECK_THROWS_AS((PointSet{Point({1.0}), Point({1.0, 2.0})}), DimensionError);
  const PointSet s{Point({1.0}), Point({2.0}), Point({3.0})};
  const PointSet sub = s.subset({2, 0});
  CHECK(sub.size() == 2);
  CHECK(sub[0][0] == Complex(3.0));
}

TEST_CASE("tolerance validation and bound") {
  CHECK_THROWS_AS(Tolerance(-1.0, 1e-12), DomainError);
  CHECK_THROWS_AS(Tolerance(1e-9, std::numeric_limits<double>::quiet_NaN()), DomainError);
  const Tolerance t;
  CHECK(t.bound(0.5) == doctest::Approx(1e-9 + 1e-12));
  CHECK(t.bound(100.0) == doctest::Approx(1e-7 + 1e-12));
}

TEST_CASE("kernel evaluation checks dimensions") {
  const Kernel k = zoo::linear();
  CHECK_THROWS_AS(k(Point({1.0}), Point({1.0, 2.0})), DimensionError);
  CHECK_THROWS_AS(zoo::szego()(Point({0.1, 0.1}), Point({0.1, 0.1})), DimensionError);
}

TEST_CASE("gram hermitizes and flags gross asymmetry") {
  const Kernel skew("skew", [](const Point& z, const Point& w) { return Complex(z[0].real() - 2.0 * w[0].real()); });
  const GramMatrix g = gram(skew, PointSet{Point({1.0}), Point({2.0})});
  // raw [[-1, -3], [0, -2]] -> hermitized [[-1, -1.5], [-1.5, -2]]
  CHECK(g(0, 1) == Complex(-1.5));
  CHECK(g.hermitization_correction() == doctest::Approx(1.5));
  CHECK(g.numerically_non_hermitian());
  const GramMatrix h = gram(zoo::linear(), PointSet{Point({Complex(1.0, 1.0)}), Point({2.0})});
  CHECK(h.hermitization_correction() == 0.0);
  CHECK_FALSE(h.numerically_non_hermitian());
  CHECK(h.kernel().has_value());
}

TEST_CASE("evaluation errors carry the entry") {
  const PointSet pts{Point({0.5}), Point({-0.5})};
  try {
    (void)gram(zoo::min_kernel(), pts);
    FAIL("expected an error");
  } catch (const EvaluationError& e) {
    CHECK(e.row() == 0);
    CHECK(e.col() == 1);
    CHECK(e.kind() == "carrier");
  }
}

TEST_CASE("psd verdict on a hand-computed indefinite matrix") {
  const PositivityVerdict v = is_psd(GramMatrix::from_entries(real_matrix({{1, 2}, {2, 1}})));
  CHECK_FALSE(v.psd);
  CHECK(v.min_eigenvalue == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(v.spectral_norm == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(v.threshold == doctest::Approx(3e-9 + 1e-12));

  const PositivityVerdict ok = is_psd(GramMatrix::from_entries(real_matrix({{2, 1}, {1, 2}})));
  CHECK(ok.psd);
  CHECK(ok.min_eigenvalue == doctest::Approx(1.0));

  // Rank-one with a rounding-level negative tail stays psd.
  CHECK(is_psd(GramMatrix::from_entries(real_matrix({{1, 1}, {1, 1 - 1e-13}}))).psd);
}

TEST_CASE("empty forms are psd with lambda_min = +inf") {
  const PositivityVerdict v = is_conditionally_psd(GramMatrix::from_entries(real_matrix({{5}})));
  CHECK(v.psd);
  CHECK(std::isinf(v.min_eigenvalue));
}

TEST_CASE("sum-zero basis is orthonormal and annihilates constants") {
  for (std::size_t n : {2u, 3u, 7u}) {
    const Matrix b = sum_zero_basis(n);
    CHECK(b.cols() == static_cast<Eigen::Index>(n - 1));
    CHECK((b.adjoint() * b - Matrix::Identity(b.cols(), b.cols())).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((Eigen::RowVectorXcd::Ones(static_cast<Eigen::Index>(n)) * b).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("conditional psd of negated squared distances") {
  // -|x_j - x_k|^2 on the line is conditionally psd but not psd.
  const Matrix g = real_matrix({{0, -1, -9}, {-1, 0, -4}, {-9, -4, 0}});
  CHECK(is_conditionally_psd(GramMatrix::from_entries(g)).psd);
  CHECK_FALSE(is_psd(GramMatrix::from_entries(g)).psd);
  CHECK_FALSE(is_conditionally_psd(GramMatrix::from_entries(-g)).psd);
}

TEST_CASE("schoenberg transform matrix form by hand") {
  const Matrix g = real_matrix({{0, -1, -9}, {-1, 0, -4}, {-9, -4, 0}});
  const Matrix p = schoenberg_transform(g, 0);
  // P_jk = 2 x_j x_k for points x = (0, 1, 3).
  const Matrix expected = real_matrix({{0, 0, 0}, {0, 2, 6}, {0, 6, 18}});
  CHECK((p - expected).cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(schoenberg_transform(g, 3), DomainError);
}

TEST_CASE("diagonal validation, length, distance, angle") {
  const Kernel k = zoo::linear();
  const Point z({Complex(3.0, 4.0)});
  const Point w({Complex(0.0, 5.0)});
  CHECK(length(k, z) == doctest::Approx(5.0));
  // d^2 = 25 + 25 - 2 Re(conj(3+4i) 5i) = 50 - 2 * 20 = 10
  CHECK(distance(k, z, w) == doctest::Approx(std::sqrt(10.0)));
  // |K| / (n n) = 25 / 25 = 1 -> angle 0
  CHECK(angle(k, z, w) == doctest::Approx(0.0).epsilon(1e-7));
  CHECK(angle(k, Point({1.0, 0.0}), Point({0.0, 1.0})) == doctest::Approx(std::acos(0.0)));
  CHECK_THROWS_AS(angle(k, Point({0.0}), z), DomainError);

  const Kernel bad("bad", [](const Point&, const Point&) { return Complex(-1.0); });
  CHECK_THROWS_AS(diagonal_value(bad, z), NonCoherentError);
  const Kernel cz("complex_diag", [](const Point&, const Point&) { return Complex(1.0, 0.5); });
  CHECK_THROWS_AS(length(cz, z), NonCoherentError);
  const Kernel big("big", [](const Point& a, const Point& b) { return a == b ? Complex(1.0) : Complex(2.0); });
  CHECK_THROWS_AS(angle(big, Point({1.0}), Point({2.0})), NonCoherentError);
}

TEST_CASE("distance is clamped at zero") {
  const Kernel k = zoo::glauber(1.0);
  const Point z({Complex(0.3, -0.2)});
  CHECK(distance(k, z, z) == 0.0);
}

TEST_CASE("morphism check detects isometries and non-isometries") {
  const PointSet pts{Point({Complex(0.1, 0.2)}), Point({Complex(-0.3, 0.1)}), Point({0.4})};
  const Complex phase = std::polar(1.0, 0.7);
  const auto rotate = [phase](const Point& z) { return z.scaled(phase); };
  CHECK(check_morphism(zoo::linear(), zoo::linear(), rotate, pts).is_morphism);
  const auto stretch = [](const Point& z) { return z.scaled(2.0); };
  const MorphismReport r = check_morphism(zoo::linear(), zoo::linear(), stretch, pts);
  CHECK_FALSE(r.is_morphism);
  CHECK(r.max_deviation > r.threshold);
}

TEST_CASE("log values") {
  CHECK(LogValue::neg_inf().exp_scaled(3.0) == Complex(0.0));
  CHECK_THROWS_AS((void)LogValue::neg_inf().value(), DomainError);
  CHECK(std::abs(LogValue(Complex(0.0, std::acos(-1.0))).exp_scaled(1.0) - Complex(-1.0)) < 1e-15);
  CHECK_THROWS_AS((void)LogValue(800.0).exp_scaled(1.0), OverflowError);
  CHECK(LogValue(800.0).exp_scaled(0.5).real() == doctest::Approx(std::exp(400.0)));

  const ExtendedLogKernel f = ExtendedLogKernel::log_of(zoo::delta());
  CHECK(f(Point({1.0}), Point({2.0})).is_neg_inf());
  CHECK(f(Point({1.0}), Point({1.0})).value() == Complex(0.0));
  CHECK(f.trace() == "log(delta)");
}
