#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cohk/format.hpp"
#include "cohk/zoo.hpp"

namespace cohk::testing {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

namespace {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Uniform in the annulus lo <= |x| <= hi.
Complex annulus(Rng& rng, double lo, double hi) {
  const double r = std::sqrt(uniform(rng, lo * lo, hi * hi));
  return std::polar(r, uniform(rng, -std::numbers::pi, std::numbers::pi));
}

double signed_real(Rng& rng, double lo, double hi) { return (coin(rng) ? 1.0 : -1.0) * uniform(rng, lo, hi); }

Complex draw(Rng& rng, Coord c) {
  switch (c) {
    case Coord::Complex: return annulus(rng, 0.2, 0.6);
    case Coord::Disk: return annulus(rng, 0.2, 0.9);
    case Coord::PosReal: return uniform(rng, 0.05, 0.9);
    case Coord::Real: return signed_real(rng, 0.2, 1.0);
    case Coord::Scalar: return annulus(rng, 0.5, 1.5);
  }
  return 0.0;
}

double hi_of(Coord c) {
  switch (c) {
    case Coord::Complex: return 0.6;
    case Coord::Disk: return 0.9;
    case Coord::PosReal: return 0.9;
    case Coord::Real: return 1.0;
    case Coord::Scalar: return 1.5;
  }
  return 1.0;
}

double lo_of(Coord c) {
  switch (c) {
    case Coord::Complex: return 0.2;
    case Coord::Disk: return 0.2;
    case Coord::PosReal: return 0.05;
    case Coord::Real: return 0.2;
    case Coord::Scalar: return 0.5;
  }
  return 0.0;
}

}  // namespace

Complex random_complex(Rng& rng, double radius) { return annulus(rng, 0.0, radius); }

PointSet sample(Rng& rng, const Carrier& carrier, std::size_t n, bool duplicates) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    if (duplicates && !pts.empty() && coin(rng, 0.15)) {
      pts.push_back(pts[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pts.size()) - 1))]);
      continue;
    }
    std::vector<Complex> c;
    for (const Coord k : carrier) c.push_back(draw(rng, k));
    pts.emplace_back(std::move(c));
  }
  return PointSet(std::move(pts));
}

std::vector<std::string> zoo_names() {
  return {"delta", "linear", "spin", "glauber", "klauder", "min", "invsum", "szego", "sinc", "schur_dbr"};
}

ZooCase zoo_case(Rng& rng, const std::string& name, std::size_t n) {
  const std::size_t dim = static_cast<std::size_t>(uniform_int(rng, 1, 3));
  if (name == "delta") return {zoo::delta(), sample(rng, Carrier(dim, Coord::Real), n)};
  if (name == "linear") return {zoo::linear(), sample(rng, Carrier(dim, Coord::Disk), n)};
  if (name == "spin") return {zoo::spin(uniform_int(rng, 0, 6)), sample(rng, Carrier(dim, Coord::Disk), n)};
  if (name == "glauber")
    return {zoo::glauber(uniform(rng, 0.2, 3.0)), sample(rng, Carrier(dim, Coord::Scalar), n)};
  if (name == "klauder") return {zoo::klauder(), sample(rng, Carrier(dim, Coord::Disk), n)};
  if (name == "min") return {zoo::min_kernel(), sample(rng, {Coord::PosReal}, n)};
  if (name == "invsum") return {zoo::invsum(), sample(rng, {Coord::PosReal}, n)};
  if (name == "szego") return {zoo::szego(), sample(rng, {Coord::Disk}, n)};
  if (name == "sinc") return {zoo::sinc(), sample(rng, {Coord::Scalar}, n)};
  if (name == "schur_dbr") {
    // s = a * (z - b) / (1 - conj(b) z) maps the disk into itself for |a| <= 1, |b| < 1.
    const Complex a = random_complex(rng, 1.0);
    const Complex b = random_complex(rng, 0.8);
    return {zoo::schur_dbr([a, b](Complex z) { return a * (z - b) / (1.0 - std::conj(b) * z); }, "blaschke"),
            sample(rng, {Coord::Disk}, n)};
  }
  throw std::invalid_argument("unknown zoo name " + name);
}

CoherenceResult coherence_suite(const Kernel& k, const PointSet& pts, double tol) {
  const Matrix g = evaluation_matrix(k, pts, pts);
  const auto n = g.rows();
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  auto fail = [](std::string msg) { return CoherenceResult{false, std::move(msg)}; };

  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index l = 0; l < n; ++l)
      if (std::abs(g(j, l) - std::conj(g(l, j))) > tol * scale)
        return fail("Hermiticity violated at (" + std::to_string(j) + "," + std::to_string(l) + ")");
  for (Eigen::Index j = 0; j < n; ++j)
    if (g(j, j).real() < -tol * scale || std::abs(g(j, j).imag()) > tol * scale)
      return fail("diagonal not real nonnegative at " + std::to_string(j));

  const Matrix h = (g + g.adjoint()) / 2.0;
  const Eigen::VectorXd lambda = hermitian_eigenvalues(h);
  const double spectral = lambda.cwiseAbs().maxCoeff();
  if (lambda(0) < -tol * spectral) return fail("gram not psd: lambda_min = " + format_number(lambda(0)));

  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = 0; l < n; ++l) {
      const double lhs = std::norm(g(j, l));
      const double rhs = g(j, j).real() * g(l, l).real();
      if (lhs > rhs + tol * scale * scale)
        return fail("Cauchy-Schwarz violated at (" + std::to_string(j) + "," + std::to_string(l) + ")");
    }
  }

  Eigen::MatrixXd d(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index l = 0; l < n; ++l)
      d(j, l) = std::sqrt(std::max(0.0, g(j, j).real() + g(l, l).real() - 2.0 * g(j, l).real()));
  const double dtol = tol * std::sqrt(scale);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (Eigen::Index c = 0; c < n; ++c)
        if (d(a, c) > d(a, b) + d(b, c) + dtol)
          return fail("triangle inequality violated at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                      std::to_string(c) + ")");
  return {};
}

namespace {

/// Expression text with an upper bound on |K| and a lower bound on K(z,z)
/// over the carrier.
struct Gen {
  std::string text;
  double upper;
  double diag_lower;
};

constexpr double bound_cap = 1e6;

std::string num(double x) { return format_number(x); }

Gen leaf(Rng& rng, const Carrier& c) {
  double r2_hi = 0.0, r2_lo = 0.0;
  bool real_only = true;
  for (const Coord k : c) {
    r2_hi += hi_of(k) * hi_of(k);
    r2_lo += lo_of(k) * lo_of(k);
    real_only = real_only && (k == Coord::Real || k == Coord::PosReal);
  }
  std::vector<int> options{0, 1, 2, 3};
  if (real_only) options.push_back(4);
  if (c.size() == 1) {
    options.push_back(5);
    if (c[0] == Coord::PosReal) options.insert(options.end(), {6, 7, 8});
    if (c[0] == Coord::Disk) options.push_back(8);
  }
  switch (options[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(options.size()) - 1))]) {
    case 0: return {"linear", r2_hi, r2_lo};
    case 1: {
      const int two_j = uniform_int(rng, 0, 3);
      return {"spin(" + std::to_string(two_j) + ")", std::pow(r2_hi, two_j), std::pow(r2_lo, two_j)};
    }
    case 2: return {"glauber(" + num(uniform(rng, 0.3, 2.0)) + ")", 1.0, 1.0};
    case 3: {
      double rest = 0.0;
      for (std::size_t i = 1; i < c.size(); ++i) rest += hi_of(c[i]) * hi_of(c[i]);
      return {"klauder", std::exp(2.0 * hi_of(c[0]) + rest), std::exp(-2.0 * hi_of(c[0]))};
    }
    case 4: return {"delta", 1.0, 1.0};
    case 5: {
      const double m = 2.0 * hi_of(c[0]);
      return {"sinc", std::sinh(m) / m, 1.0};
    }
    case 6: return {"min", 0.9, 0.05};
    case 7: return {"invsum", 10.0, 1.0 / 1.8};
    default: return {"szego", 1.0 / (1.0 - 0.81), 1.0};
  }
}

Gen node(Rng& rng, const Carrier& c, int depth);

Gen gen(Rng& rng, const Carrier& c, int depth) {
  if (depth <= 1 || coin(rng, 0.25)) return leaf(rng, c);
  for (int attempt = 0; attempt < 20; ++attempt) {
    Gen g = node(rng, c, depth);
    if (g.upper <= bound_cap * bound_cap && std::isfinite(g.upper)) return g;
  }
  return leaf(rng, c);
}

Gen node(Rng& rng, const Carrier& c, int depth) {
  const bool can_tensor = c.size() >= 2;
  const bool can_pext = c.size() >= 2 && c[0] == Coord::Scalar;
  const int kind = uniform_int(rng, 0, 10);
  if (kind == 7 && can_tensor) {
    const std::size_t split = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<int>(c.size()) - 1));
    const Gen a = gen(rng, Carrier(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(split)), depth - 1);
    const Gen b = gen(rng, Carrier(c.begin() + static_cast<std::ptrdiff_t>(split), c.end()), depth - 1);
    return {"tensor(" + a.text + ", " + b.text + ", " + std::to_string(split) + ")", a.upper * b.upper,
            a.diag_lower * b.diag_lower};
  }
  if (kind == 8 && can_pext) {
    const Gen a = gen(rng, Carrier(c.begin() + 1, c.end()), depth - 1);
    int degree = uniform_int(rng, 1, 2);
    if (coin(rng)) degree = -degree;
    const double f = std::pow(2.0, 2 * std::abs(degree));
    return {"pext(" + a.text + ", " + std::to_string(degree) + ")", a.upper * f, a.diag_lower / f};
  }
  const Gen a = gen(rng, c, depth - 1);
  switch (kind) {
    case 0:
      if (a.diag_lower < 1e-6 || a.upper > bound_cap) return {"", INFINITY, 0.0};
      return {"normalize(" + a.text + ")", 1.0, 1.0};
    case 1: {
      const double s = signed_real(rng, 0.5, 2.0);
      return {"scale_const(" + num(s) + ", " + a.text + ")", s * s * a.upper, s * s * a.diag_lower};
    }
    case 2: {
      std::string t = "sum(";
      double up = 0.0, lo = 0.0;
      const int pairs = uniform_int(rng, 1, 3);
      for (int i = 0; i < pairs; ++i) {
        const Gen e = i == 0 ? a : gen(rng, c, depth - 1);
        const double w = uniform(rng, 0.1, 2.0);
        t += (i ? ", " : "") + num(w) + ", " + e.text;
        up += w * e.upper;
        lo += w * e.diag_lower;
      }
      return {t + ")", up, lo};
    }
    case 3: {
      const Gen b = gen(rng, c, depth - 1);
      return {"prod(" + a.text + ", " + b.text + ")", a.upper * b.upper, a.diag_lower * b.diag_lower};
    }
    case 4: {
      const int n = uniform_int(rng, 1, 3);
      if (a.upper > bound_cap) return {"", INFINITY, 0.0};
      return {"pow(" + a.text + ", " + std::to_string(n) + ")", std::pow(a.upper, n), std::pow(a.diag_lower, n)};
    }
    case 5: {
      const double beta = uniform(rng, 0.1, 1.0) * std::min(1.0, 3.0 / a.upper);
      return {"expk(" + num(beta) + ", " + a.text + ")", std::exp(beta * a.upper), 1.0};
    }
    case 6: {
      const double cc = a.upper * uniform(rng, 1.5, 3.0);
      return {"resolvent(" + num(cc) + ", " + a.text + ")", 1.0 / (cc - a.upper), 1.0 / cc};
    }
    case 9: return {"conj(" + a.text + ")", a.upper, a.diag_lower};
    default: return {"re(" + a.text + ")", a.upper, a.diag_lower};
  }
}

}  // namespace

RandomExpr random_expression(Rng& rng, int max_depth) {
  Carrier c;
  const int len = uniform_int(rng, 1, 3);
  const Coord kinds[] = {Coord::Complex, Coord::Disk, Coord::PosReal, Coord::Real};
  for (int i = 0; i < len; ++i) c.push_back(kinds[uniform_int(rng, 0, 3)]);
  if (len >= 2 && coin(rng, 0.3)) c[0] = Coord::Scalar;
  return {gen(rng, c, max_depth).text, c};
}

namespace {

std::string wide_number(Rng& rng, bool positive) {
  double x = 0.0;
  switch (uniform_int(rng, 0, 3)) {
    case 0: x = uniform_int(rng, 1, 9); break;
    case 1: x = uniform(rng, 0.0, 10.0); break;
    case 2: x = uniform(rng, 1.0, 10.0) * std::pow(10.0, uniform_int(rng, -300, 300)); break;
    default: x = std::ldexp(uniform(rng, 0.5, 1.0), uniform_int(rng, -60, 60)); break;
  }
  if (positive && x == 0.0) x = 1.0;
  const std::string s = num(x);
  return !positive && coin(rng) ? (coin(rng) ? "-" : "- ") + s : s;
}

std::string sep(Rng& rng) {
  static const char* seps[] = {", ", ",", " , ", ",\n  ", "\t,\r\n"};
  return seps[uniform_int(rng, 0, 4)];
}

}  // namespace

std::string random_syntax(Rng& rng, int max_depth) {
  if (max_depth <= 1 || coin(rng, 0.3)) {
    static const char* bare[] = {"delta", "linear", "klauder", "min", "invsum", "szego", "sinc"};
    const int pick = uniform_int(rng, 0, 8);
    if (pick == 7) return "spin(" + std::to_string(uniform_int(rng, 0, 4096)) + ")";
    if (pick == 8) return "glauber (" + wide_number(rng, true) + ")";
    return bare[pick];
  }
  const int d = max_depth - 1;
  auto sub = [&] { return random_syntax(rng, d); };
  auto integer = [&](int lo, int hi) { return std::to_string(uniform_int(rng, lo, hi)); };
  switch (uniform_int(rng, 0, 10)) {
    case 0: return "normalize(" + sub() + ")";
    case 1: return "scale_const(" + wide_number(rng, false) + sep(rng) + sub() + ")";
    case 2: {
      std::string t = "sum(";
      const int pairs = uniform_int(rng, 1, 4);
      for (int i = 0; i < pairs; ++i) t += (i ? sep(rng) : "") + wide_number(rng, true) + sep(rng) + sub();
      return t + ")";
    }
    case 3: return "prod(" + sub() + sep(rng) + sub() + ")";
    case 4: return "tensor(" + sub() + sep(rng) + sub() + sep(rng) + integer(1, 4096) + ")";
    case 5: return "pow(" + sub() + sep(rng) + integer(1, 1024) + ")";
    case 6: return "expk(" + wide_number(rng, true) + sep(rng) + sub() + ")";
    case 7: return "resolvent(" + wide_number(rng, true) + sep(rng) + sub() + ")";
    case 8: return "conj( " + sub() + " )";
    case 9: return "re(" + sub() + ")";
    default: {
      const int deg = uniform_int(rng, 1, 1024);
      return "pext(" + sub() + sep(rng) + (coin(rng) ? "-" : "") + std::to_string(deg) + ")";
    }
  }
}

}  // namespace cohk::testing
