#pragma once

#include <random>
#include <string>
#include <vector>

#include "cohk/kernel.hpp"

namespace cohk::testing {

using Rng = std::mt19937_64;

/// Uniform in the closed disk of the given radius.
Complex random_complex(Rng& rng, double radius);
double uniform(Rng& rng, double lo, double hi);

/// Coordinate classes a carrier is built from.
enum class Coord {
  Complex,   // |x| <= 0.6
  Disk,      // |x| <= 0.9
  PosReal,   // real in [0.05, 0.9]
  Real,      // real in [-1, 1]
  Scalar,    // 0.5 <= |x| <= 1.5 (projective scalar slot)
};
using Carrier = std::vector<Coord>;

/// `n` points drawn from the carrier; with `duplicates` some points repeat
/// earlier ones exactly.
PointSet sample(Rng& rng, const Carrier& carrier, std::size_t n, bool duplicates = true);

/// A zoo kernel with a random admissible parameter choice and sample.
struct ZooCase {
  Kernel kernel;
  PointSet points;
};
ZooCase zoo_case(Rng& rng, const std::string& name, std::size_t n);

/// The ten zoo entries including schur_dbr.
std::vector<std::string> zoo_names();

struct CoherenceResult {
  bool ok = true;
  std::string failure;
};

/// Hermiticity, diagonal nonnegativity, gram psd (lambda_min >=
/// -tol ||G||_2), Cauchy-Schwarz and the triangle inequality, all at `tol`.
CoherenceResult coherence_suite(const Kernel& k, const PointSet& pts, double tol = 1e-9);

/// Random expression valid on a random carrier. `max_depth` >= 1.
struct RandomExpr {
  std::string text;
  Carrier carrier;
};
RandomExpr random_expression(Rng& rng, int max_depth);

/// Random text covering every production with parse-valid arguments but
/// no carrier discipline; numbers span many magnitudes.
std::string random_syntax(Rng& rng, int max_depth);

}  // namespace cohk::testing
