#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cohk/kernel.hpp"
#include "cohk/quantum_space.hpp"

/// JSON file formats. Complex scalars are [re, im] pairs; a bare number is
/// accepted wherever a complex scalar is expected and means im = 0.
///
/// Point set:    {"dimension": d, "points": [[z_1, ..., z_d], ...], "tags": ["a", ...]}
/// Matrix:       {"matrix": [[x_11, x_12, ...], ...]}
/// Vectors:      {"vectors": [{"terms": [{"coef": c, "point": [z_1, ...]}, ...]}, ...]}
/// Stencils:     {"base": [x_1, ...], "domain_radius": r,
///                "states": [{"central": {"axis": i, "order": 1|2, "h": h,
///                                        "richardson": b, "direction": c}},
///                           {"nodes": [{"weight": c, "offset": [x_1, ...]}, ...]}, ...]}
///
/// Every malformed input raises InputError naming the offending field.
namespace cohk::io {

PointSet parse_point_set(std::string_view text);
std::string write_point_set(const PointSet& pts);

Matrix parse_matrix(std::string_view text);

/// Coefficients and points of each vector; the kernel is attached later.
struct VectorLiteral {
  std::vector<CoherentVector::Term> terms;
};
std::vector<VectorLiteral> parse_vectors(std::string_view text);

struct StencilFile {
  std::vector<Complex> base;
  double domain_radius;
  std::vector<Stencil> states;
};
StencilFile parse_stencils(std::string_view text);

/// Whole file contents; InputError when unreadable.
std::string read_file(const std::string& path);

}  // namespace cohk::io
