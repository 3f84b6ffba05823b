#include "cohk/point.hpp"

#include <algorithm>
#include <cmath>

#include "cohk/errors.hpp"

namespace cohk {

Point::Point(std::vector<Complex> coords, std::optional<std::string> tag)
    : coords_(std::move(coords)), tag_(std::move(tag)) {
  if (coords_.empty()) throw DimensionError("point must have at least one coordinate");
  for (const Complex& c : coords_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw DomainError("point coordinates must be finite");
  }
}

Point::Point(std::initializer_list<Complex> coords) : Point(std::vector<Complex>(coords)) {}

Point Point::slice(std::size_t begin, std::size_t end) const {
  if (begin > end || end > coords_.size())
    throw DimensionError("slice [" + std::to_string(begin) + "," + std::to_string(end) +
                         ") out of range for dimension " + std::to_string(coords_.size()));
  return Point(Unchecked{}, std::vector<Complex>(coords_.begin() + begin, coords_.begin() + end), tag_);
}

Point Point::scaled(Complex factor) const {
  std::vector<Complex> c = coords_;
  for (auto& x : c) x *= factor;
  return Point(std::move(c), tag_);
}

Point Point::conjugated() const {
  std::vector<Complex> c = coords_;
  for (auto& x : c) x = std::conj(x);
  return Point(Unchecked{}, std::move(c), tag_);
}

Point Point::with_tag(std::optional<std::string> tag) const {
  return Point(Unchecked{}, coords_, std::move(tag));
}

bool Point::is_real() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Complex c) { return c.imag() == 0.0; });
}

Complex dot(const Point& z, const Point& w) {
  if (z.dimension() != w.dimension())
    throw DimensionError("dot: dimensions " + std::to_string(z.dimension()) + " and " +
                         std::to_string(w.dimension()) + " differ");
  Complex s = 0.0;
  for (std::size_t i = 0; i < z.dimension(); ++i) s += std::conj(z[i]) * w[i];
  return s;
}

double squared_norm(const Point& z) {
  double s = 0.0;
  for (const Complex& c : z.coords()) s += std::norm(c);
  return s;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("point set must be nonempty");
  const std::size_t d = points_.front().dimension();
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i].dimension() != d)
      throw DimensionError("point " + std::to_string(i) + " has dimension " +
                           std::to_string(points_[i].dimension()) + ", expected " + std::to_string(d));
  }
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
  std::vector<Point> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(points_.at(i));
  return PointSet(std::move(out));
}

Tolerance::Tolerance(double rel, double abs) : rel_(rel), abs_(abs) {
  if (!std::isfinite(rel) || !std::isfinite(abs) || rel < 0.0 || abs < 0.0)
    throw DomainError("tolerances must be finite and nonnegative");
}

double Tolerance::bound(double scale) const noexcept {
  return rel_ * std::max(1.0, std::abs(scale)) + abs_;
}

}  // namespace cohk
