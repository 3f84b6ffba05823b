#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace cohk {

using Complex = std::complex<double>;

/// An element of the carrier set: a nonempty vector of finite complex
/// coordinates with an optional opaque label.
class Point {
 public:
  explicit Point(std::vector<Complex> coords, std::optional<std::string> tag = std::nullopt);
  Point(std::initializer_list<Complex> coords);

  static Point scalar(Complex value) { return Point({value}); }

  std::size_t dimension() const noexcept { return coords_.size(); }
  const std::vector<Complex>& coords() const noexcept { return coords_; }
  Complex operator[](std::size_t i) const { return coords_[i]; }
  const std::optional<std::string>& tag() const noexcept { return tag_; }

  /// Coordinates [begin, end). The result may be empty; it is meant for
  /// handing slots of a concatenated point to factor kernels.
  Point slice(std::size_t begin, std::size_t end) const;
  Point scaled(Complex factor) const;
  Point conjugated() const;
  Point with_tag(std::optional<std::string> tag) const;

  bool is_real() const noexcept;

  /// Exact coordinate and tag equality.
  friend bool operator==(const Point& a, const Point& b) = default;

 private:
  struct Unchecked {};
  Point(Unchecked, std::vector<Complex> coords, std::optional<std::string> tag)
      : coords_(std::move(coords)), tag_(std::move(tag)) {}

  std::vector<Complex> coords_;
  std::optional<std::string> tag_;
};

/// z^* w, antilinear in the first argument.
Complex dot(const Point& z, const Point& w);
double squared_norm(const Point& z);

/// Ordered, nonempty sample of points sharing one dimension.
class PointSet {
 public:
  explicit PointSet(std::vector<Point> points);
  PointSet(std::initializer_list<Point> points) : PointSet(std::vector<Point>(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dimension() const noexcept { return points_.front().dimension(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  PointSet subset(const std::vector<std::size_t>& indices) const;

 private:
  std::vector<Point> points_;
};

/// Relative/absolute tolerance pair; `bound(scale)` is the admissible
/// deviation for a quantity of magnitude `scale`.
class Tolerance {
 public:
  Tolerance() = default;
  Tolerance(double rel, double abs);

  double rel() const noexcept { return rel_; }
  double abs() const noexcept { return abs_; }
  double bound(double scale) const noexcept;

 private:
  double rel_ = 1e-9;
  double abs_ = 1e-12;
};

}  // namespace cohk
