#pragma once

#include <functional>
#include <memory>
#include <string>

#include "cohk/kernel.hpp"

namespace cohk {

/// A value in C ∪ {-inf}.
class LogValue {
 public:
  LogValue(Complex v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  LogValue(double v) : value_(v) {}   // NOLINT(google-explicit-constructor)
  static LogValue neg_inf() { return LogValue(); }

  bool is_neg_inf() const noexcept { return neg_inf_; }
  /// Throws DomainError for -inf.
  Complex value() const;

  /// exp(beta * F) with exp(-inf) = 0; OverflowError when the real part of
  /// the exponent leaves the double range.
  Complex exp_scaled(double beta) const;

 private:
  LogValue() : neg_inf_(true) {}
  Complex value_ = 0.0;
  bool neg_inf_ = false;
};

/// F : Z x Z -> C ∪ {-inf}, the input of conditional-positivity analysis
/// and of exponential kernels exp(beta F).
class ExtendedLogKernel {
 public:
  using Evaluator = std::function<LogValue(const Point&, const Point&)>;

  ExtendedLogKernel(std::string trace, Evaluator eval);

  LogValue operator()(const Point& z, const Point& w) const;
  const std::string& trace() const noexcept { return *trace_; }

  /// F = log K with the principal branch and log 0 = -inf.
  static ExtendedLogKernel log_of(const Kernel& k);
  /// F = K (every kernel is conditionally positive).
  static ExtendedLogKernel values_of(const Kernel& k);

 private:
  std::shared_ptr<const std::string> trace_;
  std::shared_ptr<const Evaluator> eval_;
};

}  // namespace cohk
