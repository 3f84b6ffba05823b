#include "cohk/log_kernel.hpp"

#include <cmath>

#include "cohk/errors.hpp"

namespace cohk {

namespace {
// Largest x with exp(x) finite in double precision.
constexpr double kMaxExponent = 709.782712893384;
}  // namespace

Complex LogValue::value() const {
  if (neg_inf_) throw DomainError("value of -inf requested");
  return value_;
}

Complex LogValue::exp_scaled(double beta) const {
  if (neg_inf_) return 0.0;
  const Complex arg = beta * value_;
  if (!std::isfinite(arg.real()) || !std::isfinite(arg.imag()) || arg.real() > kMaxExponent)
    throw OverflowError("exp(" + std::to_string(arg.real()) + (arg.imag() < 0 ? "" : "+") +
                        std::to_string(arg.imag()) + "i) overflows");
  return std::exp(arg);
}

ExtendedLogKernel::ExtendedLogKernel(std::string trace, Evaluator eval)
    : trace_(std::make_shared<const std::string>(std::move(trace))),
      eval_(std::make_shared<const Evaluator>(std::move(eval))) {
  if (!*eval_) throw DomainError("log-kernel evaluator must be callable");
}

LogValue ExtendedLogKernel::operator()(const Point& z, const Point& w) const { return (*eval_)(z, w); }

ExtendedLogKernel ExtendedLogKernel::log_of(const Kernel& k) {
  return ExtendedLogKernel("log(" + k.trace() + ")", [k](const Point& z, const Point& w) -> LogValue {
    const Complex v = k(z, w);
    if (v == Complex(0.0)) return LogValue::neg_inf();
    return std::log(v);
  });
}

ExtendedLogKernel ExtendedLogKernel::values_of(const Kernel& k) {
  return ExtendedLogKernel(k.trace(), [k](const Point& z, const Point& w) -> LogValue { return k(z, w); });
}

}  // namespace cohk
