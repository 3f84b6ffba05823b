#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohk {

/// Base of every error raised by the library. `kind()` is a stable short
/// identifier used in CLI diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message) : Error("dimension", message) {}
};

/// A point outside the admissible carrier of a kernel.
class CarrierError : public Error {
 public:
  CarrierError(std::string entry, const std::string& message)
      : Error("carrier", entry + ": " + message), entry_(std::move(entry)) {}
  const std::string& entry() const noexcept { return entry_; }

 private:
  std::string entry_;
};

/// Out-of-range parameter or violated precondition.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("domain", message) {}
};

/// A kernel value contradicting coherence (complex or negative diagonal,
/// Cauchy-Schwarz violated beyond tolerance).
class NonCoherentError : public Error {
 public:
  explicit NonCoherentError(const std::string& message) : Error("non_coherent", message) {}
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& message) : Error("overflow", message) {}
};

class EigenError : public Error {
 public:
  explicit EigenError(const std::string& message) : Error("eigensolver", message) {}
};

class KernelMismatchError : public Error {
 public:
  explicit KernelMismatchError(const std::string& message) : Error("kernel_mismatch", message) {}
};

/// Matrix required to be (conditionally) positive semidefinite is not.
class NotPositiveError : public Error {
 public:
  explicit NotPositiveError(const std::string& message) : Error("not_positive", message) {}
};

/// Evaluation failure inside a matrix construction, tagged with the entry.
class EvaluationError : public Error {
 public:
  EvaluationError(std::size_t row, std::size_t col, const std::string& inner_kind,
                  const std::string& message)
      : Error(inner_kind, "at (" + std::to_string(row) + "," + std::to_string(col) + "): " + message),
        row_(row),
        col_(col) {}
  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Malformed input file or command line.
class InputError : public Error {
 public:
  explicit InputError(const std::string& message) : Error("input", message) {}
};

}  // namespace cohk
