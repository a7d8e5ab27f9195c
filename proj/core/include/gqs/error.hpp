#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gqs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a domain constraint (knot order, beta range, sizes, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Hermite data does not satisfy the shape hypothesis of a fitting routine.
class ShapePreconditionError : public Error {
 public:
  ShapePreconditionError(std::size_t interval, std::string condition)
      : Error("interval " + std::to_string(interval) + ": " + condition),
        interval_(interval),
        condition_(std::move(condition)) {}

  /// 1-based index of the first offending interval.
  std::size_t interval() const noexcept { return interval_; }
  const std::string& condition() const noexcept { return condition_; }

 private:
  std::size_t interval_;
  std::string condition_;
};

/// Requested accuracy cannot be met within the subdivision level budget.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

/// A tridiagonal system lost strict diagonal dominance.
class DominanceError : public Error {
 public:
  using Error::Error;
};

}  // namespace gqs
