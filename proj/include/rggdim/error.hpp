#pragma once

#include <stdexcept>
#include <string>

namespace rggdim {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad index, n out of range, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The variance estimator is not positive, so the standardized statistic is undefined.
class DegenerateVariance : public Error {
 public:
  using Error::Error;
};

/// Edge-list text could not be parsed. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line) : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input bytes are not valid UTF-8.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// Every Monte Carlo replicate was degenerate; no rejection rate exists.
class EstimationFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace rggdim
