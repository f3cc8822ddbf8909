#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmtd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed case text. Carries the 1-based line number of the offending row.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Case parsed but violates a GridCase invariant (x <= 0, no reference bus, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Unknown bundled case name.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Document on disk does not match the expected schema. `field()` names the culprit.
class FormatError : public Error {
 public:
  FormatError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Measurement model cannot be built (island without reference bus, bad sizes).
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Normal matrix of the estimator is singular.
class EstimationError : public Error {
 public:
  using Error::Error;
};

/// Residual test has no redundancy (m <= n).
class DegreesOfFreedomError : public Error {
 public:
  using Error::Error;
};

/// Schedule search ran out of retries for a stage.
class SearchError : public Error {
 public:
  using Error::Error;
};

/// Internal graph bookkeeping went inconsistent. Indicates a bug.
class GraphError : public Error {
 public:
  using Error::Error;
};

}  // namespace mmtd
