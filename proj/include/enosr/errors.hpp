#ifndef ENOSR_ERRORS_HPP
#define ENOSR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace enosr {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooFewNodes : Error {
  explicit TooFewNodes(const std::string& msg = "too few nodes") : Error(msg) {}
};

struct NonMonotonicNodes : Error {
  explicit NonMonotonicNodes(const std::string& msg = "nodes not strictly increasing")
      : Error(msg) {}
};

struct InvalidSigma : Error {
  explicit InvalidSigma(const std::string& msg = "spacing ratio bound must be >= 1")
      : Error(msg) {}
};

struct StencilOutOfRange : Error {
  explicit StencilOutOfRange(const std::string& msg = "stencil exceeds node range")
      : Error(msg) {}
};

struct IndexOutOfRange : Error {
  explicit IndexOutOfRange(const std::string& msg = "index out of range") : Error(msg) {}
};

struct NonpositiveSup : Error {
  explicit NonpositiveSup(const std::string& msg = "second-derivative bound must be positive")
      : Error(msg) {}
};

struct OutOfDomain : Error {
  explicit OutOfDomain(const std::string& msg = "evaluation point outside the grid hull")
      : Error(msg) {}
};

struct WrongMode : Error {
  explicit WrongMode(const std::string& msg = "operation requires a different interpolant mode")
      : Error(msg) {}
};

struct InvalidMode : Error {
  explicit InvalidMode(const std::string& msg = "unknown interpolation mode") : Error(msg) {}
};

struct NonpositiveError : Error {
  explicit NonpositiveError(const std::string& msg = "error values must be positive")
      : Error(msg) {}
};

struct CsvError : Error {
  explicit CsvError(const std::string& msg = "malformed CSV input") : Error(msg) {}
};

}  // namespace enosr

#endif
