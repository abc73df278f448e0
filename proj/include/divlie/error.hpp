#pragma once

#include <stdexcept>
#include <string>

namespace divlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient ranks.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition on mathematical input failed (non-unimodular matrix,
/// collinear vectors, index out of range, rational alpha, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncation window is too small for the requested computation.
class WindowError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input. `field` points at the offending location.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::string field = {})
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace divlie
