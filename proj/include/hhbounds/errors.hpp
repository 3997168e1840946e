#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hhb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax or lexical error in a function expression; offset is a byte index into the source.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("byte " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation outside the domain of an expression (ln of a nonpositive value, division by zero, ...).
/// `kink()` is set when the failure is the sign factor of a differentiated abs() at a zero of its argument.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what, bool kink = false) : Error(what), kink_(kink) {}
  bool kink() const noexcept { return kink_; }

 private:
  bool kink_;
};

/// Parameters outside the hypothesis region of a bound.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// Adaptive integration exhausted its evaluation budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hhb
