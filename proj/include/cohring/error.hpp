#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cohring {

enum class ErrorKind {
  InvalidModulus,
  RingMismatch,
  IndexMismatch,
  NotNatIndexed,
  ArityMismatch,
  ZeroPolynomial,
  NonInvertibleLead,
  ZeroInput,
  ModeMismatch,
  DegreeBoundExceeded,
  BasisMismatch,
  NotConfluent,
  InvalidBasis,
  UnsupportedPair,
  SearchSpaceTooLarge,
  NotFinite,
  SyntaxError,
  UnknownVariable,
  ConfigError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this one type; the
// kind is what callers dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parser failures carry the 0-based offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              "syntax error at position " + std::to_string(position) + ": " + what),
        position_(position),
        detail_(what) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

}  // namespace cohring
