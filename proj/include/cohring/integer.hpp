#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace cohring {

/// Arbitrary-precision signed integer.
///
/// Values that fit in an int64 are stored inline and handled with
/// overflow-checked machine arithmetic; anything larger lives in a shared,
/// immutable multiprecision representation. The two storage forms never
/// overlap: a value is big iff it does not fit in int64, so equality and
/// hashing can stay structural.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(std::int64_t v) noexcept : small_(v) {}  // NOLINT: implicit by design of numeric literals
  Integer(int v) noexcept : small_(v) {}           // NOLINT

  /// Decimal, optional leading '-'. Returns nullopt on malformed input.
  static std::optional<Integer> parse(std::string_view text);

  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  int sign() const noexcept;
  bool fits_int64() const noexcept { return !big_; }
  /// Only meaningful when fits_int64().
  std::int64_t to_int64() const noexcept { return small_; }

  std::string to_string() const;

  friend Integer operator+(const Integer& a, const Integer& b);
  friend Integer operator-(const Integer& a, const Integer& b);
  friend Integer operator*(const Integer& a, const Integer& b);
  Integer operator-() const;

  Integer& operator+=(const Integer& b) { return *this = *this + b; }
  Integer& operator-=(const Integer& b) { return *this = *this - b; }
  Integer& operator*=(const Integer& b) { return *this = *this * b; }

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  struct BigRep;

 private:
  explicit Integer(std::shared_ptr<const BigRep> big);
  static Integer from_rep(BigRep rep);
  BigRep as_rep() const;

  friend Integer floor_mod(const Integer& a, const Integer& n);
  friend Integer trunc_div(const Integer& a, const Integer& b);
  friend Integer gcd(const Integer& a, const Integer& b);
  friend std::optional<Integer> mod_inverse(const Integer& a, const Integer& n);
  friend bool probably_prime(const Integer& n);

  std::int64_t small_ = 0;
  std::shared_ptr<const BigRep> big_;
};

/// Remainder in [0, |n|). n must be nonzero.
Integer floor_mod(const Integer& a, const Integer& n);
/// Quotient rounded toward zero. b must be nonzero.
Integer trunc_div(const Integer& a, const Integer& b);
/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
/// Inverse of a modulo n (n >= 2) in [0, n), or nullopt if gcd(a, n) != 1.
std::optional<Integer> mod_inverse(const Integer& a, const Integer& n);
/// Deterministic for n < 2^64, Miller-Rabin with fixed witnesses beyond.
bool probably_prime(const Integer& n);

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace cohring
