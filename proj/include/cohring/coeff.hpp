#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cohring/error.hpp"
#include "cohring/integer.hpp"

namespace cohring {

enum class RingKind { Integers, Modular };

struct RingDescriptor {
  RingKind kind = RingKind::Integers;
  Integer modulus = 0;  // Modular only

  static RingDescriptor integers() { return {RingKind::Integers, 0}; }
  static RingDescriptor modular(Integer n) { return {RingKind::Modular, std::move(n)}; }

  /// Accepts "Z", "Z2", "Z/2", "Z<n>", "Z/<n>". Returns nullopt on malformed text;
  /// a well-formed descriptor with a bad modulus is left for Ring to reject.
  static std::optional<RingDescriptor> parse(std::string_view text);

  std::string to_string() const;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// Elements are plain integers; the ring that owns them decides what the
/// canonical representative is.
using RingElem = Integer;

enum class ArithOp { Add, Sub, Mul, Neg };

/// A commutative coefficient ring with decidable zero test: the integers or
/// Z/n. Modular elements are kept in [0, n) after every operation.
class Ring {
 public:
  /// Throws Error(InvalidModulus) for a Modular descriptor with modulus < 2.
  explicit Ring(RingDescriptor d);

  static Ring integers() { return Ring(RingDescriptor::integers()); }
  static Ring modular(Integer n) { return Ring(RingDescriptor::modular(std::move(n))); }

  const RingDescriptor& descriptor() const noexcept { return desc_; }
  bool is_modular() const noexcept { return desc_.kind == RingKind::Modular; }
  /// Z/p for prime p.
  bool is_field() const noexcept { return is_field_; }
  /// 0 for the integers.
  const Integer& characteristic() const noexcept { return desc_.modulus; }

  RingElem zero() const { return 0; }
  RingElem one() const { return canonical(1); }
  RingElem canonical(const Integer& v) const {
    return is_modular() ? floor_mod(v, desc_.modulus) : v;
  }

  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  bool is_zero(const RingElem& a) const noexcept { return a.is_zero(); }
  /// b with a*b = 1, or nullopt when a is not a unit.
  std::optional<RingElem> try_invert(const RingElem& a) const;

  std::string to_string() const { return desc_.to_string(); }

  friend bool operator==(const Ring& a, const Ring& b) noexcept { return a.desc_ == b.desc_; }

 private:
  RingDescriptor desc_;
  bool is_field_ = false;
};

Ring ring_make(const RingDescriptor& d);
/// b is ignored for Neg.
RingElem arith(const Ring& r, ArithOp op, const RingElem& a, const RingElem& b = RingElem{});

}  // namespace cohring
