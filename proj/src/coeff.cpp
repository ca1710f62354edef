#include "cohring/coeff.hpp"

namespace cohring {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::IndexMismatch: return "IndexMismatch";
    case ErrorKind::NotNatIndexed: return "NotNatIndexed";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::NonInvertibleLead: return "NonInvertibleLead";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorKind::BasisMismatch: return "BasisMismatch";
    case ErrorKind::NotConfluent: return "NotConfluent";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::UnsupportedPair: return "UnsupportedPair";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

std::optional<RingDescriptor> RingDescriptor::parse(std::string_view text) {
  if (text == "Z") return integers();
  if (text.size() < 2 || text[0] != 'Z') return std::nullopt;
  std::string_view rest = text.substr(1);
  if (rest[0] == '/') rest.remove_prefix(1);
  if (rest.empty() || rest[0] == '-') return std::nullopt;
  auto n = Integer::parse(rest);
  if (!n) return std::nullopt;
  return modular(*n);
}

std::string RingDescriptor::to_string() const {
  if (kind == RingKind::Integers) return "Z";
  return "Z" + modulus.to_string();
}

Ring::Ring(RingDescriptor d) : desc_(std::move(d)) {
  if (desc_.kind == RingKind::Modular) {
    if (desc_.modulus < Integer(2)) {
      throw Error(ErrorKind::InvalidModulus,
                  "modulus must be at least 2, got " + desc_.modulus.to_string());
    }
    is_field_ = probably_prime(desc_.modulus);
  } else {
    desc_.modulus = 0;
  }
}

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
  if (!is_modular()) return a + b;
  Integer s = a + b;
  if (s >= desc_.modulus) s -= desc_.modulus;
  return s;
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const {
  if (!is_modular()) return a - b;
  Integer s = a - b;
  if (s.sign() < 0) s += desc_.modulus;
  return s;
}

RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
  if (!is_modular()) return a * b;
  return floor_mod(a * b, desc_.modulus);
}

RingElem Ring::neg(const RingElem& a) const {
  if (!is_modular()) return -a;
  return a.is_zero() ? a : desc_.modulus - a;
}

std::optional<RingElem> Ring::try_invert(const RingElem& a) const {
  if (!is_modular()) {
    if (a == Integer(1) || a == Integer(-1)) return a;
    return std::nullopt;
  }
  return mod_inverse(a, desc_.modulus);
}

Ring ring_make(const RingDescriptor& d) { return Ring(d); }

RingElem arith(const Ring& r, ArithOp op, const RingElem& a, const RingElem& b) {
  switch (op) {
    case ArithOp::Add: return r.add(a, b);
    case ArithOp::Sub: return r.sub(a, b);
    case ArithOp::Mul: return r.mul(a, b);
    case ArithOp::Neg: return r.neg(a);
  }
  return a;
}

}  // namespace cohring
