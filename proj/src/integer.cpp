#include "cohring/integer.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <limits>
#include <ostream>
#include <random>

namespace cohring {

namespace mp = boost::multiprecision;

struct Integer::BigRep {
  mp::cpp_int v;
};

namespace {

const mp::cpp_int kInt64Min = std::numeric_limits<std::int64_t>::min();
const mp::cpp_int kInt64Max = std::numeric_limits<std::int64_t>::max();

}  // namespace

Integer::Integer(std::shared_ptr<const BigRep> big) : big_(std::move(big)) {}

Integer Integer::from_rep(BigRep rep) {
  if (rep.v >= kInt64Min && rep.v <= kInt64Max) {
    return Integer(static_cast<std::int64_t>(rep.v));
  }
  return Integer(std::make_shared<const BigRep>(std::move(rep)));
}

Integer::BigRep Integer::as_rep() const {
  if (big_) return *big_;
  return BigRep{mp::cpp_int(small_)};
}

std::optional<Integer> Integer::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = text[0] == '-' ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  return from_rep(BigRep{mp::cpp_int(std::string(text))});
}

int Integer::sign() const noexcept {
  if (big_) return big_->v.sign();
  return (small_ > 0) - (small_ < 0);
}

std::string Integer::to_string() const {
  if (big_) return big_->v.str();
  return std::to_string(small_);
}

Integer operator+(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
  return Integer::from_rep(Integer::BigRep{a.as_rep().v + b.as_rep().v});
}

Integer operator-(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
  return Integer::from_rep(Integer::BigRep{a.as_rep().v - b.as_rep().v});
}

Integer operator*(const Integer& a, const Integer& b) {
  std::int64_t r;
  if (!a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
  return Integer::from_rep(Integer::BigRep{a.as_rep().v * b.as_rep().v});
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return from_rep(BigRep{-as_rep().v});
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  if (a.big_ && b.big_) return a.big_->v == b.big_->v;
  return false;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = a.as_rep().v.compare(b.as_rep().v);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer floor_mod(const Integer& a, const Integer& n) {
  if (!a.big_ && !n.big_) {
    std::int64_t m = n.small_ < 0 ? -n.small_ : n.small_;
    if (m > 0) {
      std::int64_t r = a.small_ % m;
      return Integer(r < 0 ? r + m : r);
    }
  }
  mp::cpp_int m = mp::abs(n.as_rep().v);
  mp::cpp_int r = a.as_rep().v % m;
  if (r < 0) r += m;
  return Integer::from_rep(Integer::BigRep{std::move(r)});
}

Integer trunc_div(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ &&
      !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  return Integer::from_rep(Integer::BigRep{a.as_rep().v / b.as_rep().v});
}

Integer gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && a.small_ != std::numeric_limits<std::int64_t>::min() &&
      b.small_ != std::numeric_limits<std::int64_t>::min()) {
    std::int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
    std::int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  return Integer::from_rep(Integer::BigRep{mp::gcd(a.as_rep().v, b.as_rep().v)});
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

std::optional<Integer> mod_inverse(const Integer& a, const Integer& n) {
  // extended Euclid on (a mod n, n)
  Integer r0 = n, r1 = floor_mod(a, n);
  Integer s0 = 0, s1 = 1;
  while (!r1.is_zero()) {
    Integer q = trunc_div(r0, r1);
    Integer r2 = r0 - q * r1;
    Integer s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0 != Integer(1)) return std::nullopt;
  return floor_mod(s0, n);
}

bool probably_prime(const Integer& n) {
  if (n < Integer(2)) return false;
  if (!n.big_) {
    std::uint64_t v = static_cast<std::uint64_t>(n.small_);
    if (v < 4) return true;
    if (v % 2 == 0) return false;
    for (std::uint64_t d = 3; d <= v / d; d += 2) {
      if (v % d == 0) return false;
      if (d > (1u << 20)) break;
    }
    if (v < (std::uint64_t{1} << 40)) return true;
  }
  std::mt19937 gen(12345);
  return mp::miller_rabin_test(n.as_rep().v, 25, gen);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace cohring
