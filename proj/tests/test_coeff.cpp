#include <doctest.h>

#include <random>

#include "cohring/coeff.hpp"

using namespace cohring;

namespace {

std::string i128_to_string(__int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  std::string s;
  while (u) {
    s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  return neg ? "-" + s : s;
}

}  // namespace

TEST_CASE("integer arithmetic agrees with 128-bit arithmetic across the int64 boundary") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> any;
  std::uniform_int_distribution<int> shift(0, 62);
  for (int k = 0; k < 20000; ++k) {
    std::int64_t a = any(rng) >> shift(rng);
    std::int64_t b = any(rng) >> shift(rng);
    __int128 sum = static_cast<__int128>(a) + b;
    __int128 prod = static_cast<__int128>(a) * b;
    CHECK((Integer(a) + Integer(b)).to_string() == i128_to_string(sum));
    CHECK((Integer(a) - Integer(b)).to_string() == i128_to_string(static_cast<__int128>(a) - b));
    CHECK((Integer(a) * Integer(b)).to_string() == i128_to_string(prod));
    // A big intermediate that comes back into range is small again.
    CHECK((Integer(a) * Integer(b) - Integer(a) * Integer(b)).fits_int64());
    CHECK(((Integer(a) + Integer(b)) - Integer(b)) == Integer(a));
    CHECK(((Integer(a) < Integer(b)) == (a < b)));
  }
}

TEST_CASE("integer parsing and printing") {
  CHECK(Integer::parse("0")->to_string() == "0");
  CHECK(Integer::parse("-17")->to_string() == "-17");
  CHECK(Integer::parse("123456789012345678901234567890")->to_string() == "123456789012345678901234567890");
  CHECK_FALSE(Integer::parse("").has_value());
  CHECK_FALSE(Integer::parse("12a").has_value());
  CHECK_FALSE(Integer::parse("-").has_value());
  Integer big = *Integer::parse("9223372036854775808");
  CHECK_FALSE(big.fits_int64());
  CHECK((big - Integer(1)).fits_int64());
  CHECK((-big).fits_int64());  // INT64_MIN
}

TEST_CASE("floor_mod, gcd and modular inverse") {
  CHECK(floor_mod(-7, 3) == Integer(2));
  CHECK(floor_mod(7, -3) == Integer(1));
  CHECK(floor_mod(*Integer::parse("-100000000000000000000"), 7) == Integer(5));  // 10^20 = 2 mod 7
  CHECK(gcd(-12, 18) == Integer(6));
  CHECK(gcd(0, 0) == Integer(0));
  CHECK(*mod_inverse(3, 7) == Integer(5));
  CHECK_FALSE(mod_inverse(4, 8).has_value());
  CHECK(probably_prime(2));
  CHECK(probably_prime(*Integer::parse("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(probably_prime(*Integer::parse("170141183460469231731687303715884105729")));
  CHECK_FALSE(probably_prime(1));
}

TEST_CASE("ring construction") {
  CHECK(Ring::integers().to_string() == "Z");
  Ring z2 = Ring::modular(2);
  CHECK(z2.to_string() == "Z2");
  CHECK(z2.is_field());
  CHECK_FALSE(Ring::modular(6).is_field());
  CHECK_FALSE(Ring::integers().is_field());
  try {
    Ring::modular(1);
    FAIL("expected InvalidModulus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidModulus);
  }
  CHECK_THROWS_AS(Ring::modular(0), Error);
  CHECK_THROWS_AS(Ring::modular(-5), Error);
}

TEST_CASE("ring descriptors parse from text") {
  CHECK(*RingDescriptor::parse("Z") == RingDescriptor::integers());
  CHECK(*RingDescriptor::parse("Z2") == RingDescriptor::modular(2));
  CHECK(*RingDescriptor::parse("Z/2") == RingDescriptor::modular(2));
  CHECK(*RingDescriptor::parse("Z/13") == RingDescriptor::modular(13));
  CHECK_FALSE(RingDescriptor::parse("Q").has_value());
  CHECK_FALSE(RingDescriptor::parse("Z/").has_value());
  CHECK_FALSE(RingDescriptor::parse("").has_value());
  CHECK_THROWS_AS(ring_make(*RingDescriptor::parse("Z/1")), Error);
}

TEST_CASE("basic operations") {
  Ring z = Ring::integers();
  Ring z2 = Ring::modular(2);
  CHECK(arith(z2, ArithOp::Add, 1, 1) == Integer(0));
  CHECK(arith(z, ArithOp::Mul, 2, 3) == Integer(6));
  CHECK(arith(z2, ArithOp::Neg, 1) == Integer(1));
  CHECK(arith(z, ArithOp::Sub, 2, 5) == Integer(-3));
  CHECK(z.is_zero(0));
  CHECK(z2.is_zero(z2.canonical(2)));
  CHECK_FALSE(z.is_zero(-3));
  CHECK(*z2.try_invert(1) == Integer(1));
  CHECK_FALSE(z.try_invert(2).has_value());
  CHECK(*z.try_invert(-1) == Integer(-1));
  CHECK(*Ring::modular(7).try_invert(3) == Integer(5));
  CHECK_FALSE(Ring::modular(6).try_invert(3).has_value());
}

TEST_CASE("commutative ring axioms on random elements") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> pick(-1000, 1000);
  for (Ring r : {Ring::integers(), Ring::modular(2), Ring::modular(7), Ring::modular(12)}) {
    for (int k = 0; k < 2000; ++k) {
      RingElem a = r.canonical(pick(rng)), b = r.canonical(pick(rng)), c = r.canonical(pick(rng));
      CHECK(r.add(a, b) == r.add(b, a));
      CHECK(r.mul(a, b) == r.mul(b, a));
      CHECK(r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
      CHECK(r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
      CHECK(r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
      CHECK(r.add(a, r.zero()) == a);
      CHECK(r.mul(a, r.one()) == a);
      CHECK(r.is_zero(r.add(a, r.neg(a))));
      if (r.is_modular()) {
        CHECK(a.sign() >= 0);
        CHECK(a < r.characteristic());
      }
    }
  }
}
