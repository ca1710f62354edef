#pragma once

// Random generators and naive reference arithmetic shared by the tests.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "cohring/poly.hpp"

namespace testing_support {

using namespace cohring;

// Polynomials as plain maps from exponent vector to a reduced int64 coefficient.
using NaivePoly = std::map<std::vector<std::uint32_t>, std::int64_t>;

inline std::int64_t reduce_coeff(std::int64_t c, std::int64_t modulus) {
  if (modulus == 0) return c;
  c %= modulus;
  return c < 0 ? c + modulus : c;
}

inline void naive_drop_zeros(NaivePoly& p) {
  for (auto it = p.begin(); it != p.end();) {
    it = it->second == 0 ? p.erase(it) : std::next(it);
  }
}

inline NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b, std::int64_t modulus) {
  NaivePoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<std::uint32_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] = reduce_coeff(out[e] + ca * cb, modulus);
    }
  }
  naive_drop_zeros(out);
  return out;
}

inline NaivePoly naive_add(const NaivePoly& a, const NaivePoly& b, std::int64_t modulus) {
  NaivePoly out = a;
  for (const auto& [e, c] : b) out[e] = reduce_coeff(out[e] + c, modulus);
  naive_drop_zeros(out);
  return out;
}

inline NaivePoly to_naive(const MultiPoly& p) {
  NaivePoly out;
  for (const auto& t : p.terms()) out[t.index.exponents()] = t.coeff.to_int64();
  return out;
}

inline NaivePoly to_naive(const UniSparse& p) {
  NaivePoly out;
  for (const auto& t : p.terms()) out[{static_cast<std::uint32_t>(t.index)}] = t.coeff.to_int64();
  return out;
}

inline std::int64_t modulus_of(const Ring& r) { return r.is_modular() ? r.characteristic().to_int64() : 0; }

// Dense coefficient list of the given degree bound; roughly half the entries zero.
inline std::vector<RingElem> random_coeffs(std::mt19937_64& rng, std::size_t max_degree, std::int64_t bound) {
  std::uniform_int_distribution<std::size_t> len(0, max_degree + 1);
  std::uniform_int_distribution<std::int64_t> c(-bound, bound);
  std::bernoulli_distribution keep(0.5);
  std::vector<RingElem> out(len(rng));
  for (auto& x : out) x = keep(rng) ? c(rng) : 0;
  return out;
}

inline UniSparse random_sparse(std::mt19937_64& rng, const Ring& ring, std::size_t max_degree = 30,
                               std::int64_t bound = 100) {
  auto c = random_coeffs(rng, max_degree, bound);
  std::vector<std::pair<std::uint64_t, RingElem>> terms;
  for (std::size_t i = 0; i < c.size(); ++i) terms.emplace_back(i, c[i]);
  return uni_sparse(ring, std::move(terms));
}

inline MultiPoly random_multi(std::mt19937_64& rng, const Ring& ring, std::size_t arity, std::uint32_t max_exp = 4,
                              std::size_t max_terms = 6, std::int64_t bound = 100) {
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> ex(0, max_exp);
  std::uniform_int_distribution<std::int64_t> c(-bound, bound);
  std::vector<MultiPoly::Term> terms;
  std::size_t n = nterms(rng);
  for (std::size_t k = 0; k < n; ++k) {
    ExpVec e(arity);
    for (std::size_t i = 0; i < arity; ++i) e[i] = ex(rng);
    terms.push_back({e, c(rng)});
  }
  return MultiPoly::from_terms(ExpVecMonoid{arity}, ConstantFamily{ring}, std::move(terms));
}

}  // namespace testing_support
