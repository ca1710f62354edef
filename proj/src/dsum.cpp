#include "cohring/dsum.hpp"

namespace cohring {

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ArityMismatch, "exponent vectors differ in length");
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (__builtin_add_overflow(a[i], b[i], &r[i])) throw Error(ErrorKind::ConfigError, "exponent overflow");
  }
  return r;
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ArityMismatch, "exponent vectors differ in length");
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

ExpVec lcm(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::ArityMismatch, "exponent vectors differ in length");
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

std::strong_ordering grlex_compare(const ExpVec& a, const ExpVec& b) noexcept {
  if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return a.size() <=> b.size();
}

}  // namespace cohring
