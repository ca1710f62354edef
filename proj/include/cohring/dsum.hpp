#pragma once

// Direct sums of an indexed family of coefficient modules.
//
// SparseSum is the term-list form: a strictly increasing list of
// (index, coefficient) pairs with no zero coefficients. Because the form is
// canonical, two sums are equal exactly when their term lists are equal, so the
// usual quotient relations (zero terms vanish, terms at the same index merge,
// addition is associative and commutative) hold structurally.
//
// DenseSeq is the bounded-sequence form for N-indexed families: position i holds
// the degree-i coefficient and everything past the end is zero.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "cohring/coeff.hpp"
#include "cohring/error.hpp"

namespace cohring {

/// Exponent vector indexing a monomial X1^e1 ... Xk^ek.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::size_t arity) : e_(arity, 0) {}
  ExpVec(std::initializer_list<std::uint32_t> e) : e_(e) {}
  explicit ExpVec(std::vector<std::uint32_t> e) : e_(std::move(e)) {}

  std::size_t size() const noexcept { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return e_; }

  std::uint64_t total_degree() const noexcept {
    return std::accumulate(e_.begin(), e_.end(), std::uint64_t{0});
  }
  /// this | other, componentwise.
  bool divides(const ExpVec& other) const noexcept {
    for (std::size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] > other.e_[i]) return false;
    }
    return true;
  }

  friend bool operator==(const ExpVec&, const ExpVec&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

ExpVec operator+(const ExpVec& a, const ExpVec& b);
/// a - b; requires b.divides(a).
ExpVec operator-(const ExpVec& a, const ExpVec& b);
ExpVec lcm(const ExpVec& a, const ExpVec& b);
/// Graded lexicographic with X1 > X2 > ... > Xk.
std::strong_ordering grlex_compare(const ExpVec& a, const ExpVec& b) noexcept;

/// (N, 0, +) with the numeric order.
struct NatMonoid {
  using index_type = std::uint64_t;

  index_type unit() const noexcept { return 0; }
  index_type add(index_type a, index_type b) const noexcept { return a + b; }
  std::strong_ordering compare(index_type a, index_type b) const noexcept { return a <=> b; }
  void check(index_type) const noexcept {}

  friend bool operator==(const NatMonoid&, const NatMonoid&) = default;
};

/// (N^k, 0, +) ordered graded-lexicographically.
struct ExpVecMonoid {
  using index_type = ExpVec;

  std::size_t arity = 0;

  index_type unit() const { return ExpVec(arity); }
  index_type add(const ExpVec& a, const ExpVec& b) const { return a + b; }
  std::strong_ordering compare(const ExpVec& a, const ExpVec& b) const noexcept {
    return grlex_compare(a, b);
  }
  void check(const ExpVec& v) const {
    if (v.size() != arity) {
      throw Error(ErrorKind::ArityMismatch, "exponent vector of length " + std::to_string(v.size()) +
                                                " in a ring of arity " + std::to_string(arity));
    }
  }

  friend bool operator==(const ExpVecMonoid&, const ExpVecMonoid&) = default;
};

/// The family that assigns the same coefficient ring to every index.
struct ConstantFamily {
  using value_type = RingElem;

  Ring ring;

  template <class I>
  RingElem zero(const I&) const {
    return ring.zero();
  }
  template <class I>
  RingElem canonical(const I&, const RingElem& v) const {
    return ring.canonical(v);
  }
  template <class I>
  RingElem add(const I&, const RingElem& a, const RingElem& b) const {
    return ring.add(a, b);
  }
  template <class I>
  RingElem neg(const I&, const RingElem& a) const {
    return ring.neg(a);
  }
  template <class I>
  bool is_zero(const I&, const RingElem& a) const {
    return ring.is_zero(a);
  }

  friend bool operator==(const ConstantFamily& a, const ConstantFamily& b) noexcept {
    return a.ring == b.ring;
  }
};

template <class Monoid, class Family>
class SparseSum {
 public:
  using monoid_type = Monoid;
  using family_type = Family;
  using index_type = typename Monoid::index_type;
  using value_type = typename Family::value_type;

  struct Term {
    index_type index;
    value_type coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  SparseSum(Monoid monoid, Family family) : monoid_(std::move(monoid)), family_(std::move(family)) {}

  /// Sorts, merges equal indices and drops zeros.
  static SparseSum from_terms(Monoid monoid, Family family, std::vector<Term> terms) {
    SparseSum out(std::move(monoid), std::move(family));
    for (auto& t : terms) {
      out.monoid_.check(t.index);
      t.coeff = out.family_.canonical(t.index, t.coeff);
    }
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return out.monoid_.compare(a.index, b.index) < 0;
    });
    for (auto& t : terms) {
      if (!out.terms_.empty() && out.terms_.back().index == t.index) {
        out.terms_.back().coeff = out.family_.add(t.index, out.terms_.back().coeff, t.coeff);
      } else {
        out.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(out.terms_, [&](const Term& t) { return out.family_.is_zero(t.index, t.coeff); });
    return out;
  }

  /// Adopts terms that are already strictly increasing and zero-free.
  static SparseSum from_canonical_terms(Monoid monoid, Family family, std::vector<Term> terms) {
    SparseSum out(std::move(monoid), std::move(family));
    out.terms_ = std::move(terms);
    return out;
  }

  const Monoid& monoid() const noexcept { return monoid_; }
  const Family& family() const noexcept { return family_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest index in the monoid order. Requires !is_zero().
  const Term& leading() const { return terms_.back(); }

  value_type coeff_at(const index_type& index) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index, [&](const Term& t, const index_type& i) {
      return monoid_.compare(t.index, i) < 0;
    });
    if (it != terms_.end() && it->index == index) return it->coeff;
    return family_.zero(index);
  }

  /// The stored form satisfies the canonical-form invariant.
  bool is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (family_.is_zero(terms_[i].index, terms_[i].coeff)) return false;
      if (i > 0 && monoid_.compare(terms_[i - 1].index, terms_[i].index) >= 0) return false;
    }
    return true;
  }

  friend bool operator==(const SparseSum& a, const SparseSum& b) {
    return a.monoid_ == b.monoid_ && a.family_ == b.family_ && a.terms_ == b.terms_;
  }

 private:
  Monoid monoid_;
  Family family_;
  std::vector<Term> terms_;
};

template <class Family>
class DenseSeq {
 public:
  using value_type = typename Family::value_type;

  explicit DenseSeq(Family family, std::vector<value_type> coeffs = {})
      : family_(std::move(family)), coeffs_(std::move(coeffs)) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      coeffs_[i] = family_.canonical(static_cast<std::uint64_t>(i), coeffs_[i]);
    }
  }

  const Family& family() const noexcept { return family_; }
  const std::vector<value_type>& coeffs() const noexcept { return coeffs_; }
  std::size_t length() const noexcept { return coeffs_.size(); }

  /// Coefficient at position i, zero past the end.
  value_type at(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : family_.zero(static_cast<std::uint64_t>(i));
  }

  /// Length once trailing zeros are ignored.
  std::size_t effective_length() const {
    std::size_t n = coeffs_.size();
    while (n > 0 && family_.is_zero(static_cast<std::uint64_t>(n - 1), coeffs_[n - 1])) --n;
    return n;
  }

 private:
  Family family_;
  std::vector<value_type> coeffs_;
};

// Largest dense expansion to_dense will materialize.
inline constexpr std::uint64_t kMaxDenseLength = std::uint64_t{1} << 26;

namespace detail {

template <class M, class F>
void check_compatible(const SparseSum<M, F>& a, const SparseSum<M, F>& b) {
  if (!(a.monoid() == b.monoid())) {
    throw Error(ErrorKind::IndexMismatch, "operands are indexed by different monoids");
  }
  if (!(a.family() == b.family())) {
    throw Error(ErrorKind::RingMismatch, "operands have different coefficient families");
  }
}

}  // namespace detail

template <class M, class F>
SparseSum<M, F> base(const M& monoid, const F& family, typename M::index_type index,
                     typename F::value_type x) {
  using Sum = SparseSum<M, F>;
  monoid.check(index);
  x = family.canonical(index, x);
  if (family.is_zero(index, x)) return Sum(monoid, family);
  std::vector<typename Sum::Term> t;
  t.push_back({std::move(index), std::move(x)});
  return Sum::from_canonical_terms(monoid, family, std::move(t));
}

/// Single merge pass over both term lists.
template <class M, class F>
SparseSum<M, F> dsum_add(const SparseSum<M, F>& a, const SparseSum<M, F>& b) {
  using Sum = SparseSum<M, F>;
  detail::check_compatible(a, b);
  const auto& monoid = a.monoid();
  const auto& family = a.family();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<typename Sum::Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    auto c = monoid.compare(ta[i].index, tb[j].index);
    if (c < 0) {
      out.push_back(ta[i++]);
    } else if (c > 0) {
      out.push_back(tb[j++]);
    } else {
      auto s = family.add(ta[i].index, ta[i].coeff, tb[j].coeff);
      if (!family.is_zero(ta[i].index, s)) out.push_back({ta[i].index, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), ta.begin() + static_cast<std::ptrdiff_t>(i), ta.end());
  out.insert(out.end(), tb.begin() + static_cast<std::ptrdiff_t>(j), tb.end());
  return Sum::from_canonical_terms(monoid, family, std::move(out));
}

template <class M, class F>
SparseSum<M, F> dsum_neg(const SparseSum<M, F>& a) {
  using Sum = SparseSum<M, F>;
  std::vector<typename Sum::Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({t.index, a.family().neg(t.index, t.coeff)});
  return Sum::from_canonical_terms(a.monoid(), a.family(), std::move(out));
}

template <class M, class F>
SparseSum<M, F> dsum_sub(const SparseSum<M, F>& a, const SparseSum<M, F>& b) {
  return dsum_add(a, dsum_neg(b));
}

template <class M, class F>
SparseSum<M, F> operator+(const SparseSum<M, F>& a, const SparseSum<M, F>& b) {
  return dsum_add(a, b);
}
template <class M, class F>
SparseSum<M, F> operator-(const SparseSum<M, F>& a, const SparseSum<M, F>& b) {
  return dsum_sub(a, b);
}
template <class M, class F>
SparseSum<M, F> operator-(const SparseSum<M, F>& a) {
  return dsum_neg(a);
}

/// Positional expansion; throws NotNatIndexed unless the index monoid is N.
template <class M, class F>
DenseSeq<F> to_dense(const SparseSum<M, F>& a) {
  if constexpr (!std::is_same_v<M, NatMonoid>) {
    throw Error(ErrorKind::NotNatIndexed, "dense form exists only for N-indexed sums");
  } else {
    using V = typename F::value_type;
    if (a.is_zero()) return DenseSeq<F>(a.family());
    std::uint64_t top = a.leading().index;
    if (top >= kMaxDenseLength) {
      throw Error(ErrorKind::ConfigError, "dense expansion of degree " + std::to_string(top) + " is too large");
    }
    std::vector<V> coeffs;
    coeffs.reserve(top + 1);
    for (std::uint64_t i = 0; i <= top; ++i) coeffs.push_back(a.family().zero(i));
    for (const auto& t : a.terms()) coeffs[t.index] = t.coeff;
    return DenseSeq<F>(a.family(), std::move(coeffs));
  }
}

template <class F>
SparseSum<NatMonoid, F> from_dense(const DenseSeq<F>& f) {
  using Sum = SparseSum<NatMonoid, F>;
  std::vector<typename Sum::Term> out;
  for (std::size_t i = 0; i < f.length(); ++i) {
    if (!f.family().is_zero(static_cast<std::uint64_t>(i), f.coeffs()[i])) {
      out.push_back({static_cast<std::uint64_t>(i), f.coeffs()[i]});
    }
  }
  return Sum::from_canonical_terms(NatMonoid{}, f.family(), std::move(out));
}

template <class M, class F>
bool dsum_equal(const SparseSum<M, F>& a, const SparseSum<M, F>& b) {
  detail::check_compatible(a, b);
  return a.terms() == b.terms();
}

/// Pointwise, so trailing zeros are invisible.
template <class F>
bool dsum_equal(const DenseSeq<F>& a, const DenseSeq<F>& b) {
  if (!(a.family() == b.family())) {
    throw Error(ErrorKind::RingMismatch, "operands have different coefficient families");
  }
  std::size_t n = a.effective_length();
  if (n != b.effective_length()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(a.coeffs()[i] == b.coeffs()[i])) return false;
  }
  return true;
}

template <class F>
DenseSeq<F> dense_add(const DenseSeq<F>& a, const DenseSeq<F>& b) {
  if (!(a.family() == b.family())) {
    throw Error(ErrorKind::RingMismatch, "operands have different coefficient families");
  }
  std::size_t n = std::max(a.length(), b.length());
  std::vector<typename F::value_type> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.family().add(static_cast<std::uint64_t>(i), a.at(i), b.at(i)));
  return DenseSeq<F>(a.family(), std::move(out));
}

template <class F>
DenseSeq<F> dense_neg(const DenseSeq<F>& a) {
  std::vector<typename F::value_type> out;
  out.reserve(a.length());
  for (std::size_t i = 0; i < a.length(); ++i) out.push_back(a.family().neg(static_cast<std::uint64_t>(i), a.coeffs()[i]));
  return DenseSeq<F>(a.family(), std::move(out));
}

}  // namespace cohring
