#pragma once

// Graded ring structure on direct sums.
//
// A GradedMul supplies the homogeneous product star: G_i x G_j -> G_{i+j} and a
// unit in the monoid's unit degree. The sparse product is the primary
// definition; the dense convolution is an independent route used to
// cross-check it on N-indexed sums.

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "cohring/dsum.hpp"

namespace cohring {

template <class Monoid, class Family>
struct GradedMul {
  using index_type = typename Monoid::index_type;
  using value_type = typename Family::value_type;
  using Star = std::function<value_type(const index_type&, const value_type&, const index_type&, const value_type&)>;

  Star star;
  index_type unit_degree;
  value_type unit_elem;
};

/// Work counters for the product routines.
struct OpCounter {
  std::uint64_t multiplications = 0;  // star invocations
  std::uint64_t positions = 0;        // output slots materialized
};

/// Ordinary polynomial multiplication: every degree carries the ring itself and
/// star ignores the degrees.
template <class Monoid>
GradedMul<Monoid, ConstantFamily> polynomial_mul(const Monoid& monoid, const Ring& ring) {
  using I = typename Monoid::index_type;
  return {[ring](const I&, const RingElem& x, const I&, const RingElem& y) { return ring.mul(x, y); },
          monoid.unit(), ring.one()};
}

template <class M, class F>
SparseSum<M, F> graded_one(const M& monoid, const F& family, const GradedMul<M, F>& m) {
  return base(monoid, family, m.unit_degree, m.unit_elem);
}

/// Sum over all term pairs of base(i + j, star(i, x, j, y)).
///
/// Rows a_i * b are produced in increasing index order (the index order is
/// compatible with addition), so a k-way heap merge over the rows of a emits
/// the product already sorted; collisions are combined as they surface and
/// zeros dropped. Memory is O(|a| + |result|).
template <class M, class F>
SparseSum<M, F> graded_mul_sparse(const SparseSum<M, F>& a, const SparseSum<M, F>& b, const GradedMul<M, F>& m,
                                  OpCounter* counter = nullptr) {
  using Sum = SparseSum<M, F>;
  using I = typename M::index_type;
  detail::check_compatible(a, b);
  const auto& monoid = a.monoid();
  const auto& family = a.family();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.empty() || tb.empty()) return Sum(monoid, family);

  struct Cursor {
    I index;
    std::size_t row;
    std::size_t col;
  };
  auto later = [&](const Cursor& x, const Cursor& y) {
    auto c = monoid.compare(x.index, y.index);
    if (c != 0) return c > 0;
    return x.row > y.row;
  };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heap(later);
  for (std::size_t i = 0; i < ta.size(); ++i) heap.push({monoid.add(ta[i].index, tb[0].index), i, 0});

  std::vector<typename Sum::Term> out;
  while (!heap.empty()) {
    Cursor cur = heap.top();
    heap.pop();
    const auto& x = ta[cur.row];
    const auto& y = tb[cur.col];
    auto prod = m.star(x.index, x.coeff, y.index, y.coeff);
    if (counter) ++counter->multiplications;
    if (!out.empty() && out.back().index == cur.index) {
      out.back().coeff = family.add(cur.index, out.back().coeff, prod);
    } else {
      if (!out.empty() && family.is_zero(out.back().index, out.back().coeff)) out.pop_back();
      out.push_back({cur.index, std::move(prod)});
      if (counter) ++counter->positions;
    }
    if (cur.col + 1 < tb.size()) {
      heap.push({monoid.add(x.index, tb[cur.col + 1].index), cur.row, cur.col + 1});
    }
  }
  if (!out.empty() && family.is_zero(out.back().index, out.back().coeff)) out.pop_back();
  return Sum::from_canonical_terms(monoid, family, std::move(out));
}

/// Convolution: result[n] = sum_{i=0..n} star(i, f(i), n-i, g(n-i)).
/// Every position pair is visited; zeros are not skipped.
template <class F>
DenseSeq<F> graded_mul_dense(const DenseSeq<F>& f, const DenseSeq<F>& g, const GradedMul<NatMonoid, F>& m,
                             OpCounter* counter = nullptr) {
  using V = typename F::value_type;
  if (!(f.family() == g.family())) {
    throw Error(ErrorKind::RingMismatch, "operands have different coefficient families");
  }
  const auto& family = f.family();
  if (f.length() == 0 || g.length() == 0) return DenseSeq<F>(family);
  std::size_t n = f.length() + g.length() - 1;
  std::vector<V> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(family.zero(static_cast<std::uint64_t>(k)));
  if (counter) counter->positions += n;
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  for (std::size_t i = 0; i < fc.size(); ++i) {
    for (std::size_t j = 0; j < gc.size(); ++j) {
      std::uint64_t k = i + j;
      out[k] = family.add(k, out[k], m.star(i, fc[i], j, gc[j]));
    }
  }
  if (counter) counter->multiplications += static_cast<std::uint64_t>(fc.size()) * gc.size();
  return DenseSeq<F>(family, std::move(out));
}

}  // namespace cohring
