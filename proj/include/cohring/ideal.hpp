#pragma once

// Ideals of R[X1..Xk] and the quotient rings they present.
//
// Two reduction engines share one basis type:
//   Field             generators are monic; reduce is multivariate division and
//                     is confluent once every S-polynomial reduces to zero.
//   IntegerTermIdeal  generators are single terms c*m over Z; a term whose
//                     monomial is divisible by generator monomials has its
//                     coefficient reduced modulo the gcd of their coefficients.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cohring/poly.hpp"

namespace cohring {

/// Graded lexicographic, X1 > X2 > ... > Xk.
struct MonomialOrder {
  std::size_t arity = 0;
};

/// Throws ArityMismatch when the vectors differ in length from each other or the order.
std::strong_ordering mono_cmp(const MonomialOrder& order, const ExpVec& m1, const ExpVec& m2);

enum class ReductionMode { Field, IntegerTermIdeal };

class RewriteBasis {
 public:
  /// Validates the generators for the requested mode. Field mode normalizes
  /// each generator to be monic (NonInvertibleLead if impossible). Term mode
  /// requires integer coefficients and one term per generator, and flips
  /// signs so every coefficient is positive. Zero generators are rejected.
  RewriteBasis(std::vector<MultiPoly> generators, ReductionMode mode);

  /// Term mode when every generator is a single term over Z, Field mode otherwise.
  static RewriteBasis make(std::vector<MultiPoly> generators);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t arity() const noexcept { return arity_; }
  ReductionMode mode() const noexcept { return mode_; }
  const std::vector<MultiPoly>& generators() const noexcept { return gens_; }

  friend bool operator==(const RewriteBasis& a, const RewriteBasis& b) {
    return a.mode_ == b.mode_ && a.gens_ == b.gens_;
  }

 private:
  Ring ring_;
  std::size_t arity_;
  ReductionMode mode_;
  std::vector<MultiPoly> gens_;
};

/// Given the (non-empty) list of generator indices whose leading monomial
/// divides the term being reduced, returns the position of the one to use.
using DivisorChooser = std::function<std::size_t(std::span<const std::size_t> candidates)>;

/// Normal form of p. Deterministic: the first matching generator in list order.
MultiPoly reduce(const MultiPoly& p, const RewriteBasis& basis);
/// Same, with an explicit divisor-selection strategy. In term mode the
/// strategy applies one generator at a time until nothing changes.
MultiPoly reduce_with(const MultiPoly& p, const RewriteBasis& basis, const DivisorChooser& choose);

/// Throws ZeroInput for a zero operand, NonInvertibleLead when a leading
/// coefficient is not a unit.
MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g);

struct SPairWitness {
  std::size_t i;
  std::size_t j;
  MultiPoly remainder;
};

/// First generator pair (i < j) whose S-polynomial does not reduce to zero.
/// Throws ModeMismatch for term-mode bases.
std::optional<SPairWitness> find_nonreducing_spair(const RewriteBasis& basis);
/// Buchberger's criterion.
bool groebner_check(const RewriteBasis& basis);

inline constexpr std::uint64_t kDefaultDegreeBound = 8;

/// Buchberger completion. The original (monic) generators come first, then
/// the added remainders in the order they were found. Throws
/// DegreeBoundExceeded if any generator, given or added, exceeds the bound.
RewriteBasis groebner_complete(const RewriteBasis& basis, std::uint64_t degree_bound = kDefaultDegreeBound);

/// Element of R[X1..Xk]/I, always stored as a normal form.
class QuotElem {
 public:
  QuotElem(std::shared_ptr<const RewriteBasis> basis, const MultiPoly& p);

  const MultiPoly& rep() const noexcept { return rep_; }
  const RewriteBasis& basis() const noexcept { return *basis_; }
  const std::shared_ptr<const RewriteBasis>& basis_ptr() const noexcept { return basis_; }

 private:
  std::shared_ptr<const RewriteBasis> basis_;
  MultiPoly rep_;
};

// All throw BasisMismatch when the operands live in different quotients.
QuotElem quot_add(const QuotElem& a, const QuotElem& b);
QuotElem quot_sub(const QuotElem& a, const QuotElem& b);
QuotElem quot_neg(const QuotElem& a);
QuotElem quot_mul(const QuotElem& a, const QuotElem& b);
bool quot_equal(const QuotElem& a, const QuotElem& b);

struct NormalMonomial {
  ExpVec mono;
  Integer order;  // additive order of the monomial's coefficient group; 0 = infinite

  friend bool operator==(const NormalMonomial&, const NormalMonomial&) = default;
};

/// Irreducible monomials grouped by weighted degree sum_i e_i * degree_map[i],
/// for every degree 0..up_to; each group is listed in decreasing monomial order.
/// Field mode requires groebner_check (NotConfluent otherwise) and reports the
/// ring characteristic as each monomial's order. Every entry of degree_map
/// must be positive.
std::vector<std::vector<NormalMonomial>> normal_monomial_basis(const RewriteBasis& basis,
                                                               std::span<const std::uint64_t> degree_map,
                                                               std::uint64_t up_to);

}  // namespace cohring
