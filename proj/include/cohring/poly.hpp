#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cohring/dsum.hpp"
#include "cohring/graded.hpp"

namespace cohring {

/// R[X] as a sparse term list.
using UniSparse = SparseSum<NatMonoid, ConstantFamily>;
/// R[X] as a coefficient list; equality ignores trailing zeros.
using UniDense = DenseSeq<ConstantFamily>;
/// R[X1..Xk] over exponent vectors in grlex order.
using MultiPoly = SparseSum<ExpVecMonoid, ConstantFamily>;

/// Coefficient list whose last entry is nonzero; the zero polynomial is empty.
/// Structural equality is polynomial equality.
class UniNormal {
 public:
  explicit UniNormal(Ring ring) : ring_(std::move(ring)) {}
  /// Canonicalizes the coefficients and drops trailing zeros.
  UniNormal(Ring ring, std::vector<RingElem> coeffs);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<RingElem>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  friend bool operator==(const UniNormal&, const UniNormal&) = default;

 private:
  Ring ring_;
  std::vector<RingElem> coeffs_;
};

using UniPoly = std::variant<UniSparse, UniDense, UniNormal>;
enum class UniRepr { Sparse, Dense, Normal };

// Construction helpers.
UniSparse uni_sparse(const Ring& ring, std::vector<std::pair<std::uint64_t, RingElem>> terms);
UniDense uni_dense(const Ring& ring, std::vector<RingElem> coeffs);
MultiPoly multi_zero(const Ring& ring, std::size_t arity);
MultiPoly multi_term(const Ring& ring, ExpVec mono, RingElem c);
MultiPoly multi_constant(const Ring& ring, std::size_t arity, RingElem c);
/// The variable X_i (0-based) of R[X1..Xk].
MultiPoly multi_var(const Ring& ring, std::size_t arity, std::size_t i);

RingElem ring_pow(const Ring& ring, RingElem x, std::uint64_t e);

// Ring operations. Sparse products go through the graded construction with
// star = coefficient multiplication; dense ones through convolution.
UniSparse mul(const UniSparse& a, const UniSparse& b, OpCounter* counter = nullptr);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b, OpCounter* counter = nullptr);
UniDense mul(const UniDense& a, const UniDense& b, OpCounter* counter = nullptr);
UniNormal mul(const UniNormal& a, const UniNormal& b, OpCounter* counter = nullptr);
UniDense add(const UniDense& a, const UniDense& b);
UniNormal add(const UniNormal& a, const UniNormal& b);
UniDense neg(const UniDense& a);
UniNormal neg(const UniNormal& a);
/// c * x^shift * p
MultiPoly scale_shift(const MultiPoly& p, const RingElem& c, const ExpVec& shift);
MultiPoly pow(const MultiPoly& p, std::uint64_t e);

bool poly_equal(const UniDense& a, const UniDense& b);

// Evaluation.
RingElem uni_eval(const UniDense& p, const RingElem& x);    // Horner
RingElem uni_eval(const UniSparse& p, const RingElem& x);   // square-and-multiply per term
RingElem uni_eval(const UniNormal& p, const RingElem& x);
/// Throws ArityMismatch unless xs.size() equals the arity.
RingElem multi_eval(const MultiPoly& p, std::span<const RingElem> xs);

UniNormal normalize_dense(const UniDense& p);

struct DegreeLead {
  std::uint64_t degree;
  RingElem lead;
};
/// Throws Error(ZeroPolynomial) for the zero polynomial.
DegreeLead degree_and_lead(const UniNormal& p);

// Conversions between the univariate representations.
UniSparse to_sparse(const UniDense& p);
UniSparse to_sparse(const UniNormal& p);
UniDense to_dense(const UniNormal& p);
UniNormal to_normal(const UniSparse& p);
UniNormal to_normal(const UniDense& p);
UniPoly convert(const UniPoly& p, UniRepr target);

/// R[X] and R[X1] are the same ring up to relabeling the index.
MultiPoly to_multi(const UniSparse& p);
/// Throws ArityMismatch unless p has arity 1.
UniSparse to_uni(const MultiPoly& p);

// Rendering, ascending monomial order. Terms "c*X^e" joined by " + " (or
// " - " for negative integer coefficients); unit coefficients and exponents
// are elided; the zero polynomial is "0".
std::vector<std::string> default_var_names(std::size_t arity);
std::string render(const UniSparse& p, const std::string& var = "X");
std::string render(const MultiPoly& p, const std::vector<std::string>& vars);
std::string render(const MultiPoly& p);
std::string render_monomial(const ExpVec& m, const std::vector<std::string>& vars);
/// "[c0, c1, ...]"
std::string render(const UniDense& p);
std::string render(const UniNormal& p);

}  // namespace cohring
