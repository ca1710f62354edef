#include "cohring/poly.hpp"

#include <sstream>

namespace cohring {

UniNormal::UniNormal(Ring ring, std::vector<RingElem> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c = ring_.canonical(c);
  while (!coeffs_.empty() && ring_.is_zero(coeffs_.back())) coeffs_.pop_back();
}

UniSparse uni_sparse(const Ring& ring, std::vector<std::pair<std::uint64_t, RingElem>> terms) {
  std::vector<UniSparse::Term> t;
  t.reserve(terms.size());
  for (auto& [i, c] : terms) t.push_back({i, std::move(c)});
  return UniSparse::from_terms(NatMonoid{}, ConstantFamily{ring}, std::move(t));
}

UniDense uni_dense(const Ring& ring, std::vector<RingElem> coeffs) {
  return UniDense(ConstantFamily{ring}, std::move(coeffs));
}

MultiPoly multi_zero(const Ring& ring, std::size_t arity) {
  return MultiPoly(ExpVecMonoid{arity}, ConstantFamily{ring});
}

MultiPoly multi_term(const Ring& ring, ExpVec mono, RingElem c) {
  std::size_t arity = mono.size();
  return base(ExpVecMonoid{arity}, ConstantFamily{ring}, std::move(mono), std::move(c));
}

MultiPoly multi_constant(const Ring& ring, std::size_t arity, RingElem c) {
  return multi_term(ring, ExpVec(arity), std::move(c));
}

MultiPoly multi_var(const Ring& ring, std::size_t arity, std::size_t i) {
  ExpVec m(arity);
  m[i] = 1;
  return multi_term(ring, std::move(m), 1);
}

RingElem ring_pow(const Ring& ring, RingElem x, std::uint64_t e) {
  RingElem result = ring.one();
  while (e > 0) {
    if (e & 1) result = ring.mul(result, x);
    e >>= 1;
    if (e > 0) x = ring.mul(x, x);
  }
  return result;
}

UniSparse mul(const UniSparse& a, const UniSparse& b, OpCounter* counter) {
  return graded_mul_sparse(a, b, polynomial_mul(a.monoid(), a.family().ring), counter);
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b, OpCounter* counter) {
  return graded_mul_sparse(a, b, polynomial_mul(a.monoid(), a.family().ring), counter);
}

UniDense mul(const UniDense& a, const UniDense& b, OpCounter* counter) {
  return graded_mul_dense(a, b, polynomial_mul(NatMonoid{}, a.family().ring), counter);
}

UniNormal mul(const UniNormal& a, const UniNormal& b, OpCounter* counter) {
  if (!(a.ring() == b.ring())) throw Error(ErrorKind::RingMismatch, "operands have different coefficient rings");
  UniDense p = mul(to_dense(a), to_dense(b), counter);
  return normalize_dense(p);
}

UniDense add(const UniDense& a, const UniDense& b) { return dense_add(a, b); }

UniNormal add(const UniNormal& a, const UniNormal& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorKind::RingMismatch, "operands have different coefficient rings");
  return normalize_dense(dense_add(to_dense(a), to_dense(b)));
}

UniDense neg(const UniDense& a) { return dense_neg(a); }

UniNormal neg(const UniNormal& a) { return normalize_dense(dense_neg(to_dense(a))); }

MultiPoly scale_shift(const MultiPoly& p, const RingElem& c, const ExpVec& shift) {
  const Ring& ring = p.family().ring;
  p.monoid().check(shift);
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    RingElem v = ring.mul(t.coeff, c);
    if (!ring.is_zero(v)) out.push_back({t.index + shift, std::move(v)});
  }
  // Shifting by a fixed monomial preserves grlex order.
  return MultiPoly::from_canonical_terms(p.monoid(), p.family(), std::move(out));
}

MultiPoly pow(const MultiPoly& p, std::uint64_t e) {
  MultiPoly result = multi_constant(p.family().ring, p.monoid().arity, 1);
  MultiPoly b = p;
  while (e > 0) {
    if (e & 1) result = mul(result, b);
    e >>= 1;
    if (e > 0) b = mul(b, b);
  }
  return result;
}

bool poly_equal(const UniDense& a, const UniDense& b) { return dsum_equal(a, b); }

RingElem uni_eval(const UniDense& p, const RingElem& x) {
  const Ring& ring = p.family().ring;
  RingElem xc = ring.canonical(x);
  RingElem acc = ring.zero();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = ring.add(ring.mul(acc, xc), *it);
  return acc;
}

RingElem uni_eval(const UniSparse& p, const RingElem& x) {
  const Ring& ring = p.family().ring;
  RingElem xc = ring.canonical(x);
  RingElem acc = ring.zero();
  for (const auto& t : p.terms()) acc = ring.add(acc, ring.mul(t.coeff, ring_pow(ring, xc, t.index)));
  return acc;
}

RingElem uni_eval(const UniNormal& p, const RingElem& x) { return uni_eval(to_dense(p), x); }

RingElem multi_eval(const MultiPoly& p, std::span<const RingElem> xs) {
  if (xs.size() != p.monoid().arity) {
    throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(p.monoid().arity) + " values, got " +
                                              std::to_string(xs.size()));
  }
  const Ring& ring = p.family().ring;
  RingElem acc = ring.zero();
  for (const auto& t : p.terms()) {
    RingElem v = t.coeff;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (t.index[i] != 0) v = ring.mul(v, ring_pow(ring, ring.canonical(xs[i]), t.index[i]));
    }
    acc = ring.add(acc, v);
  }
  return acc;
}

UniNormal normalize_dense(const UniDense& p) {
  std::vector<RingElem> c(p.coeffs().begin(), p.coeffs().begin() + static_cast<std::ptrdiff_t>(p.effective_length()));
  return UniNormal(p.family().ring, std::move(c));
}

DegreeLead degree_and_lead(const UniNormal& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "the zero polynomial has no degree");
  return {p.coeffs().size() - 1, p.coeffs().back()};
}

UniSparse to_sparse(const UniDense& p) { return from_dense(p); }
UniSparse to_sparse(const UniNormal& p) { return from_dense(to_dense(p)); }
UniDense to_dense(const UniNormal& p) { return UniDense(ConstantFamily{p.ring()}, p.coeffs()); }
UniNormal to_normal(const UniSparse& p) { return normalize_dense(to_dense(p)); }
UniNormal to_normal(const UniDense& p) { return normalize_dense(p); }

UniPoly convert(const UniPoly& p, UniRepr target) {
  return std::visit(
      [&](const auto& q) -> UniPoly {
        using T = std::decay_t<decltype(q)>;
        switch (target) {
          case UniRepr::Sparse:
            if constexpr (std::is_same_v<T, UniSparse>) return q;
            else return to_sparse(q);
          case UniRepr::Dense:
            if constexpr (std::is_same_v<T, UniDense>) return q;
            else return to_dense(q);
          case UniRepr::Normal:
            if constexpr (std::is_same_v<T, UniNormal>) return q;
            else return to_normal(q);
        }
        return q;
      },
      p);
}

MultiPoly to_multi(const UniSparse& p) {
  std::vector<MultiPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({ExpVec{static_cast<std::uint32_t>(t.index)}, t.coeff});
  return MultiPoly::from_canonical_terms(ExpVecMonoid{1}, p.family(), std::move(out));
}

UniSparse to_uni(const MultiPoly& p) {
  if (p.monoid().arity != 1) throw Error(ErrorKind::ArityMismatch, "polynomial is not univariate");
  std::vector<UniSparse::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({t.index[0], t.coeff});
  return UniSparse::from_canonical_terms(NatMonoid{}, p.family(), std::move(out));
}

std::vector<std::string> default_var_names(std::size_t arity) {
  if (arity == 1) return {"X"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arity; ++i) names.push_back("X" + std::to_string(i + 1));
  return names;
}

std::string render_monomial(const ExpVec& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.at(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

namespace {

void append_term(std::string& out, const RingElem& c, const std::string& mono) {
  bool negative = c.sign() < 0;
  RingElem mag = negative ? -c : c;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.to_string();
  } else if (mag == RingElem(1)) {
    out += mono;
  } else {
    out += mag.to_string() + "*" + mono;
  }
}

}  // namespace

std::string render(const UniSparse& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) {
    std::string mono;
    if (t.index == 1) mono = var;
    else if (t.index > 1) mono = var + "^" + std::to_string(t.index);
    append_term(out, t.coeff, mono);
  }
  return out;
}

std::string render(const MultiPoly& p, const std::vector<std::string>& vars) {
  if (vars.size() != p.monoid().arity) {
    throw Error(ErrorKind::ArityMismatch, "variable list does not match the polynomial's arity");
  }
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms()) append_term(out, t.coeff, render_monomial(t.index, vars));
  return out;
}

std::string render(const MultiPoly& p) { return render(p, default_var_names(p.monoid().arity)); }

std::string render(const UniDense& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) os << ", ";
    os << p.coeffs()[i];
  }
  os << ']';
  return os.str();
}

std::string render(const UniNormal& p) { return render(to_dense(p)); }

}  // namespace cohring
