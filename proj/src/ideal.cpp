#include "cohring/ideal.hpp"

#include <algorithm>

namespace cohring {

std::strong_ordering mono_cmp(const MonomialOrder& order, const ExpVec& m1, const ExpVec& m2) {
  if (m1.size() != order.arity || m2.size() != order.arity) {
    throw Error(ErrorKind::ArityMismatch, "monomials do not match the order's arity");
  }
  return grlex_compare(m1, m2);
}

namespace {

void require_same_ring(const std::vector<MultiPoly>& gens) {
  for (const auto& g : gens) {
    if (!(g.monoid() == gens.front().monoid())) {
      throw Error(ErrorKind::ArityMismatch, "generators have different arities");
    }
    if (!(g.family() == gens.front().family())) {
      throw Error(ErrorKind::RingMismatch, "generators have different coefficient rings");
    }
  }
}

MultiPoly make_monic(const MultiPoly& g) {
  const Ring& ring = g.family().ring;
  auto inv = ring.try_invert(g.leading().coeff);
  if (!inv) {
    throw Error(ErrorKind::NonInvertibleLead,
                "leading coefficient " + g.leading().coeff.to_string() + " is not a unit in " + ring.to_string());
  }
  return scale_shift(g, *inv, ExpVec(g.monoid().arity));
}

MultiPoly drop_leading(const MultiPoly& p) {
  std::vector<MultiPoly::Term> t(p.terms().begin(), p.terms().end() - 1);
  return MultiPoly::from_canonical_terms(p.monoid(), p.family(), std::move(t));
}

void check_arity(const MultiPoly& p, const RewriteBasis& basis) {
  if (p.monoid().arity != basis.arity()) {
    throw Error(ErrorKind::ArityMismatch, "polynomial has arity " + std::to_string(p.monoid().arity) +
                                              ", ideal has arity " + std::to_string(basis.arity()));
  }
  if (!(p.family().ring == basis.ring())) {
    throw Error(ErrorKind::RingMismatch, "polynomial and ideal have different coefficient rings");
  }
}

MultiPoly reduce_field(const MultiPoly& p, const RewriteBasis& basis, const DivisorChooser* choose) {
  const auto& gens = basis.generators();
  MultiPoly work = p;
  std::vector<MultiPoly::Term> remainder;  // collected in decreasing order
  std::vector<std::size_t> candidates;
  while (!work.is_zero()) {
    const auto& lt = work.leading();
    candidates.clear();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].leading().index.divides(lt.index)) candidates.push_back(i);
    }
    if (candidates.empty()) {
      remainder.push_back(lt);
      work = drop_leading(work);
      continue;
    }
    std::size_t pick = choose ? candidates.at((*choose)(candidates)) : candidates.front();
    const MultiPoly& g = gens[pick];
    // g is monic, so the multiplier is the leading coefficient itself.
    work = dsum_sub(work, scale_shift(g, lt.coeff, lt.index - g.leading().index));
  }
  std::reverse(remainder.begin(), remainder.end());
  return MultiPoly::from_canonical_terms(p.monoid(), p.family(), std::move(remainder));
}

// gcd of the coefficients of all generators whose monomial divides m; 0 if none.
Integer term_modulus(const ExpVec& m, const RewriteBasis& basis) {
  Integer g = 0;
  for (const auto& gen : basis.generators()) {
    if (gen.leading().index.divides(m)) g = gcd(g, gen.leading().coeff);
  }
  return g;
}

MultiPoly reduce_terms(const MultiPoly& p, const RewriteBasis& basis) {
  std::vector<MultiPoly::Term> out;
  for (const auto& t : p.terms()) {
    Integer g = term_modulus(t.index, basis);
    Integer c = g.is_zero() ? t.coeff : floor_mod(t.coeff, g);
    if (!c.is_zero()) out.push_back({t.index, std::move(c)});
  }
  return MultiPoly::from_canonical_terms(p.monoid(), p.family(), std::move(out));
}

MultiPoly reduce_terms_stepwise(const MultiPoly& p, const RewriteBasis& basis, const DivisorChooser& choose) {
  const auto& gens = basis.generators();
  std::vector<MultiPoly::Term> out;
  std::vector<std::size_t> candidates;
  for (const auto& t : p.terms()) {
    Integer c = t.coeff;
    for (;;) {
      candidates.clear();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto& g = gens[i].leading();
        if (g.index.divides(t.index) && !(floor_mod(c, g.coeff) == c)) candidates.push_back(i);
      }
      if (candidates.empty()) break;
      c = floor_mod(c, gens[candidates.at(choose(candidates))].leading().coeff);
    }
    if (!c.is_zero()) out.push_back({t.index, std::move(c)});
  }
  return MultiPoly::from_canonical_terms(p.monoid(), p.family(), std::move(out));
}

}  // namespace

RewriteBasis::RewriteBasis(std::vector<MultiPoly> generators, ReductionMode mode)
    : ring_(Ring::integers()), arity_(0), mode_(mode) {
  if (generators.empty()) throw Error(ErrorKind::InvalidBasis, "an ideal basis needs at least one generator");
  require_same_ring(generators);
  ring_ = generators.front().family().ring;
  arity_ = generators.front().monoid().arity;
  for (const auto& g : generators) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroInput, "zero generator in ideal basis");
  }
  if (mode == ReductionMode::Field) {
    for (auto& g : generators) gens_.push_back(make_monic(g));
    return;
  }
  if (ring_.is_modular()) {
    throw Error(ErrorKind::ModeMismatch, "term-ideal reduction needs integer coefficients");
  }
  for (auto& g : generators) {
    if (g.size() != 1) throw Error(ErrorKind::ModeMismatch, "term-ideal generators must be single terms");
    const auto& t = g.leading();
    gens_.push_back(multi_term(ring_, t.index, abs(t.coeff)));
  }
}

RewriteBasis RewriteBasis::make(std::vector<MultiPoly> generators) {
  bool terms_only = !generators.empty() && std::all_of(generators.begin(), generators.end(), [](const MultiPoly& g) {
    return g.size() == 1 && !g.family().ring.is_modular();
  });
  return RewriteBasis(std::move(generators), terms_only ? ReductionMode::IntegerTermIdeal : ReductionMode::Field);
}

MultiPoly reduce(const MultiPoly& p, const RewriteBasis& basis) {
  check_arity(p, basis);
  if (basis.mode() == ReductionMode::Field) return reduce_field(p, basis, nullptr);
  return reduce_terms(p, basis);
}

MultiPoly reduce_with(const MultiPoly& p, const RewriteBasis& basis, const DivisorChooser& choose) {
  check_arity(p, basis);
  if (basis.mode() == ReductionMode::Field) return reduce_field(p, basis, &choose);
  return reduce_terms_stepwise(p, basis, choose);
}

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::ZeroInput, "S-polynomial of a zero polynomial");
  if (!(f.monoid() == g.monoid())) throw Error(ErrorKind::ArityMismatch, "operands differ in arity");
  MultiPoly fm = make_monic(f);
  MultiPoly gm = make_monic(g);
  ExpVec l = lcm(fm.leading().index, gm.leading().index);
  return dsum_sub(scale_shift(fm, 1, l - fm.leading().index), scale_shift(gm, 1, l - gm.leading().index));
}

std::optional<SPairWitness> find_nonreducing_spair(const RewriteBasis& basis) {
  if (basis.mode() != ReductionMode::Field) {
    throw Error(ErrorKind::ModeMismatch, "Buchberger's criterion applies to field-mode bases");
  }
  const auto& gens = basis.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      MultiPoly r = reduce(s_poly(gens[i], gens[j]), basis);
      if (!r.is_zero()) return SPairWitness{i, j, std::move(r)};
    }
  }
  return std::nullopt;
}

bool groebner_check(const RewriteBasis& basis) { return !find_nonreducing_spair(basis).has_value(); }

RewriteBasis groebner_complete(const RewriteBasis& basis, std::uint64_t degree_bound) {
  if (basis.mode() != ReductionMode::Field) {
    throw Error(ErrorKind::ModeMismatch, "completion applies to field-mode bases");
  }
  auto check_bound = [&](const MultiPoly& g) {
    if (g.leading().index.total_degree() > degree_bound) {
      throw Error(ErrorKind::DegreeBoundExceeded, "generator of total degree " +
                                                      std::to_string(g.leading().index.total_degree()) +
                                                      " exceeds the bound " + std::to_string(degree_bound));
    }
  };
  std::vector<MultiPoly> gens = basis.generators();
  for (const auto& g : gens) check_bound(g);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::size_t next = 0;
  while (next < pairs.size()) {
    auto [i, j] = pairs[next++];
    RewriteBasis current(gens, ReductionMode::Field);
    MultiPoly r = reduce(s_poly(gens[i], gens[j]), current);
    if (r.is_zero()) continue;
    check_bound(r);
    gens.push_back(make_monic(r));
    for (std::size_t k = 0; k + 1 < gens.size(); ++k) pairs.emplace_back(k, gens.size() - 1);
  }
  return RewriteBasis(std::move(gens), ReductionMode::Field);
}

QuotElem::QuotElem(std::shared_ptr<const RewriteBasis> basis, const MultiPoly& p)
    : basis_(std::move(basis)), rep_(reduce(p, *basis_)) {}

namespace {

void check_same_basis(const QuotElem& a, const QuotElem& b) {
  if (a.basis_ptr() != b.basis_ptr() && !(a.basis() == b.basis())) {
    throw Error(ErrorKind::BasisMismatch, "elements belong to different quotient rings");
  }
}

}  // namespace

QuotElem quot_add(const QuotElem& a, const QuotElem& b) {
  check_same_basis(a, b);
  return QuotElem(a.basis_ptr(), dsum_add(a.rep(), b.rep()));
}

QuotElem quot_sub(const QuotElem& a, const QuotElem& b) {
  check_same_basis(a, b);
  return QuotElem(a.basis_ptr(), dsum_sub(a.rep(), b.rep()));
}

QuotElem quot_neg(const QuotElem& a) { return QuotElem(a.basis_ptr(), dsum_neg(a.rep())); }

QuotElem quot_mul(const QuotElem& a, const QuotElem& b) {
  check_same_basis(a, b);
  return QuotElem(a.basis_ptr(), mul(a.rep(), b.rep()));
}

bool quot_equal(const QuotElem& a, const QuotElem& b) {
  check_same_basis(a, b);
  return a.rep() == b.rep();
}

std::vector<std::vector<NormalMonomial>> normal_monomial_basis(const RewriteBasis& basis,
                                                               std::span<const std::uint64_t> degree_map,
                                                               std::uint64_t up_to) {
  if (degree_map.size() != basis.arity()) {
    throw Error(ErrorKind::ArityMismatch, "degree map does not match the ideal's arity");
  }
  if (std::any_of(degree_map.begin(), degree_map.end(), [](std::uint64_t d) { return d == 0; })) {
    throw Error(ErrorKind::ConfigError, "every variable needs a positive degree");
  }
  if (basis.mode() == ReductionMode::Field && !groebner_check(basis)) {
    throw Error(ErrorKind::NotConfluent, "basis fails Buchberger's criterion; normal forms are not unique");
  }

  std::vector<std::vector<NormalMonomial>> out(up_to + 1);
  ExpVec m(basis.arity());
  std::function<void(std::size_t, std::uint64_t)> walk = [&](std::size_t var, std::uint64_t deg) {
    if (var == m.size()) {
      Integer order;
      if (basis.mode() == ReductionMode::Field) {
        for (const auto& g : basis.generators()) {
          if (g.leading().index.divides(m)) return;
        }
        order = basis.ring().characteristic();
      } else {
        order = term_modulus(m, basis);
        if (order == Integer(1)) return;
      }
      out[deg].push_back({m, order});
      return;
    }
    for (std::uint32_t e = 0; deg + e * degree_map[var] <= up_to; ++e) {
      m[var] = e;
      walk(var + 1, deg + e * degree_map[var]);
    }
    m[var] = 0;
  };
  walk(0, 0);
  for (auto& group : out) {
    std::sort(group.begin(), group.end(),
              [](const NormalMonomial& a, const NormalMonomial& b) { return grlex_compare(a.mono, b.mono) > 0; });
  }
  return out;
}

}  // namespace cohring
