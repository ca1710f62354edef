#include "cohring/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace cohring {

// ---------------------------------------------------------------------------
// Spaces and groups

std::optional<SpaceId> SpaceId::parse(std::string_view text) {
  if (text == "CP2") return cp2();
  if (text == "S2vS4") return s2v_s4();
  if (text == "K2") return k2();
  if (text == "RP2vS1") return rp2v_s1();
  if (text.size() < 2 || text.size() > 8 || text[0] != 'S' || text[1] == '0') return std::nullopt;
  unsigned n = 0;
  for (char c : text.substr(1)) {
    if (c < '0' || c > '9') return std::nullopt;
    n = n * 10 + static_cast<unsigned>(c - '0');
  }
  return sphere(n);
}

std::string SpaceId::to_string() const {
  switch (kind) {
    case Kind::Sphere: return "S" + std::to_string(dim);
    case Kind::CP2: return "CP2";
    case Kind::S2vS4: return "S2vS4";
    case Kind::K2: return "K2";
    case Kind::RP2vS1: return "RP2vS1";
  }
  return "?";
}

bool GroupPresentation::is_finite() const {
  return std::none_of(orders.begin(), orders.end(), [](const Integer& o) { return o.is_zero(); });
}

bool GroupPresentation::isomorphic_to(const GroupPresentation& other) const {
  auto a = orders;
  auto b = other.orders;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::string GroupPresentation::to_string() const {
  if (orders.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) out += " x ";
    out += orders[i].is_zero() ? "Z" : "Z" + orders[i].to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Presented rings

namespace {

const GroupPresentation kZeroGroup{};
const Coords kNoCoords{};

}  // namespace

PresentedGradedRing::PresentedGradedRing(Ring coeff, std::vector<GroupPresentation> groups)
    : coeff_(std::move(coeff)), groups_(std::move(groups)) {
  if (groups_.empty() || groups_[0].is_zero()) {
    throw Error(ErrorKind::InvalidBasis, "a graded ring needs a non-zero degree-0 group");
  }
  for (const auto& g : groups_) {
    if (g.names.size() != g.orders.size()) {
      throw Error(ErrorKind::InvalidBasis, "generator names and cyclic orders differ in length");
    }
    for (const auto& o : g.orders) {
      if (o == Integer(1) || o.sign() < 0) throw Error(ErrorKind::InvalidBasis, "cyclic orders must be 0 or >= 2");
    }
  }
  zeros_.resize(2 * groups_.size());
  for (std::size_t n = 0; n < groups_.size(); ++n) zeros_[n] = Coords(groups_[n].rank(), 0);
  for (std::uint64_t m = 0; m <= top_degree(); ++m) {
    for (std::size_t j = 0; j < groups_[m].rank(); ++j) {
      Coords e = unit_coords(m, j);
      products_[{0, 0, m, j}] = e;
      products_[{m, j, 0, 0}] = e;
    }
  }
}

const GroupPresentation& PresentedGradedRing::group(std::uint64_t n) const {
  return n <= top_degree() ? groups_[n] : kZeroGroup;
}

Coords PresentedGradedRing::canonical(std::uint64_t n, const Coords& coords) const {
  const auto& g = group(n);
  if (coords.size() != g.rank()) {
    throw Error(ErrorKind::IndexMismatch, "coordinate tuple of length " + std::to_string(coords.size()) +
                                              " in degree " + std::to_string(n) + " of rank " +
                                              std::to_string(g.rank()));
  }
  Coords out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    out[i] = g.orders[i].is_zero() ? coords[i] : floor_mod(coords[i], g.orders[i]);
  }
  return out;
}

Coords PresentedGradedRing::unit_coords(std::uint64_t n, std::size_t i) const {
  Coords c = zero(n);
  c.at(i) = 1;
  return canonical(n, c);
}

const Coords& PresentedGradedRing::product(std::uint64_t n, std::size_t i, std::uint64_t m, std::size_t j) const {
  auto it = products_.find({n, i, m, j});
  if (it != products_.end()) return it->second;
  return n + m <= top_degree() ? zeros_[n + m] : kNoCoords;
}

void PresentedGradedRing::set_product(std::uint64_t n, std::size_t i, std::uint64_t m, std::size_t j,
                                      const Coords& value) {
  if (i >= group(n).rank() || j >= group(m).rank()) {
    throw Error(ErrorKind::IndexMismatch, "no such generator");
  }
  products_[{n, i, m, j}] = canonical(n + m, value);
}

Coords GradedFamily::add(std::uint64_t n, const Coords& a, const Coords& b) const {
  Coords s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return ring->canonical(n, s);
}

Coords GradedFamily::neg(std::uint64_t n, const Coords& a) const {
  Coords s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
  return ring->canonical(n, s);
}

bool GradedFamily::is_zero(std::uint64_t, const Coords& a) const {
  return std::all_of(a.begin(), a.end(), [](const Integer& v) { return v.is_zero(); });
}

GradedMul<NatMonoid, GradedFamily> cup_mul(const std::shared_ptr<const PresentedGradedRing>& ring) {
  auto star = [ring](const std::uint64_t& n, const Coords& x, const std::uint64_t& m, const Coords& y) {
    Coords acc = ring->zero(n + m);
    if (acc.empty()) return acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        const Coords& c = ring->product(n, i, m, j);
        Integer xy = x[i] * y[j];
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += xy * c[k];
      }
    }
    return ring->canonical(n + m, acc);
  };
  return {star, 0, ring->unit_coords(0, 0)};
}

GradedElem graded_zero(const std::shared_ptr<const PresentedGradedRing>& ring) {
  return GradedElem(NatMonoid{}, GradedFamily{ring});
}

GradedElem graded_gen(const std::shared_ptr<const PresentedGradedRing>& ring, std::uint64_t n, std::size_t i,
                      const Integer& c) {
  Coords v = ring->zero(n);
  v.at(i) = c;
  return base(NatMonoid{}, GradedFamily{ring}, n, std::move(v));
}

GradedElem graded_scale(const GradedElem& a, const Integer& c) {
  std::vector<GradedElem::Term> out;
  for (const auto& t : a.terms()) {
    Coords v = t.coeff;
    for (auto& x : v) x *= c;
    out.push_back({t.index, std::move(v)});
  }
  return GradedElem::from_terms(a.monoid(), a.family(), std::move(out));
}

GradedElem cup(const GradedElem& a, const GradedElem& b) {
  return graded_mul_sparse(a, b, cup_mul(a.family().ring));
}

std::string render(const GradedElem& a) {
  if (a.is_zero()) return "0";
  std::string out;
  const auto& ring = *a.family().ring;
  for (const auto& t : a.terms()) {
    const auto& g = ring.group(t.index);
    for (std::size_t i = 0; i < t.coeff.size(); ++i) {
      const Integer& c = t.coeff[i];
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (!(c == Integer(1))) out += c.to_string() + "*";
      out += g.names[i];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

constexpr unsigned kMaxSphereDim = 4096;

GroupPresentation cyclic_group(std::vector<std::pair<Integer, std::string>> factors) {
  GroupPresentation g;
  for (auto& [o, name] : factors) {
    g.orders.push_back(o);
    g.names.push_back(std::move(name));
  }
  return g;
}

MultiPoly mono(const Ring& ring, std::vector<std::uint32_t> e, Integer c = 1) {
  return multi_term(ring, ExpVec(std::move(e)), std::move(c));
}

CatalogEntry assemble(SpaceId space, const Ring& ring, std::shared_ptr<const PresentedGradedRing> graded,
                      std::vector<std::string> vars, std::vector<std::uint64_t> degrees,
                      std::vector<MultiPoly> ideal, std::string text, std::vector<VarImage> psi_vars,
                      std::vector<std::vector<MultiPoly>> psi_inv) {
  CatalogEntry e;
  e.space = space;
  e.coeff = ring.descriptor();
  e.ring = std::move(graded);
  e.quotient.vars = std::move(vars);
  e.quotient.degrees = std::move(degrees);
  e.quotient.basis = std::make_shared<const RewriteBasis>(RewriteBasis::make(std::move(ideal)));
  e.quotient.text = std::move(text);
  e.psi_on_vars = std::move(psi_vars);
  e.psi_inv_on_gens = std::move(psi_inv);
  return e;
}

// Z[X]/(X^2) with deg X = n; the cohomology of S^n is Z in degrees 0 and n.
CatalogEntry sphere_entry(unsigned n) {
  Ring z = Ring::integers();
  std::vector<GroupPresentation> groups(n + 1);
  groups[0] = cyclic_group({{0, "eta"}});
  groups[n] = cyclic_group({{0, "sigma"}});
  auto graded = std::make_shared<PresentedGradedRing>(z, std::move(groups));
  std::vector<std::vector<MultiPoly>> inv(n + 1);
  inv[0] = {mono(z, {0})};
  inv[n] = {mono(z, {1})};
  return assemble(SpaceId::sphere(n), z, graded, {"X"}, {n}, {mono(z, {2})}, "Z[X]/(X^2)", {{n, {1}}},
                  std::move(inv));
}

CatalogEntry cp2_entry() {
  Ring z = Ring::integers();
  auto graded = std::make_shared<PresentedGradedRing>(
      z, std::vector<GroupPresentation>{cyclic_group({{0, "eta"}}), {}, cyclic_group({{0, "alpha"}}), {},
                                        cyclic_group({{0, "beta"}})});
  graded->set_product(2, 0, 2, 0, {1});  // alpha * alpha = beta
  return assemble(SpaceId::cp2(), z, graded, {"X"}, {2}, {mono(z, {3})}, "Z[X]/(X^3)", {{2, {1}}},
                  {{mono(z, {0})}, {}, {mono(z, {1})}, {}, {mono(z, {2})}});
}

CatalogEntry s2v_s4_entry() {
  Ring z = Ring::integers();
  auto graded = std::make_shared<PresentedGradedRing>(
      z, std::vector<GroupPresentation>{cyclic_group({{0, "eta"}}), {}, cyclic_group({{0, "alpha"}}), {},
                                        cyclic_group({{0, "beta"}})});
  // every product of positive-degree classes vanishes
  return assemble(SpaceId::s2v_s4(), z, graded, {"X", "Y"}, {2, 4},
                  {mono(z, {2, 0}), mono(z, {1, 1}), mono(z, {0, 2})}, "Z[X,Y]/(X^2, X*Y, Y^2)",
                  {{2, {1}}, {4, {1}}}, {{mono(z, {0, 0})}, {}, {mono(z, {1, 0})}, {}, {mono(z, {0, 1})}});
}

// K^2 and RP^2 v S^1 share their integral ring: Z, Z, Z/2 with vanishing
// H^1 x H^1 -> H^2.
CatalogEntry integral_klein_like(SpaceId space) {
  Ring z = Ring::integers();
  auto graded = std::make_shared<PresentedGradedRing>(
      z, std::vector<GroupPresentation>{cyclic_group({{0, "eta"}}), cyclic_group({{0, "alpha"}}),
                                        cyclic_group({{2, "gamma"}})});
  return assemble(space, z, graded, {"X", "Y"}, {1, 2},
                  {mono(z, {2, 0}), mono(z, {1, 1}), mono(z, {0, 1}, 2), mono(z, {0, 2})},
                  "Z[X,Y]/(X^2, X*Y, 2*Y, Y^2)", {{1, {1}}, {2, {1}}},
                  {{mono(z, {0, 0})}, {mono(z, {1, 0})}, {mono(z, {0, 1})}});
}

CatalogEntry k2_mod2_entry() {
  Ring f2 = Ring::modular(2);
  auto graded = std::make_shared<PresentedGradedRing>(
      f2, std::vector<GroupPresentation>{cyclic_group({{2, "eta1"}}), cyclic_group({{2, "alpha1"}, {2, "beta1"}}),
                                         cyclic_group({{2, "gamma1"}})});
  graded->set_product(1, 0, 1, 0, {1});  // alpha1^2 = gamma1
  graded->set_product(1, 0, 1, 1, {1});  // alpha1 beta1 = gamma1
  graded->set_product(1, 1, 1, 0, {1});  // beta1 alpha1 = gamma1
  graded->set_product(1, 1, 1, 1, {0});  // beta1^2 = 0
  return assemble(SpaceId::k2(), f2, graded, {"X", "Y"}, {1, 1},
                  {mono(f2, {3, 0}), mono(f2, {0, 2}), dsum_add(mono(f2, {2, 0}), mono(f2, {1, 1}))},
                  "Z2[X,Y]/(X^3, Y^2, X^2 + X*Y)", {{1, {1, 0}}, {1, {0, 1}}},
                  {{mono(f2, {0, 0})}, {mono(f2, {1, 0}), mono(f2, {0, 1})}, {mono(f2, {1, 1})}});
}

CatalogEntry rp2v_s1_mod2_entry() {
  Ring f2 = Ring::modular(2);
  auto graded = std::make_shared<PresentedGradedRing>(
      f2, std::vector<GroupPresentation>{cyclic_group({{2, "eta2"}}), cyclic_group({{2, "alpha2"}, {2, "beta2"}}),
                                         cyclic_group({{2, "gamma2"}})});
  graded->set_product(1, 0, 1, 0, {1});  // alpha2^2 = gamma2
  return assemble(SpaceId::rp2v_s1(), f2, graded, {"X", "Y"}, {1, 1},
                  {mono(f2, {3, 0}), mono(f2, {0, 2}), mono(f2, {1, 1})}, "Z2[X,Y]/(X^3, Y^2, X*Y)",
                  {{1, {1, 0}}, {1, {0, 1}}},
                  {{mono(f2, {0, 0})}, {mono(f2, {1, 0}), mono(f2, {0, 1})}, {mono(f2, {2, 0})}});
}

[[noreturn]] void unsupported() {
  throw Error(ErrorKind::UnsupportedPair, "unsupported coefficient for this space");
}

}  // namespace

CatalogEntry catalog_get(const SpaceId& space, const RingDescriptor& coeff) {
  bool integral = coeff.kind == RingKind::Integers;
  bool mod2 = coeff.kind == RingKind::Modular && coeff.modulus == Integer(2);
  switch (space.kind) {
    case SpaceId::Kind::Sphere:
      if (space.dim < 1 || space.dim > kMaxSphereDim) {
        throw Error(ErrorKind::UnsupportedPair, "sphere dimension must be between 1 and " +
                                                    std::to_string(kMaxSphereDim));
      }
      if (integral) return sphere_entry(space.dim);
      break;
    case SpaceId::Kind::CP2:
      if (integral) return cp2_entry();
      break;
    case SpaceId::Kind::S2vS4:
      if (integral) return s2v_s4_entry();
      break;
    case SpaceId::Kind::K2:
      if (integral) return integral_klein_like(space);
      if (mod2) return k2_mod2_entry();
      break;
    case SpaceId::Kind::RP2vS1:
      if (integral) return integral_klein_like(space);
      if (mod2) return rp2v_s1_mod2_entry();
      break;
  }
  unsupported();
}

std::vector<std::pair<SpaceId, RingDescriptor>> catalog_rows() {
  auto z = RingDescriptor::integers();
  auto z2 = RingDescriptor::modular(2);
  return {{SpaceId::sphere(1), z}, {SpaceId::cp2(), z},     {SpaceId::s2v_s4(), z},  {SpaceId::k2(), z},
          {SpaceId::k2(), z2},     {SpaceId::rp2v_s1(), z}, {SpaceId::rp2v_s1(), z2}};
}

GroupPresentation h_group(const SpaceId& space, const RingDescriptor& coeff, std::uint64_t n) {
  return catalog_get(space, coeff).ring->group(n);
}

// ---------------------------------------------------------------------------
// psi and its inverse

QuotElem make_quot(const CatalogEntry& e, const MultiPoly& p) { return QuotElem(e.quotient.basis, p); }

GradedElem psi_poly(const CatalogEntry& e, const MultiPoly& p) {
  const auto& vars = e.quotient.vars;
  if (p.monoid().arity != vars.size()) {
    throw Error(ErrorKind::ArityMismatch, "polynomial arity does not match the presentation");
  }
  std::vector<GradedElem> images;
  for (const auto& v : e.psi_on_vars) images.push_back(base(NatMonoid{}, GradedFamily{e.ring}, v.degree, v.coords));
  GradedElem acc = graded_zero(e.ring);
  for (const auto& t : p.terms()) {
    GradedElem img = graded_gen(e.ring, 0, 0);
    for (std::size_t v = 0; v < vars.size() && !img.is_zero(); ++v) {
      for (std::uint32_t k = 0; k < t.index[v] && !img.is_zero(); ++k) img = cup(img, images[v]);
    }
    acc = dsum_add(acc, graded_scale(img, t.coeff));
  }
  return acc;
}

GradedElem psi(const CatalogEntry& e, const QuotElem& p) {
  if (p.basis_ptr() != e.quotient.basis && !(p.basis() == *e.quotient.basis)) {
    throw Error(ErrorKind::BasisMismatch, "element is not in this entry's quotient ring");
  }
  return psi_poly(e, p.rep());
}

QuotElem psi_inv(const CatalogEntry& e, const GradedElem& g) {
  if (g.family().ring != e.ring) throw Error(ErrorKind::BasisMismatch, "element is not in this entry's ring");
  const Ring& ring = e.quotient.basis->ring();
  MultiPoly acc = multi_zero(ring, e.quotient.vars.size());
  for (const auto& t : g.terms()) {
    for (std::size_t i = 0; i < t.coeff.size(); ++i) {
      if (t.coeff[i].is_zero()) continue;
      const MultiPoly& image = e.psi_inv_on_gens.at(t.index).at(i);
      acc = dsum_add(acc, scale_shift(image, ring.canonical(t.coeff[i]), ExpVec(acc.monoid().arity)));
    }
  }
  return make_quot(e, acc);
}

// ---------------------------------------------------------------------------
// Verification

namespace {

constexpr std::size_t kMaxExhaustive = 4096;

// Every coefficient assignment over a list of cyclic orders, or nullopt if the
// product of the orders is infinite or too large.
std::optional<std::vector<std::vector<Integer>>> enumerate_all(const std::vector<Integer>& orders) {
  std::size_t total = 1;
  for (const auto& o : orders) {
    if (o.is_zero() || !o.fits_int64() || o.to_int64() > static_cast<std::int64_t>(kMaxExhaustive)) {
      return std::nullopt;
    }
    total *= static_cast<std::size_t>(o.to_int64());
    if (total > kMaxExhaustive) return std::nullopt;
  }
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> cur(orders.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    out.push_back(cur);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      cur[i] += 1;
      if (cur[i] < orders[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

std::vector<Integer> random_coeffs(const std::vector<Integer>& orders, std::mt19937_64& rng) {
  std::vector<Integer> c;
  for (const auto& o : orders) {
    if (o.is_zero()) {
      c.push_back(std::uniform_int_distribution<std::int64_t>(-20, 20)(rng));
    } else {
      c.push_back(std::uniform_int_distribution<std::int64_t>(0, o.to_int64() - 1)(rng));
    }
  }
  return c;
}

std::vector<Integer> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Integer> v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

IsoReport verify_iso(const CatalogEntry& e, std::size_t samples, std::uint64_t seed) {
  IsoReport report;
  // a few witnesses per kind of failure
  std::map<std::string_view, int> seen;
  auto fail = [&](std::string_view kind, std::string msg) {
    report.passed = false;
    if (seen[kind]++ < 3) report.failures.push_back(std::move(msg));
  };
  const auto& basis = *e.quotient.basis;
  const auto& vars = e.quotient.vars;
  const Ring& ring = basis.ring();
  const std::size_t arity = vars.size();
  auto show = [&](const MultiPoly& p) { return render(p, vars); };

  // psi respects the grading on variables.
  for (std::size_t v = 0; v < e.psi_on_vars.size(); ++v) {
    if (e.psi_on_vars[v].degree != e.quotient.degrees.at(v)) {
      fail("degree", "psi(" + vars[v] + ") lands in degree " + std::to_string(e.psi_on_vars[v].degree) +
           " but the variable has degree " + std::to_string(e.quotient.degrees[v]));
    }
  }

  // psi vanishes on the ideal.
  for (const auto& g : basis.generators()) {
    GradedElem img = psi_poly(e, g);
    if (!img.is_zero()) fail("ideal", "psi does not vanish on generator " + show(g) + ": psi = " + render(img));
  }

  // Normal monomials reproduce the groups.
  std::uint64_t max_var_degree = *std::max_element(e.quotient.degrees.begin(), e.quotient.degrees.end());
  std::uint64_t up_to = e.ring->top_degree() + max_var_degree;
  auto staircase = normal_monomial_basis(basis, e.quotient.degrees, up_to);
  std::vector<ExpVec> monos;
  std::vector<Integer> mono_orders;
  bool groups_match = true;
  for (std::uint64_t n = 0; n <= up_to; ++n) {
    GroupPresentation from_quotient;
    for (const auto& nm : staircase[n]) {
      from_quotient.orders.push_back(nm.order);
      from_quotient.names.push_back(render_monomial(nm.mono, vars));
      monos.push_back(nm.mono);
      mono_orders.push_back(nm.order);
    }
    if (n <= e.ring->top_degree()) report.quotient_groups.push_back(from_quotient.to_string());
    if (!from_quotient.isomorphic_to(e.ring->group(n))) {
      groups_match = false;
      fail("groups", "degree " + std::to_string(n) + ": quotient gives " + from_quotient.to_string() + ", cohomology is " +
           e.ring->group(n).to_string());
    }
  }
  if (!groups_match) return report;

  auto quot_from = [&](const std::vector<Integer>& c) {
    MultiPoly p = multi_zero(ring, arity);
    for (std::size_t k = 0; k < c.size(); ++k) p = dsum_add(p, multi_term(ring, monos[k], c[k]));
    return make_quot(e, p);
  };
  std::vector<Integer> graded_orders;
  std::vector<std::pair<std::uint64_t, std::size_t>> graded_slots;
  for (std::uint64_t n = 0; n <= e.ring->top_degree(); ++n) {
    for (std::size_t i = 0; i < e.ring->group(n).rank(); ++i) {
      graded_orders.push_back(e.ring->group(n).orders[i]);
      graded_slots.emplace_back(n, i);
    }
  }
  auto graded_from = [&](const std::vector<Integer>& c) {
    GradedElem g = graded_zero(e.ring);
    for (std::size_t k = 0; k < c.size(); ++k) {
      g = dsum_add(g, graded_gen(e.ring, graded_slots[k].first, graded_slots[k].second, c[k]));
    }
    return g;
  };

  std::mt19937_64 rng(seed);
  std::vector<QuotElem> elements;
  std::vector<GradedElem> graded;
  auto all_quot = enumerate_all(mono_orders);
  auto all_graded = enumerate_all(graded_orders);
  report.exhaustive = all_quot.has_value() && all_graded.has_value();
  if (report.exhaustive) {
    for (const auto& c : *all_quot) elements.push_back(quot_from(c));
    for (const auto& c : *all_graded) graded.push_back(graded_from(c));
  } else {
    for (std::size_t k = 0; k < monos.size(); ++k) elements.push_back(quot_from(unit_vector(monos.size(), k)));
    for (std::size_t k = 0; k < graded_slots.size(); ++k) {
      graded.push_back(graded_from(unit_vector(graded_slots.size(), k)));
    }
    for (std::size_t s = 0; s < samples; ++s) {
      elements.push_back(quot_from(random_coeffs(mono_orders, rng)));
      graded.push_back(graded_from(random_coeffs(graded_orders, rng)));
    }
  }

  std::vector<GradedElem> images;
  for (const auto& p : elements) {
    images.push_back(psi(e, p));
    QuotElem back = psi_inv(e, images.back());
    if (!quot_equal(back, p)) {
      fail("left inverse", "psi_inv(psi(p)) != p for p = " + show(p.rep()) + ": got " + show(back.rep()));
    }
    ++report.elements_checked;
  }
  for (const auto& g : graded) {
    GradedElem back = psi(e, psi_inv(e, g));
    if (!(back == g)) fail("right inverse", "psi(psi_inv(g)) != g for g = " + render(g) + ": got " + render(back));
    ++report.graded_checked;
  }

  auto check_pair = [&](std::size_t a, std::size_t b) {
    const QuotElem& p = elements[a];
    const QuotElem& q = elements[b];
    GradedElem sum = psi(e, quot_add(p, q));
    if (!(sum == dsum_add(images[a], images[b]))) {
      fail("additive", "psi(p + q) != psi(p) + psi(q) for p = " + show(p.rep()) + ", q = " + show(q.rep()));
    }
    GradedElem prod = psi(e, quot_mul(p, q));
    GradedElem expected = cup(images[a], images[b]);
    if (!(prod == expected)) {
      fail("multiplicative", "psi(p * q) != psi(p) * psi(q) for p = " + show(p.rep()) + ", q = " + show(q.rep()) + ": " +
           render(prod) + " vs " + render(expected));
    }
    ++report.products_checked;
  };
  if (report.exhaustive) {
    for (std::size_t a = 0; a < elements.size(); ++a) {
      for (std::size_t b = 0; b < elements.size(); ++b) check_pair(a, b);
    }
  } else {
    std::size_t gens = monos.size();
    for (std::size_t a = 0; a < gens; ++a) {
      for (std::size_t b = 0; b < gens; ++b) check_pair(a, b);
    }
    std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
    for (std::size_t s = 0; s < samples; ++s) check_pair(pick(rng), pick(rng));
  }
  return report;
}

std::optional<std::string> check_cup_laws(const PresentedGradedRing& ring) {
  std::shared_ptr<const PresentedGradedRing> handle(&ring, [](const PresentedGradedRing*) {});
  std::vector<GradedElem> gens;
  for (std::uint64_t n = 0; n <= ring.top_degree(); ++n) {
    for (std::size_t i = 0; i < ring.group(n).rank(); ++i) gens.push_back(graded_gen(handle, n, i));
  }
  GradedElem one = graded_gen(handle, 0, 0);
  GradedElem zero = graded_zero(handle);
  for (const auto& a : gens) {
    if (!(cup(one, a) == a) || !(cup(a, one) == a)) return "unit law fails for " + render(a);
    if (!cup(zero, a).is_zero() || !cup(a, zero).is_zero()) return "zero does not annihilate " + render(a);
  }
  for (const auto& a : gens) {
    for (const auto& b : gens) {
      GradedElem ab = cup(a, b);
      for (const auto& c : gens) {
        if (!(cup(ab, c) == cup(a, cup(b, c)))) {
          return "associativity fails for (" + render(a) + ", " + render(b) + ", " + render(c) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

bool cup_trivial(const PresentedGradedRing& ring, std::uint64_t n, std::uint64_t m) {
  for (std::size_t i = 0; i < ring.group(n).rank(); ++i) {
    for (std::size_t j = 0; j < ring.group(m).rank(); ++j) {
      const Coords& c = ring.product(n, i, m, j);
      if (std::any_of(c.begin(), c.end(), [](const Integer& v) { return !v.is_zero(); })) return false;
    }
  }
  return true;
}

bool cup_trivial(const CatalogEntry& e, std::uint64_t n, std::uint64_t m) { return cup_trivial(*e.ring, n, m); }

bool graded_comm_check(const PresentedGradedRing& ring) {
  for (std::uint64_t n = 0; n <= ring.top_degree(); ++n) {
    for (std::uint64_t m = 0; m <= ring.top_degree(); ++m) {
      bool odd = (n * m) % 2 == 1;
      for (std::size_t i = 0; i < ring.group(n).rank(); ++i) {
        for (std::size_t j = 0; j < ring.group(m).rank(); ++j) {
          Coords ab = ring.product(n, i, m, j);
          Coords ba = ring.product(m, j, n, i);
          if (odd) {
            for (auto& v : ba) v = -v;
          }
          if (ab.empty()) continue;
          if (!(ring.canonical(n + m, ab) == ring.canonical(n + m, ba))) return false;
        }
      }
    }
  }
  return true;
}

bool graded_comm_check(const CatalogEntry& e) { return graded_comm_check(*e.ring); }

// ---------------------------------------------------------------------------
// Isomorphism search

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

std::int64_t common_prime(const PresentedGradedRing& a, const PresentedGradedRing& b) {
  const Ring& ra = a.coeff_ring();
  if (!ra.is_field() || !(ra == b.coeff_ring()) || !ra.characteristic().fits_int64()) {
    throw Error(ErrorKind::NotFinite, "isomorphism search needs both rings over the same prime field");
  }
  std::int64_t p = ra.characteristic().to_int64();
  for (const auto* r : {&a, &b}) {
    for (std::uint64_t n = 0; n <= r->top_degree(); ++n) {
      for (const auto& o : r->group(n).orders) {
        if (!(o == Integer(p))) throw Error(ErrorKind::NotFinite, "a cohomology group is not a vector space over Z/p");
      }
    }
  }
  return p;
}

bool invertible_mod(Matrix m, std::int64_t p) {
  std::size_t d = m.size();
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col] == 0) ++piv;
    if (piv == d) return false;
    std::swap(m[piv], m[col]);
    auto inv = mod_inverse(m[col][col], p);
    for (std::size_t r = col + 1; r < d; ++r) {
      std::int64_t f = (m[r][col] * inv->to_int64()) % p;
      for (std::size_t k = col; k < d; ++k) m[r][k] = ((m[r][k] - f * m[col][k]) % p + p) % p;
    }
  }
  return true;
}

std::vector<Matrix> invertible_matrices(std::size_t d, std::int64_t p, bool fix_unit) {
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < d * d; ++k) {
    total *= static_cast<std::uint64_t>(p);
    if (total > kMaxIsoSearchSpace) {
      throw Error(ErrorKind::SearchSpaceTooLarge, "too many candidate maps in one degree");
    }
  }
  std::vector<Matrix> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix m(d, std::vector<std::int64_t>(d));
    std::uint64_t c = code;
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t k = 0; k < d; ++k) {
        m[r][k] = static_cast<std::int64_t>(c % static_cast<std::uint64_t>(p));
        c /= static_cast<std::uint64_t>(p);
      }
    }
    if (fix_unit) {
      bool ok = m[0][0] == 1;
      for (std::size_t r = 1; r < d; ++r) ok = ok && m[r][0] == 0;
      if (!ok) continue;
    }
    if (invertible_mod(m, p)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::int64_t> as_small(const Coords& c) {
  std::vector<std::int64_t> out;
  for (const auto& v : c) out.push_back(v.to_int64());
  return out;
}

}  // namespace

IsoSearchResult iso_search_finite(const PresentedGradedRing& a, const PresentedGradedRing& b) {
  std::int64_t p = common_prime(a, b);
  IsoSearchResult result;
  std::uint64_t top = std::max(a.top_degree(), b.top_degree());
  for (std::uint64_t n = 0; n <= top; ++n) {
    if (a.group(n).rank() != b.group(n).rank()) {
      result.dimension_obstruction = true;
      return result;
    }
  }

  std::vector<std::vector<Matrix>> choices(top + 1);
  std::uint64_t space = 1;
  for (std::uint64_t n = 0; n <= top; ++n) {
    choices[n] = invertible_matrices(a.group(n).rank(), p, n == 0);
    space *= std::max<std::uint64_t>(choices[n].size(), 1);
    if (space > kMaxIsoSearchSpace) throw Error(ErrorKind::SearchSpaceTooLarge, "isomorphism search space too large");
  }
  if (std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); })) {
    // only possible for rank-0 degrees, which have exactly one (empty) map
    for (auto& c : choices) {
      if (c.empty()) c.push_back(Matrix{});
    }
  }

  std::vector<std::size_t> pick(top + 1, 0);
  auto apply = [&](std::uint64_t n, const std::vector<std::int64_t>& v) {
    const Matrix& m = choices[n][pick[n]];
    std::vector<std::int64_t> out(v.size(), 0);
    for (std::size_t r = 0; r < v.size(); ++r) {
      for (std::size_t k = 0; k < v.size(); ++k) out[r] = (out[r] + m[r][k] * v[k]) % p;
    }
    return out;
  };
  auto multiplicative = [&]() {
    for (std::uint64_t n = 0; n <= top; ++n) {
      for (std::uint64_t m = 0; n + m <= top; ++m) {
        std::size_t dn = a.group(n).rank(), dm = a.group(m).rank(), dt = a.group(n + m).rank();
        if (dt == 0) continue;
        const Matrix& fn = choices[n][pick[n]];
        const Matrix& fm = choices[m][pick[m]];
        for (std::size_t i = 0; i < dn; ++i) {
          for (std::size_t j = 0; j < dm; ++j) {
            auto lhs = apply(n + m, as_small(a.product(n, i, m, j)));
            std::vector<std::int64_t> rhs(dt, 0);
            for (std::size_t r = 0; r < dn; ++r) {
              for (std::size_t s = 0; s < dm; ++s) {
                std::int64_t w = (fn[r][i] * fm[s][j]) % p;
                if (w == 0) continue;
                auto c = as_small(b.product(n, r, m, s));
                for (std::size_t k = 0; k < dt; ++k) rhs[k] = (rhs[k] + w * c[k]) % p;
              }
            }
            if (lhs != rhs) return false;
          }
        }
      }
    }
    return true;
  };

  for (;;) {
    ++result.candidates_examined;
    if (multiplicative()) {
      GradedIso iso;
      for (std::uint64_t n = 0; n <= top; ++n) {
        std::vector<std::vector<Integer>> mat;
        for (const auto& row : choices[n][pick[n]]) mat.emplace_back(row.begin(), row.end());
        iso.push_back(std::move(mat));
      }
      result.iso = std::move(iso);
      return result;
    }
    std::size_t n = 0;
    while (n <= top) {
      if (++pick[n] < choices[n].size()) break;
      pick[n] = 0;
      ++n;
    }
    if (n > top) return result;
  }
}

// ---------------------------------------------------------------------------
// Distinguishing spaces

std::string Verdict::to_string() const {
  switch (kind) {
    case Kind::DistinctByGroups:
      return "distinct (cohomology groups differ in degree " + std::to_string(n) + ")";
    case Kind::DistinctByCup:
      return "distinct (cup product H^" + std::to_string(n) + " x H^" + std::to_string(m) +
             " is trivial for exactly one space)";
    case Kind::DistinctByIsoSearch:
      return "distinct (no graded ring isomorphism exists)";
    case Kind::IndistinguishableByImplementedInvariants:
      return "indistinguishable by implemented invariants";
  }
  return "?";
}

Verdict distinguish(const SpaceId& s1, const SpaceId& s2, const RingDescriptor& coeff) {
  CatalogEntry a = catalog_get(s1, coeff);
  CatalogEntry b = catalog_get(s2, coeff);
  std::uint64_t top = std::max(a.ring->top_degree(), b.ring->top_degree());
  for (std::uint64_t n = 0; n <= top; ++n) {
    if (!a.ring->group(n).isomorphic_to(b.ring->group(n))) return {Verdict::Kind::DistinctByGroups, n, 0, 0};
  }
  for (std::uint64_t n = 0; n <= top; ++n) {
    for (std::uint64_t m = 0; m <= top; ++m) {
      if (cup_trivial(*a.ring, n, m) != cup_trivial(*b.ring, n, m)) return {Verdict::Kind::DistinctByCup, n, m, 0};
    }
  }
  bool finite = a.ring->coeff_ring().is_field();
  if (finite) {
    IsoSearchResult r = iso_search_finite(*a.ring, *b.ring);
    if (!r.iso) return {Verdict::Kind::DistinctByIsoSearch, 0, 0, r.candidates_examined};
    return {Verdict::Kind::IndistinguishableByImplementedInvariants, 0, 0, r.candidates_examined};
  }
  return {Verdict::Kind::IndistinguishableByImplementedInvariants, 0, 0, 0};
}

}  // namespace cohring
