// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <string>

#include "cohring/cli.hpp"
#include "cohring/cohomology.hpp"
#include "cohring/ideal.hpp"
#include "cohring/parse.hpp"
#include "cohring/poly.hpp"

using namespace cohring;

namespace {

using Failure = std::optional<std::string>;

const Ring kZ = Ring::integers();
const Ring kZ2 = Ring::modular(2);

#define EXPECT(cond, what)         \
  do {                             \
    if (!(cond)) return std::string(what); \
  } while (0)

// ---------------------------------------------------------------------------
// Generic ring-axiom check over any representation.

template <class P>
struct Ops {
  std::function<P(const P&, const P&)> add;
  std::function<P(const P&, const P&)> mul;
  std::function<P(const P&)> neg;
  std::function<bool(const P&, const P&)> eq;
  P zero;
  P one;
};

template <class P>
Failure ring_laws(const Ops<P>& o, const P& a, const P& b, const P& c) {
  EXPECT(o.eq(o.add(a, b), o.add(b, a)), "addition not commutative");
  EXPECT(o.eq(o.mul(a, b), o.mul(b, a)), "multiplication not commutative");
  EXPECT(o.eq(o.add(o.add(a, b), c), o.add(a, o.add(b, c))), "addition not associative");
  EXPECT(o.eq(o.mul(o.mul(a, b), c), o.mul(a, o.mul(b, c))), "multiplication not associative");
  EXPECT(o.eq(o.mul(a, o.add(b, c)), o.add(o.mul(a, b), o.mul(a, c))), "not distributive");
  EXPECT(o.eq(o.add(a, o.zero), a), "zero is not neutral");
  EXPECT(o.eq(o.mul(a, o.one), a), "one is not neutral");
  EXPECT(o.eq(o.add(a, o.neg(a)), o.zero), "negation is not an inverse");
  EXPECT(o.eq(o.mul(a, o.zero), o.zero), "zero does not annihilate");
  return std::nullopt;
}

template <class P>
Failure binary_laws(const Ops<P>& o, const P& a, const P& b) {
  EXPECT(o.eq(o.add(a, b), o.add(b, a)), "addition not commutative");
  EXPECT(o.eq(o.mul(a, b), o.mul(b, a)), "multiplication not commutative");
  EXPECT(o.eq(o.add(a, o.neg(a)), o.zero), "negation is not an inverse");
  EXPECT(o.eq(o.mul(a, o.one), a), "one is not neutral");
  return std::nullopt;
}

Ops<UniSparse> sparse_ops(const Ring& r) {
  return {[](auto& a, auto& b) { return dsum_add(a, b); }, [](auto& a, auto& b) { return mul(a, b); },
          [](auto& a) { return dsum_neg(a); }, [](auto& a, auto& b) { return a == b; }, uni_sparse(r, {}),
          uni_sparse(r, {{0, 1}})};
}

Ops<UniDense> dense_ops(const Ring& r) {
  return {[](auto& a, auto& b) { return add(a, b); }, [](auto& a, auto& b) { return mul(a, b); },
          [](auto& a) { return neg(a); }, [](auto& a, auto& b) { return poly_equal(a, b); }, uni_dense(r, {}),
          uni_dense(r, {1})};
}

Ops<UniNormal> normal_ops(const Ring& r) {
  return {[](auto& a, auto& b) { return add(a, b); }, [](auto& a, auto& b) { return mul(a, b); },
          [](auto& a) { return neg(a); }, [](auto& a, auto& b) { return a.coeffs() == b.coeffs(); }, UniNormal(r, {}),
          UniNormal(r, {1})};
}

Ops<MultiPoly> multi_ops(const Ring& r, std::size_t arity) {
  return {[](auto& a, auto& b) { return dsum_add(a, b); }, [](auto& a, auto& b) { return mul(a, b); },
          [](auto& a) { return dsum_neg(a); }, [](auto& a, auto& b) { return a == b; }, multi_zero(r, arity),
          multi_constant(r, arity, 1)};
}

std::vector<RingElem> random_coeffs(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(0, 31);
  std::uniform_int_distribution<std::int64_t> c(-100, 100);
  std::vector<RingElem> out(len(rng));
  for (auto& x : out) x = c(rng);
  return out;
}

MultiPoly random_multi(std::mt19937_64& rng, const Ring& r) {
  std::uniform_int_distribution<std::uint32_t> e(0, 15);
  std::uniform_int_distribution<std::int64_t> c(-100, 100);
  std::vector<MultiPoly::Term> terms;
  std::size_t n = rng() % 9;
  for (std::size_t k = 0; k < n; ++k) terms.push_back({ExpVec{e(rng), e(rng)}, c(rng)});
  return MultiPoly::from_terms(ExpVecMonoid{2}, ConstantFamily{r}, std::move(terms));
}

// Every coefficient list of length <= 4 over Z2 (degree <= 3), as 16 bit patterns.
std::vector<std::vector<RingElem>> all_z2_cubics() {
  std::vector<std::vector<RingElem>> out;
  for (int bits = 0; bits < 16; ++bits) {
    std::vector<RingElem> c(4);
    for (int i = 0; i < 4; ++i) c[i] = (bits >> i) & 1;
    out.push_back(c);
  }
  return out;
}

template <class P, class Make>
Failure exhaustive_triples(const Ops<P>& o, Make make) {
  auto all = all_z2_cubics();
  std::vector<P> polys;
  for (const auto& c : all) polys.push_back(make(c));
  for (const auto& a : polys) {
    for (const auto& b : polys) {
      for (const auto& c : polys) {
        if (auto f = ring_laws(o, a, b, c)) return f;
      }
    }
  }
  return std::nullopt;
}

Failure criterion_ring_axioms() {
  std::mt19937_64 rng(1001);
  for (const Ring& r : {kZ, kZ2}) {
    auto so = sparse_ops(r);
    auto dop = dense_ops(r);
    auto no = normal_ops(r);
    auto mo = multi_ops(r, 2);
    for (int k = 0; k < 1000; ++k) {
      auto ca = random_coeffs(rng), cb = random_coeffs(rng), cc = random_coeffs(rng);
      UniDense a = uni_dense(r, ca), b = uni_dense(r, cb), c = uni_dense(r, cc);
      if (auto f = ring_laws(dop, a, b, c)) return "dense over " + r.to_string() + ": " + *f;
      if (auto f = ring_laws(so, to_sparse(a), to_sparse(b), to_sparse(c))) return "sparse over " + r.to_string() + ": " + *f;
      if (auto f = ring_laws(no, to_normal(a), to_normal(b), to_normal(c))) return "normal over " + r.to_string() + ": " + *f;
      if (auto f = ring_laws(mo, random_multi(rng, r), random_multi(rng, r), random_multi(rng, r))) {
        return "multivariate over " + r.to_string() + ": " + *f;
      }
    }
  }
  auto dense_of = [](const std::vector<RingElem>& c) { return uni_dense(kZ2, c); };
  if (auto f = exhaustive_triples(dense_ops(kZ2), dense_of)) return "exhaustive dense: " + *f;
  if (auto f = exhaustive_triples(sparse_ops(kZ2), [&](auto& c) { return to_sparse(dense_of(c)); })) return "exhaustive sparse: " + *f;
  if (auto f = exhaustive_triples(normal_ops(kZ2), [&](auto& c) { return to_normal(dense_of(c)); })) return "exhaustive normal: " + *f;
  if (auto f = exhaustive_triples(multi_ops(kZ2, 1), [&](auto& c) { return to_multi(to_sparse(dense_of(c))); })) {
    return "exhaustive univariate MultiPoly: " + *f;
  }
  // Two variables, total degree <= 3: all 2^10 polynomials, every pair.
  std::vector<ExpVec> monos;
  for (std::uint32_t i = 0; i <= 3; ++i) {
    for (std::uint32_t j = 0; i + j <= 3; ++j) monos.push_back(ExpVec{i, j});
  }
  std::vector<MultiPoly> polys;
  for (std::uint32_t bits = 0; bits < (1u << monos.size()); ++bits) {
    std::vector<MultiPoly::Term> t;
    for (std::size_t k = 0; k < monos.size(); ++k) {
      if (bits >> k & 1) t.push_back({monos[k], 1});
    }
    polys.push_back(MultiPoly::from_terms(ExpVecMonoid{2}, ConstantFamily{kZ2}, std::move(t)));
  }
  auto mo = multi_ops(kZ2, 2);
  for (const auto& a : polys) {
    for (const auto& b : polys) {
      if (auto f = binary_laws(mo, a, b)) return "exhaustive bivariate: " + *f;
    }
  }
  return std::nullopt;
}

Failure criterion_repr_iso() {
  std::mt19937_64 rng(1002);
  for (int k = 0; k < 1000; ++k) {
    const Ring& r = k % 2 ? kZ : kZ2;
    UniSparse a = to_sparse(uni_dense(r, random_coeffs(rng)));
    UniSparse b = to_sparse(uni_dense(r, random_coeffs(rng)));
    UniSparse sp = mul(a, b);
    UniDense dp = mul(to_dense(to_normal(a)), to_dense(to_normal(b)));
    EXPECT(to_sparse(dp) == sp, "sparse and dense products differ");
    EXPECT(to_sparse(mul(to_normal(a), to_normal(b))) == sp, "normal product differs");
    UniPoly as_poly = sp;
    for (UniRepr from : {UniRepr::Sparse, UniRepr::Dense, UniRepr::Normal}) {
      for (UniRepr to : {UniRepr::Sparse, UniRepr::Dense, UniRepr::Normal}) {
        UniPoly x = convert(convert(as_poly, from), to);
        EXPECT(std::get<UniSparse>(convert(x, UniRepr::Sparse)) == sp, "conversion changed the polynomial");
      }
    }
  }
  return std::nullopt;
}

Failure criterion_micro_examples() {
  auto b = [](std::uint64_t i, std::int64_t c) { return uni_sparse(kZ, {{i, c}}); };
  EXPECT(dsum_add(b(3, 2), b(3, 3)) == b(3, 5), "base(3,2)+base(3,3) != base(3,5)");
  EXPECT(poly_equal(uni_dense(kZ, {1, 0, 2, 5}), uni_dense(kZ, {1, 0, 2, 5, 0, 0})), "[1,0,2,5] != [1,0,2,5,0,0]");
  EXPECT(normalize_dense(uni_dense(kZ, {0})).coeffs().empty(), "normalize_dense([0]) is not empty");
  const Ring r = kZ;
  for (std::int64_t a : {1, -1, 7, -12}) {
    MultiPoly m = multi_term(r, ExpVec{4, 0, 3}, a);
    std::string text = render(m);
    std::string expected = (a == 1 ? "" : a == -1 ? "-" : std::to_string(a) + "*") + std::string("X1^4*X3^3");
    EXPECT(text == expected, "base((4,0,3), a) renders as " + text);
    EXPECT(parse_poly(text, r, {"X1", "X2", "X3"}) == m, "base((4,0,3), a) does not parse back");
  }
  return std::nullopt;
}

Failure criterion_staircases() {
  for (auto [space, coeff] : catalog_rows()) {
    CatalogEntry e = catalog_get(space, coeff);
    auto stairs = normal_monomial_basis(*e.quotient.basis, e.quotient.degrees, e.ring->top_degree() + 2);
    for (std::uint64_t n = 0; n < stairs.size(); ++n) {
      GroupPresentation g;
      for (const auto& nm : stairs[n]) {
        g.orders.push_back(nm.order);
        g.names.push_back("");
      }
      EXPECT(g.isomorphic_to(e.ring->group(n)), space.to_string() + " " + coeff.to_string() + " degree " +
                                                    std::to_string(n) + ": " + g.to_string());
    }
  }
  auto dims = [](SpaceId s, RingDescriptor c) {
    CatalogEntry e = catalog_get(s, c);
    std::vector<std::string> out;
    auto stairs = normal_monomial_basis(*e.quotient.basis, e.quotient.degrees, e.ring->top_degree());
    for (const auto& level : stairs) {
      GroupPresentation g;
      for (const auto& nm : level) g.orders.push_back(nm.order);
      out.push_back(g.to_string());
    }
    return out;
  };
  EXPECT((dims(SpaceId::k2(), RingDescriptor::modular(2)) == std::vector<std::string>{"Z2", "Z2 x Z2", "Z2"}),
         "K2 over Z2 staircase");
  EXPECT((dims(SpaceId::k2(), RingDescriptor::integers()) == std::vector<std::string>{"Z", "Z", "Z2"}), "K2 over Z staircase");
  EXPECT((dims(SpaceId::cp2(), RingDescriptor::integers()) == std::vector<std::string>{"Z", "0", "Z", "0", "Z"}),
         "CP2 staircase");
  return std::nullopt;
}

Failure criterion_buchberger() {
  std::vector<MultiPoly> gens{multi_term(kZ2, ExpVec{3, 0}, 1), multi_term(kZ2, ExpVec{0, 2}, 1),
                              dsum_add(multi_term(kZ2, ExpVec{2, 0}, 1), multi_term(kZ2, ExpVec{1, 1}, 1))};
  EXPECT(groebner_check(RewriteBasis(gens, ReductionMode::Field)), "{X^3, Y^2, X^2+XY} is not a Groebner basis");
  std::mt19937_64 rng(1005);
  for (auto [space, coeff] : catalog_rows()) {
    CatalogEntry e = catalog_get(space, coeff);
    const RewriteBasis& basis = *e.quotient.basis;
    if (basis.mode() == ReductionMode::Field) {
      EXPECT(groebner_check(basis), e.quotient.text + " fails the criterion");
      continue;
    }
    // term ideal: every small term has one normal form whatever the divisor order
    std::vector<std::uint64_t> weights = e.quotient.degrees;
    std::function<void(std::size_t, ExpVec&, std::uint64_t, std::vector<ExpVec>&)> enumerate =
        [&](std::size_t i, ExpVec& cur, std::uint64_t deg, std::vector<ExpVec>& out) {
          if (i == cur.size()) {
            out.push_back(cur);
            return;
          }
          for (std::uint32_t k = 0; deg + k * weights[i] <= 6; ++k) {
            cur[i] = k;
            enumerate(i + 1, cur, deg + k * weights[i], out);
          }
          cur[i] = 0;
        };
    std::vector<ExpVec> monos;
    ExpVec start(weights.size());
    enumerate(0, start, 0, monos);
    for (const auto& mono : monos) {
      for (std::int64_t c = -4; c <= 4; ++c) {
        MultiPoly p = multi_term(basis.ring(), mono, c);
        MultiPoly nf = reduce(p, basis);
        EXPECT(reduce_with(p, basis, [](std::span<const std::size_t> s) { return s.size() - 1; }) == nf,
               e.quotient.text + ": divisor order changes a normal form");
        EXPECT(reduce_with(p, basis, [&](std::span<const std::size_t> s) { return rng() % s.size(); }) == nf,
               e.quotient.text + ": divisor order changes a normal form");
        EXPECT(reduce(nf, basis) == nf, e.quotient.text + ": normal form is not reduced");
      }
    }
  }
  return std::nullopt;
}

Failure criterion_psi() {
  for (auto [space, coeff] : catalog_rows()) {
    CatalogEntry e = catalog_get(space, coeff);
    IsoReport r = verify_iso(e);
    std::string label = space.to_string() + " " + coeff.to_string();
    EXPECT(r.passed, label + ": " + (r.failures.empty() ? "" : r.failures.front()));
    if (coeff.kind == RingKind::Modular) {
      EXPECT(r.exhaustive && r.elements_checked == 16 && r.products_checked == 256, label + " not exhaustive");
    } else {
      EXPECT(r.elements_checked >= 500 && r.products_checked >= 500, label + " undersampled");
    }
  }
  CatalogEntry cp2 = catalog_get(SpaceId::cp2(), RingDescriptor::integers());
  GradedElem alpha = graded_gen(cp2.ring, 2, 0);
  EXPECT(cup(alpha, alpha) == graded_gen(cp2.ring, 4, 0), "alpha * alpha != beta");
  EXPECT(psi_poly(cp2, multi_term(kZ, ExpVec{3}, 1)).is_zero(), "psi(X^3) != 0");
  return std::nullopt;
}

Failure criterion_cup_corollary() {
  auto z = RingDescriptor::integers();
  EXPECT(cup_trivial(catalog_get(SpaceId::s2v_s4(), z), 2, 2), "S2vS4 cup H2 x H2 not trivial");
  EXPECT(!cup_trivial(catalog_get(SpaceId::cp2(), z), 2, 2), "CP2 cup H2 x H2 trivial");
  Verdict v = distinguish(SpaceId::cp2(), SpaceId::s2v_s4(), z);
  EXPECT(v.kind == Verdict::Kind::DistinctByCup && v.n == 2 && v.m == 2, "verdict: " + v.to_string());
  return std::nullopt;
}

Failure criterion_klein() {
  Verdict vz = distinguish(SpaceId::k2(), SpaceId::rp2v_s1(), RingDescriptor::integers());
  EXPECT(vz.kind == Verdict::Kind::IndistinguishableByImplementedInvariants, "over Z: " + vz.to_string());
  Verdict v2 = distinguish(SpaceId::k2(), SpaceId::rp2v_s1(), RingDescriptor::modular(2));
  EXPECT(v2.kind == Verdict::Kind::DistinctByIsoSearch, "over Z2: " + v2.to_string());
  auto a = catalog_get(SpaceId::k2(), RingDescriptor::modular(2)).ring;
  auto b = catalog_get(SpaceId::rp2v_s1(), RingDescriptor::modular(2)).ring;
  IsoSearchResult r = iso_search_finite(*a, *b);
  EXPECT(!r.iso && r.candidates_examined == 6, "search examined " + std::to_string(r.candidates_examined));
  return std::nullopt;
}

Failure criterion_graded_comm() {
  for (auto [space, coeff] : catalog_rows()) {
    EXPECT(graded_comm_check(catalog_get(space, coeff)), space.to_string() + " " + coeff.to_string());
  }
  return std::nullopt;
}

Failure criterion_performance() {
  UniSparse f = uni_sparse(kZ, {{3, 2}, {100, 1}});
  OpCounter sparse;
  UniSparse sq = mul(f, f, &sparse);
  EXPECT(sparse.multiplications == 4, "sparse square used " + std::to_string(sparse.multiplications) + " multiplications");
  OpCounter dense;
  UniDense dsq = mul(to_dense(f), to_dense(f), &dense);
  EXPECT(dense.positions >= 101, "dense square touched " + std::to_string(dense.positions) + " positions");
  EXPECT(to_sparse(dsq) == sq, "sparse and dense squares differ");

  std::mt19937_64 rng(1010);
  std::uniform_int_distribution<std::int64_t> c(-100, 100);
  std::vector<RingElem> x(10001), y(10001);
  for (auto& v : x) v = c(rng);
  for (auto& v : y) v = c(rng);
  x.back() = 1;
  y.back() = 1;
  auto start = std::chrono::steady_clock::now();
  UniDense p = mul(uni_dense(kZ, x), uni_dense(kZ, y));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT(p.effective_length() == 20001, "dense product has the wrong degree");
  EXPECT(secs < 5.0, "dense degree-10^4 product took " + std::to_string(secs) + " s");
  return std::nullopt;
}

Failure criterion_cli() {
  struct Case {
    std::vector<std::string> args;
    int exit_code;
    std::string expected;
  };
  std::vector<Case> cases{
      {{"reduce", "X^2", "--ideal", "(X^3, Y^2, X^2+X*Y)", "--ring", "Z2", "--vars", "X,Y", "--json"}, 0, "X*Y"},
      {{"cohomology-distinguish", "K2", "RP2vS1", "--coeff", "Z2", "--json"}, 0,
       "distinct (no graded ring isomorphism exists)"},
      {{"cohomology-ring", "S2", "--coeff", "Z2", "--json"}, 1, "unsupported coefficient for this space"},
  };
  for (const auto& c : cases) {
    CommandResult r = run_command(c.args);
    EXPECT(r.exit_code == c.exit_code, c.args[0] + " exited " + std::to_string(r.exit_code));
    EXPECT(run_command(c.args).out == r.out, c.args[0] + " output is not stable");
    auto doc = nlohmann::json::parse(r.out);
    EXPECT(doc["command"] == c.args[0], c.args[0] + ": wrong command field");
    if (c.exit_code == 0) {
      EXPECT(doc["result"] == c.expected, c.args[0] + ": result " + doc["result"].dump());
      EXPECT(doc["diagnostics"].empty(), c.args[0] + ": unexpected diagnostics");
    } else {
      EXPECT(doc["result"].is_null(), c.args[0] + ": error result not null");
      EXPECT(doc["diagnostics"] == nlohmann::json::array({c.expected}), c.args[0] + ": " + doc["diagnostics"].dump());
    }
  }
  return std::nullopt;
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0 = no limit
  std::function<Failure()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "ring axioms: four representations over Z and Z2, random and exhaustive", 60, criterion_ring_axioms},
      {2, "representation isomorphism: products and conversions agree", 30, criterion_repr_iso},
      {3, "micro examples: base sums, dense equality, drop0, rendering", 0, criterion_micro_examples},
      {4, "quotient staircases match cohomology groups", 5, criterion_staircases},
      {5, "Buchberger check and term-ideal confluence", 10, criterion_buchberger},
      {6, "psi isomorphism verification for all seven entries", 30, criterion_psi},
      {7, "CP2 vs S2vS4 separated by cup product H^2 x H^2", 0, criterion_cup_corollary},
      {8, "K2 vs RP2vS1: same over Z, separated over Z2 by exhaustive search", 1, criterion_klein},
      {9, "graded commutativity for every entry", 0, criterion_graded_comm},
      {10, "sparse vs dense operation counts; dense degree-10^4 product under 5 s", 0, criterion_performance},
      {11, "CLI examples under --json", 0, criterion_cli},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Failure f;
    try {
      f = c.run();
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!f && c.limit_seconds > 0 && secs > c.limit_seconds) {
      f = "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s";
    }
    std::printf("%s %2d  %s  (%.2f s)%s%s\n", f ? "FAIL" : "PASS", c.id, c.name, secs, f ? ": " : "",
                f ? f->c_str() : "");
    if (f) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
