#pragma once

// Presented cohomology rings and their polynomial-quotient descriptions.
//
// A PresentedGradedRing records, per degree, a finitely generated abelian
// group as a list of cyclic factors, and the cup product as structure
// constants on generators. Elements are direct sums over N whose degree-n
// coefficient is a coordinate tuple in the degree-n group, so the whole ring
// is the graded construction from graded.hpp instantiated with the cup
// product as star.
//
// The catalog pairs each supported (space, coefficients) combination with a
// quotient R[X1..Xk]/I, the map psi sending each variable to a cohomology
// class, and an explicit inverse on generators.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "cohring/graded.hpp"
#include "cohring/ideal.hpp"

namespace cohring {

struct SpaceId {
  enum class Kind { Sphere, CP2, S2vS4, K2, RP2vS1 };

  Kind kind = Kind::Sphere;
  unsigned dim = 1;  // Sphere only

  static SpaceId sphere(unsigned n) { return {Kind::Sphere, n}; }
  static SpaceId cp2() { return {Kind::CP2, 0}; }
  static SpaceId s2v_s4() { return {Kind::S2vS4, 0}; }
  static SpaceId k2() { return {Kind::K2, 0}; }
  static SpaceId rp2v_s1() { return {Kind::RP2vS1, 0}; }

  /// "S<n>" (n >= 1), "CP2", "S2vS4", "K2", "RP2vS1".
  static std::optional<SpaceId> parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const SpaceId&, const SpaceId&) = default;
};

/// Direct product of cyclic groups; order 0 stands for Z.
struct GroupPresentation {
  std::vector<Integer> orders;
  std::vector<std::string> names;

  std::size_t rank() const noexcept { return orders.size(); }
  bool is_zero() const noexcept { return orders.empty(); }
  bool is_finite() const;
  /// Same multiset of cyclic orders.
  bool isomorphic_to(const GroupPresentation& other) const;
  /// "0", "Z", "Z2 x Z2", ...
  std::string to_string() const;
};

using Coords = std::vector<Integer>;

class PresentedGradedRing {
 public:
  /// groups[n] is the degree-n group; degrees past the end are zero. Degree 0
  /// must be non-zero and its first generator is the unit. Products involving
  /// the unit are filled in; all other products start at zero.
  PresentedGradedRing(Ring coeff, std::vector<GroupPresentation> groups);

  const Ring& coeff_ring() const noexcept { return coeff_; }
  std::size_t top_degree() const noexcept { return groups_.size() - 1; }
  const GroupPresentation& group(std::uint64_t n) const;

  /// Canonical representative of coords in the degree-n group. Throws
  /// IndexMismatch if the tuple has the wrong length.
  Coords canonical(std::uint64_t n, const Coords& coords) const;
  Coords zero(std::uint64_t n) const { return Coords(group(n).rank(), 0); }
  Coords unit_coords(std::uint64_t n, std::size_t i) const;

  /// gen(n, i) * gen(m, j) in degree n + m.
  const Coords& product(std::uint64_t n, std::size_t i, std::uint64_t m, std::size_t j) const;
  void set_product(std::uint64_t n, std::size_t i, std::uint64_t m, std::size_t j, const Coords& value);

 private:
  Ring coeff_;
  std::vector<GroupPresentation> groups_;
  std::map<std::tuple<std::uint64_t, std::size_t, std::uint64_t, std::size_t>, Coords> products_;
  std::vector<Coords> zeros_;
};

/// Coefficient family whose degree-n module is the degree-n group of a ring.
struct GradedFamily {
  using value_type = Coords;

  std::shared_ptr<const PresentedGradedRing> ring;

  Coords zero(std::uint64_t n) const { return ring->zero(n); }
  Coords canonical(std::uint64_t n, const Coords& v) const { return ring->canonical(n, v); }
  Coords add(std::uint64_t n, const Coords& a, const Coords& b) const;
  Coords neg(std::uint64_t n, const Coords& a) const;
  bool is_zero(std::uint64_t, const Coords& a) const;

  friend bool operator==(const GradedFamily& a, const GradedFamily& b) noexcept { return a.ring == b.ring; }
};

using GradedElem = SparseSum<NatMonoid, GradedFamily>;

GradedMul<NatMonoid, GradedFamily> cup_mul(const std::shared_ptr<const PresentedGradedRing>& ring);
GradedElem graded_zero(const std::shared_ptr<const PresentedGradedRing>& ring);
GradedElem graded_gen(const std::shared_ptr<const PresentedGradedRing>& ring, std::uint64_t n, std::size_t i,
                      const Integer& c = 1);
GradedElem graded_scale(const GradedElem& a, const Integer& c);
GradedElem cup(const GradedElem& a, const GradedElem& b);
std::string render(const GradedElem& a);

struct VarImage {
  std::uint64_t degree;
  Coords coords;
};

struct QuotientPresentation {
  std::vector<std::string> vars;
  std::vector<std::uint64_t> degrees;  // cohomological degree of each variable
  std::shared_ptr<const RewriteBasis> basis;
  std::string text;  // e.g. "Z2[X,Y]/(X^3, Y^2, X^2 + X*Y)"
};

struct CatalogEntry {
  SpaceId space;
  RingDescriptor coeff;
  std::shared_ptr<const PresentedGradedRing> ring;
  QuotientPresentation quotient;
  std::vector<VarImage> psi_on_vars;
  /// psi_inv_on_gens[n][i] is the polynomial representing generator i of degree n.
  std::vector<std::vector<MultiPoly>> psi_inv_on_gens;
};

/// Throws UnsupportedPair outside the supported table.
CatalogEntry catalog_get(const SpaceId& space, const RingDescriptor& coeff);
/// Every supported (space, coefficient) pair with fixed spaces; spheres listed as S1.
std::vector<std::pair<SpaceId, RingDescriptor>> catalog_rows();
GroupPresentation h_group(const SpaceId& space, const RingDescriptor& coeff, std::uint64_t n);

QuotElem make_quot(const CatalogEntry& e, const MultiPoly& p);
/// psi on an arbitrary polynomial: the multiplicative extension of psi_on_vars.
GradedElem psi_poly(const CatalogEntry& e, const MultiPoly& p);
/// Throws BasisMismatch if p is not an element of e's quotient.
GradedElem psi(const CatalogEntry& e, const QuotElem& p);
QuotElem psi_inv(const CatalogEntry& e, const GradedElem& g);

struct IsoReport {
  bool passed = true;
  std::size_t elements_checked = 0;  // quotient elements round-tripped through psi
  std::size_t graded_checked = 0;    // cohomology elements round-tripped through psi_inv
  std::size_t products_checked = 0;  // pairs checked for additivity and multiplicativity
  bool exhaustive = false;
  std::vector<std::string> failures;
  /// Per-degree group as read off the quotient's normal monomials.
  std::vector<std::string> quotient_groups;
};

/// Checks that psi kills the ideal, psi and psi_inv are mutually inverse,
/// psi is additive and multiplicative, and the quotient's normal monomials
/// reproduce every cohomology group. Finite entries are checked on every
/// element and pair; infinite ones on generators plus random samples.
IsoReport verify_iso(const CatalogEntry& e, std::size_t samples = 500, std::uint64_t seed = 0x5eed);

/// Unit, annihilation and associativity on generators. Returns the first violation.
std::optional<std::string> check_cup_laws(const PresentedGradedRing& ring);

bool cup_trivial(const PresentedGradedRing& ring, std::uint64_t n, std::uint64_t m);
bool cup_trivial(const CatalogEntry& e, std::uint64_t n, std::uint64_t m);
bool graded_comm_check(const PresentedGradedRing& ring);
bool graded_comm_check(const CatalogEntry& e);

/// A graded isomorphism as one square matrix per degree; column i holds the
/// image of generator i.
using GradedIso = std::vector<std::vector<std::vector<Integer>>>;

struct IsoSearchResult {
  std::optional<GradedIso> iso;
  std::uint64_t candidates_examined = 0;
  bool dimension_obstruction = false;
};

inline constexpr std::uint64_t kMaxIsoSearchSpace = 1'000'000;

/// Exhaustive search over graded, unit-preserving, invertible linear maps for
/// one that is multiplicative. Both rings must have every group a vector
/// space over the same prime field (NotFinite otherwise).
IsoSearchResult iso_search_finite(const PresentedGradedRing& a, const PresentedGradedRing& b);

struct Verdict {
  enum class Kind { DistinctByGroups, DistinctByCup, DistinctByIsoSearch, IndistinguishableByImplementedInvariants };

  Kind kind;
  std::uint64_t n = 0;  // degree for DistinctByGroups; first factor for DistinctByCup
  std::uint64_t m = 0;  // second factor for DistinctByCup
  std::uint64_t candidates_examined = 0;

  std::string to_string() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Groups degreewise, then the cup-triviality matrix, then (finite case)
/// exhaustive isomorphism search.
Verdict distinguish(const SpaceId& s1, const SpaceId& s2, const RingDescriptor& coeff);

}  // namespace cohring
