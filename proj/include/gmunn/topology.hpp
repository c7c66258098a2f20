#ifndef GMUNN_TOPOLOGY_HPP_
#define GMUNN_TOPOLOGY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "gmunn/actions.hpp"
#include "gmunn/core.hpp"
#include "gmunn/munn.hpp"
#include "gmunn/presheaf.hpp"

namespace gmunn {

/// A finite topological space: points 0..m-1, open sets as bitmasks sorted
/// ascending. Always contains the empty and the full set and is closed
/// under union and intersection.
struct FiniteSpace {
  int m = 0;
  std::vector<uint32_t> opens;

  uint32_t full() const { return m == 0 ? 0 : (1u << m) - 1; }
  bool is_open(uint32_t mask) const;
  Id open_index(uint32_t mask) const;  // kNone when not open
  /// Intersection of all opens containing x (the minimal open
  /// neighbourhood; finite spaces always have one).
  uint32_t min_nbhd(Id x) const;
  bool operator==(const FiniteSpace& o) const {
    return m == o.m && opens == o.opens;
  }
};

FiniteSpace validate_space(int m, std::vector<uint32_t> opens);
bool is_T0(const FiniteSpace& x);

/// The particular point space: opens are the empty set and every set
/// containing point 0.
FiniteSpace particular_point_space(int m);
FiniteSpace discrete_space(int m);
FiniteSpace sierpinski_space();

/// Minimum elements of all completely prime filters of the open-set
/// lattice. Every filter of a finite lattice is a principal up-set, so a
/// filter is identified with its minimum; complete primality of ups(U)
/// means V union W >= U forces V >= U or W >= U.
std::vector<uint32_t> completely_prime_filters(const FiniteSpace& x);

struct SoberReport {
  bool t0 = false;
  bool sober = false;
  std::vector<uint32_t> filters;           // all completely prime filters
  std::vector<uint32_t> nonpoint_filters;  // those that are no point's filter
};
SoberReport sober_report(const FiniteSpace& x);
bool is_sober(const FiniteSpace& x);

/// Omega(X) as a meet-semilattice under intersection; ids index opens.
Semilattice open_set_semilattice(const FiniteSpace& x);

/// A homeomorphism between two open subspaces, as a kNone-padded point map.
struct PartialHomeo {
  uint32_t dom = 0, cod = 0;
  std::vector<Id> map;
  bool operator==(const PartialHomeo& o) const { return map == o.map; }
};

/// I(X, tau): all homeomorphisms between open subspaces under composition,
/// including the empty map. Elements sorted by (dom, cod, map).
struct HomeoSemigroup {
  FiniteSpace space;
  std::vector<PartialHomeo> elements;
  InverseSemigroup table;
};
HomeoSemigroup partial_homeo_semigroup(const FiniteSpace& x);

/// All homeomorphisms between two fixed opens; finite-space homeomorphisms
/// are exactly the specialisation-preorder isomorphisms.
std::vector<std::vector<Id>> enumerate_homeomorphisms(const FiniteSpace& x,
                                                      uint32_t dom,
                                                      uint32_t cod);

/// Verifies T_{Omega(X)} iso I(X, tau) through the direct-image map
/// f |-> (W |-> f(W)); requires X sober. Also checks I(X, tau) fundamental.
struct PropEReport {
  bool fundamental = false;
  bool iso = false;
  int homeo_size = 0;
  int munn_size = 0;
};
PropEReport prop_e_check(const FiniteSpace& x);

/// An etale bundle: a surjective local homeomorphism pi: total -> base.
struct EtaleBundle {
  FiniteSpace total, base;
  std::vector<Id> pi;
};
EtaleBundle validate_bundle(FiniteSpace total, FiniteSpace base,
                            std::vector<Id> pi);

/// A local section of pi over an open domain.
struct Section {
  uint32_t domain = 0;
  std::vector<Id> values;  // base point -> total point, kNone outside
  bool operator==(const Section& o) const {
    return domain == o.domain && values == o.values;
  }
  bool operator<(const Section& o) const {
    if (domain != o.domain) return domain < o.domain;
    return values < o.values;
  }
};

/// Gamma(pi): all sections ordered by (domain, values), as a presheaf over
/// Omega(base) with restriction action and domain support.
struct SectionsPresheaf {
  std::vector<Section> sections;
  Presheaf presheaf;
  Id index_of(const Section& s) const;
};
SectionsPresheaf sections_presheaf(const EtaleBundle& bundle);

/// A principal partial automorphism of the bundle: a pair of
/// homeomorphisms (theta on the total space, theta_hat on the base)
/// commuting with pi.
struct LaElement {
  std::vector<Id> theta;      // total point map
  std::vector<Id> theta_hat;  // base point map
  uint32_t dom_base = 0, cod_base = 0;
};

struct LaSemigroup {
  std::vector<LaElement> elements;
  InverseSemigroup table;
  std::vector<Id> idempotent_at;  // base open index -> element id
};
LaSemigroup la_semigroup(const EtaleBundle& bundle);

/// The action of La(pi) on the sections: sigma . (theta, theta_hat) =
/// theta^{-1} sigma theta_hat.
struct LaAction {
  LaSemigroup la;
  SectionsPresheaf gamma;
  SupportedAction action;
};
LaAction la_action(const EtaleBundle& bundle);

/// T_{Gamma(pi)} iso La(pi) over a sober base: the representation of the
/// La-action is bijective, and every Munn element is reconstructed as a
/// bundle automorphism pair.
struct TheoremFReport {
  bool iso = false;
  bool reconstruction_ok = false;
  bool char_cong_equality = false;
  int la_size = 0;
  int munn_size = 0;
};
TheoremFReport theorem_f_check(const EtaleBundle& bundle);

/// Order-ideal topologies on the carrier and on E(S) turn the support map
/// of a globally supported action into an etale bundle.
EtaleBundle order_ideal_topology(const SupportedAction& a);

/// All open sets of the order-ideal topology whose points are pairwise
/// compatible (x . p(y) = y . p(x)).
std::vector<uint32_t> compatible_order_ideals(const SupportedAction& a);

/// The subspace on the points of mask, points renumbered ascending.
FiniteSpace subspace(const FiniteSpace& x, uint32_t mask);

}  // namespace gmunn

#endif  // GMUNN_TOPOLOGY_HPP_
