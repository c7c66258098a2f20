#ifndef GMUNN_PRESHEAF_HPP_
#define GMUNN_PRESHEAF_HPP_

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gmunn/common.hpp"
#include "gmunn/core.hpp"

namespace gmunn {

/// A meet-semilattice: an inverse semigroup that is commutative with every
/// element idempotent. leq is cached; the meet of e,f is their product.
struct Semilattice {
  InverseSemigroup alg;
  std::vector<uint8_t> leq_cache;  // size n*n

  int size() const { return alg.n; }
  Id meet(Id e, Id f) const { return alg.at(e, f); }
  bool leq(Id e, Id f) const {
    return leq_cache[static_cast<size_t>(e) * alg.n + f] != 0;
  }
  std::vector<Id> down_set(Id e) const;
  bool operator==(const Semilattice& o) const { return alg == o.alg; }
};

Semilattice validate_semilattice(const InverseSemigroup& s);
Semilattice semilattice_from_table(int n, std::vector<Id> table);

/// E(S) as a semilattice; element i is S.idem[i].
Semilattice idempotent_semilattice(const InverseSemigroup& s);

/// A presheaf over a semilattice in supported-action form: carrier ids
/// 0..m-1, support map p into E, and the restriction action X x E -> X.
struct Presheaf {
  int m = 0;
  Semilattice lattice;
  std::vector<Id> support;  // m, E-ids
  std::vector<Id> act;      // m x |E|

  Id act_at(Id x, Id e) const {
    return act[static_cast<size_t>(x) * lattice.size() + e];
  }
  std::vector<Id> fiber(Id e) const;  // p^{-1}(e), sorted
  bool global_support() const;
  bool operator==(const Presheaf& o) const {
    return m == o.m && lattice == o.lattice && support == o.support &&
           act == o.act;
  }
};

/// Exhaustively checks SA1 (restricted), SA2 and SA3 (restricted).
Presheaf validate_presheaf(int m, Semilattice lattice, std::vector<Id> support,
                           std::vector<Id> act);

/// The presheaf (E, E, id): E acting on itself by multiplication.
Presheaf presheaf_from_semilattice(const Semilattice& e);

/// Family form: per-level carrier labels and restriction maps phi^e_f for
/// f < e (phi^e_e is implicitly the identity). Labels are global carrier ids
/// so a round trip through to_family/from_family reproduces the presheaf
/// exactly.
struct PresheafFamily {
  Semilattice lattice;
  std::vector<std::vector<Id>> members;                     // per E-id, sorted labels
  std::map<std::pair<Id, Id>, std::vector<Id>> restrictions;  // (e,f) -> local map
  bool operator==(const PresheafFamily& o) const {
    return lattice == o.lattice && members == o.members &&
           restrictions == o.restrictions;
  }
};

Presheaf from_family(const PresheafFamily& family);
PresheafFamily to_family(const Presheaf& p);

/// Steinberg order: x <= y iff x = y . p(x).
bool steinberg_leq(const Presheaf& p, Id x, Id y);

/// Y (a sorted subset) is an order-ideal iff it is downward closed.
bool is_order_ideal(const Presheaf& p, const std::vector<Id>& y);

struct Subpresheaf {
  std::vector<Id> ideal;       // sorted carrier ids
  std::vector<Id> sublattice;  // sorted E-ids
};

/// Validates the subpresheaf data: ideal downward closed, sublattice
/// meet-closed and containing p(ideal). When no sublattice is given, the
/// meet-closure of p(ideal) is used.
Subpresheaf make_subpresheaf(const Presheaf& p, std::vector<Id> ideal,
                             std::optional<std::vector<Id>> sublattice = {});

/// Principal subpresheaf (X.e, e-down).
Subpresheaf principal(const Presheaf& p, Id e);

/// An isomorphism of subpresheaves: a pair of order-isomorphisms commuting
/// with the support map. Stored as total arrays with kNone outside the
/// domain; e,f record principal domains when applicable.
struct PairIso {
  std::vector<Id> alpha;  // size m
  std::vector<Id> theta;  // size |E|
  Id e = kNone, f = kNone;
  bool operator==(const PairIso& o) const {
    return alpha == o.alpha && theta == o.theta;
  }
  bool operator<(const PairIso& o) const {
    if (alpha != o.alpha) return alpha < o.alpha;
    return theta < o.theta;
  }
};

/// All (alpha, theta) pairs of order-isomorphisms A -> B with p.alpha =
/// theta.p, in lexicographic order of alpha.
std::vector<PairIso> subpresheaf_isomorphisms(const Presheaf& p,
                                              const Subpresheaf& a,
                                              const Subpresheaf& b);

/// All order-isomorphisms between two abstract finite posets, as local-index
/// maps in lexicographic order. leq(i,j) need not be a lattice order.
std::vector<std::vector<Id>> enumerate_order_isomorphisms(
    int na, const std::function<bool(Id, Id)>& leq_a, int nb,
    const std::function<bool(Id, Id)>& leq_b);

}  // namespace gmunn

#endif  // GMUNN_PRESHEAF_HPP_
