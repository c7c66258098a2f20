#ifndef GMUNN_ACTIONS_HPP_
#define GMUNN_ACTIONS_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gmunn/core.hpp"
#include "gmunn/presheaf.hpp"

namespace gmunn {

/// A supported right action (X, S, p): support p maps each carrier point to
/// an idempotent of S and the action table satisfies
///   SA1  (x.s).t = x.st
///   SA2  x.p(x) = x
///   SA3  p(x.s) = s^{-1} p(x) s
struct SupportedAction {
  int m = 0;
  InverseSemigroup s;
  std::vector<Id> support;  // m, idempotent S-ids
  std::vector<Id> act;      // m x n
  bool global = false;      // support surjective onto the idempotents

  Id act_at(Id x, Id a) const {
    return act[static_cast<size_t>(x) * s.n + a];
  }
  bool operator==(const SupportedAction& o) const {
    return m == o.m && s == o.s && support == o.support && act == o.act;
  }
};

SupportedAction validate_supported_action(int m, InverseSemigroup s,
                                          std::vector<Id> support,
                                          std::vector<Id> act);

/// (E(S), S, id): e.s = s^{-1} e s on the idempotents; carrier ids index
/// S.idem.
SupportedAction conjugation_action(const InverseSemigroup& s);

/// (S, S, d): S acting on itself by right multiplication.
SupportedAction right_regular_action(const InverseSemigroup& s);

/// (S/rho, S, p) for an idempotent-separating congruence rho; the carrier is
/// the set of classes ordered by least representative.
SupportedAction quotient_action(const InverseSemigroup& s,
                                const Congruence& rho);

/// The free supported action S * X over a presheaf P on E(S); the carrier is
/// the pair list {(s,x) : r(s) = p(x)} in lexicographic order.
struct FreeAction {
  SupportedAction action;
  std::vector<std::pair<Id, Id>> carrier;  // (S-id, P-carrier id)
};
FreeAction free_action(const InverseSemigroup& s, const Presheaf& p);

/// A presheaf of group actions over a semilattice: one group action per
/// lattice element plus functorial homomorphism pairs (phi, psi) downward.
struct GroupActionLevel {
  InverseSemigroup group;
  int carrier = 0;
  std::vector<Id> act;  // carrier x |group|
};
struct GroupActionFamily {
  Semilattice lattice;
  std::vector<GroupActionLevel> levels;
  std::map<std::pair<Id, Id>, std::vector<Id>> phi;  // carrier maps, f < e
  std::map<std::pair<Id, Id>, std::vector<Id>> psi;  // group maps, f < e
};

/// Builds the strong semilattice of group actions: S is the Clifford
/// semigroup glued from the groups, X the disjoint union of the carriers.
/// Carrier and semigroup ids run level by level in lattice order.
struct StrongSemilatticeAction {
  SupportedAction action;
  std::vector<std::pair<Id, Id>> carrier_labels;    // (level, local point)
  std::vector<std::pair<Id, Id>> semigroup_labels;  // (level, local element)
};
StrongSemilatticeAction strong_semilattice_action(
    const GroupActionFamily& family);

/// Recovers the per-level family from a supported action of a Clifford
/// semigroup by restricting to the group components.
GroupActionFamily decompose_clifford_action(const SupportedAction& a);

/// The conjugation action of S on Ker j for an idempotent-separating
/// surjection j: T -> S with abelian kernel; k is a section of j (a default
/// one is synthesised when omitted). The carrier lists the T-ids of Ker j.
struct ExtensionAction {
  SupportedAction action;
  std::vector<Id> carrier_elements;    // T-ids, sorted
  InverseSemigroup kernel_semigroup;   // induced table on Ker j
};
ExtensionAction extension_action(const InverseSemigroup& t,
                                 const InverseSemigroup& s,
                                 const std::vector<Id>& j,
                                 std::optional<std::vector<Id>> k = {});

/// rho_X: s ~ t iff the action columns of s and t are identical.
Congruence characteristic_congruence(const SupportedAction& a);

/// Lausch module axioms for an action on an abelian Clifford carrier whose
/// support map is a surjective idempotent-separating homomorphism.
/// carrier_alg is the carrier's own multiplication table.
struct SModuleReport {
  bool ok = false;
  int failed_axiom = 0;  // 1..4, or 0 when ok; -1 for precondition failures
  std::vector<Id> witness;
};
SModuleReport check_s_module(const SupportedAction& a,
                             const InverseSemigroup& carrier_alg);

/// Checks that (alpha, theta) is a homomorphism of supported actions:
/// theta a homomorphism, alpha equivariant, q(alpha(x)) = theta(p(x)).
struct ActionHomReport {
  bool theta_is_hom = false;
  bool equivariant = false;
  bool square_commutes = false;
  bool valid = false;
  bool iso = false;
};
ActionHomReport check_action_hom(const SupportedAction& a,
                                 const SupportedAction& b,
                                 const std::vector<Id>& alpha,
                                 const std::vector<Id>& theta);

/// The presheaf (X, E(S), p) obtained by restricting the action to the
/// idempotents; lattice ids index S.idem.
Presheaf restrict_to_idempotents(const SupportedAction& a);

/// Subaction test: closed under the action (equivalently an order-ideal).
bool is_subaction(const SupportedAction& a, const std::vector<Id>& y);

}  // namespace gmunn

#endif  // GMUNN_ACTIONS_HPP_
