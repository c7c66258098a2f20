#ifndef GMUNN_MUNN_HPP_
#define GMUNN_MUNN_HPP_

#include <optional>
#include <vector>

#include "gmunn/actions.hpp"
#include "gmunn/core.hpp"
#include "gmunn/presheaf.hpp"

namespace gmunn {

/// One element of a Munn semigroup: an isomorphism between principal
/// subpresheaves, stored as kNone-padded graphs. alpha is empty for the
/// classical T_E (order-isomorphisms between principal order-ideals).
struct MunnElement {
  std::vector<Id> alpha;
  std::vector<Id> theta;
  Id e = kNone, f = kNone;  // domain and codomain lattice elements
};

/// T_E or T_X with its induced multiplication table. Elements are sorted by
/// (e, f, alpha, theta); products compose partial maps, the composite always
/// being another listed element. Products follow the apply-right-then-left
/// convention: table[a][b] = a after b.
struct MunnSemigroup {
  Semilattice lattice;
  int carrier = 0;             // 0 for the classical Munn semigroup
  bool carrier_global = false; // support surjective (generalized case)
  std::vector<MunnElement> elements;
  InverseSemigroup table;
  std::vector<Id> idempotent_ids;  // E-id -> id of the identity pair

  Id find(const std::vector<Id>& alpha, const std::vector<Id>& theta) const;
};

/// All order-isomorphisms between principal order-ideals of E.
/// Throws size_cap_exceeded when |E| > max_size().
MunnSemigroup munn_semigroup(const Semilattice& e);

/// The generalised Munn semigroup of a presheaf: all isomorphisms between
/// its principal subpresheaves under componentwise composition.
MunnSemigroup generalized_munn(const Presheaf& p);

struct Representation {
  std::vector<Id> map;  // source id -> target element id
  HomReport report;
};

struct MunnRepresentation {
  MunnSemigroup target;
  Representation rep;
};

/// delta: S -> T_{E(S)}, s |-> (e |-> s e s^{-1} on d(s)-down). An
/// idempotent-separating homomorphism with wide image and kernel mu.
MunnRepresentation munn_representation(const InverseSemigroup& s);

/// xi: S -> T_Y for Y the idempotent restriction of the action,
/// s |-> (y |-> y.s^{-1}, e |-> s e s^{-1}) on the principal subpresheaf at
/// d(s). Idempotent-separating with wide image; ker xi is contained in the
/// characteristic congruence, with equality iff the latter separates
/// idempotents.
MunnRepresentation generalized_munn_representation(const SupportedAction& a);

struct GammaReport {
  MunnSemigroup te;
  std::vector<Id> theta_map;  // T_X id -> T_E id
  HomReport report;
  bool idempotents_match_lattice = false;
  std::optional<bool> alpha_injective;  // set only when the presheaf is global
};

/// The projection (alpha, theta) -> theta into T_E.
GammaReport gamma_projection(const MunnSemigroup& tx);

struct ActionFromHom {
  SupportedAction action;
  std::vector<Id> lattice_iso;  // E-id g -> the S-idempotent phi maps to g
};

/// Rebuilds a supported action from an idempotent-separating homomorphism
/// phi: S -> T_P with wide image: x . s = alpha_s^{-1}(x . f).
/// Throws hom_precondition_failed when phi does not qualify.
ActionFromHom action_from_hom(const InverseSemigroup& s, const Presheaf& p,
                              const MunnSemigroup& tp,
                              const std::vector<Id>& phi);

/// All homomorphisms S -> T that separate idempotents and have wide image,
/// by backtracking over element images. Bounded by the given caps.
std::vector<std::vector<Id>> enumerate_wide_separating_homs(
    const InverseSemigroup& s, const InverseSemigroup& t, int s_cap = 8,
    int t_cap = 16);

struct RoundTripReport {
  int homs_checked = 0;
  int actions_checked = 0;
  bool kernels_match = true;
  bool images_isomorphic = true;
  bool actions_reproduced = true;
  bool ok() const {
    return kernels_match && images_isomorphic && actions_reproduced;
  }
};

/// Both directions of the correspondence between qualifying homomorphisms
/// into T_P and supported actions restricting to P: each enumerated phi is
/// turned into an action whose representation has the same kernel and an
/// isomorphic image, and each such action is reproduced exactly by
/// rebuilding from its own representation.
RoundTripReport verify_theorem_d_roundtrip(const InverseSemigroup& s,
                                           const Presheaf& p);

}  // namespace gmunn

#endif  // GMUNN_MUNN_HPP_
