#ifndef GMUNN_CORE_HPP_
#define GMUNN_CORE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmunn/common.hpp"

namespace gmunn {

/// A finite inverse semigroup given by its multiplication table.
/// table[a*n+b] is the product ab; inv caches the unique inverse and idem
/// the sorted list of idempotents. Immutable after validation.
struct InverseSemigroup {
  int n = 0;
  std::vector<Id> table;        // n*n, row-major
  std::vector<Id> inv;          // n
  std::vector<Id> idem;         // sorted
  std::vector<uint8_t> idem_mask;  // n, 1 iff idempotent

  Id at(Id a, Id b) const { return table[static_cast<size_t>(a) * n + b]; }
  Id d(Id a) const { return at(inv[a], a); }  // a^{-1}a
  Id r(Id a) const { return at(a, inv[a]); }  // aa^{-1}
  bool is_idempotent(Id a) const { return idem_mask[a] != 0; }
  bool operator==(const InverseSemigroup& o) const {
    return n == o.n && table == o.table;
  }
};

/// A congruence as a canonical-representative array: classof[a] is the least
/// id in a's class. Two congruences are equal iff their arrays are equal.
struct Congruence {
  int n = 0;
  std::vector<Id> classof;

  bool same(Id a, Id b) const { return classof[a] == classof[b]; }
  int class_count() const;
  std::vector<std::vector<Id>> classes() const;  // sorted by representative
  bool operator==(const Congruence& o) const {
    return n == o.n && classof == o.classof;
  }
  bool operator<(const Congruence& o) const { return classof < o.classof; }
};

Congruence equality_congruence(int n);
Congruence universal_congruence(int n);
/// a refines b: every a-class is contained in a b-class.
bool congruence_refines(const Congruence& a, const Congruence& b);

struct HomReport {
  bool is_hom = false;
  bool is_idempotent_separating = false;
  bool image_is_wide = false;
  std::optional<Congruence> kernel;  // populated only when is_hom
};

/// Validates a raw multiplication table and builds the caches.
/// Throws not_associative, not_regular, idempotents_do_not_commute or
/// non_unique_inverse with a witness.
InverseSemigroup validate_inverse_semigroup(int n, std::vector<Id> table);

/// Natural partial order: a <= b iff a = aa^{-1}b.
bool natural_leq(const InverseSemigroup& s, Id a, Id b);

/// Z(E(S)): the elements commuting with every idempotent.
std::vector<Id> centralizer_of_idempotents(const InverseSemigroup& s);

/// Maximum idempotent-separating congruence:
/// a mu b iff a^{-1}ea = b^{-1}eb for every idempotent e.
Congruence mu(const InverseSemigroup& s);

bool is_fundamental(const InverseSemigroup& s);

/// Smallest congruence containing the given pairs (union-find closure under
/// left and right translation).
Congruence congruence_generated(const InverseSemigroup& s,
                                const std::vector<std::pair<Id, Id>>& pairs);

struct QuotientResult {
  InverseSemigroup semigroup;
  std::vector<Id> projection;  // S id -> quotient id
};
QuotientResult quotient(const InverseSemigroup& s, const Congruence& rho);

/// Ker rho: union of the rho-classes containing idempotents.
std::vector<Id> kernel_of_congruence(const InverseSemigroup& s,
                                     const Congruence& rho);

bool is_idempotent_separating(const InverseSemigroup& s,
                              const Congruence& rho);

/// Subset predicates used by the normal-subsemigroup checks.
bool is_inverse_subsemigroup(const InverseSemigroup& s,
                             const std::vector<Id>& elems);
bool is_wide_subsemigroup(const InverseSemigroup& s,
                          const std::vector<Id>& elems);
bool is_normal_subsemigroup(const InverseSemigroup& s,
                            const std::vector<Id>& elems);

HomReport check_homomorphism(const InverseSemigroup& s,
                             const InverseSemigroup& t,
                             const std::vector<Id>& map);

/// Backtracking search for a bijective homomorphism S -> T; returns the
/// lexicographically least one or nullopt. Throws size_cap_exceeded above
/// max_size().
std::optional<std::vector<Id>> find_isomorphism(const InverseSemigroup& s,
                                                const InverseSemigroup& t);

/// The induced subsemigroup on a product- and inverse-closed subset.
/// elems must be sorted; the result relabels elems[i] -> i.
InverseSemigroup subsemigroup(const InverseSemigroup& s,
                              const std::vector<Id>& elems);

/// Named test instances: symmetric_inverse (n<=4), chain_semilattice,
/// powerset_semilattice (n<=4), cyclic_group, particular_point_homeos
/// (2<=n<=5, the partial-homeomorphism semigroup of the particular point
/// space restricted to identities and the 0-fixing maps between two-point
/// opens).
InverseSemigroup standard_example(const std::string& name, int n);

/// All congruences, via join-closure of the principal congruences.
/// Throws size_cap_exceeded above max_congruence_size().
std::vector<Congruence> enumerate_congruences(const InverseSemigroup& s);

}  // namespace gmunn

#endif  // GMUNN_CORE_HPP_
