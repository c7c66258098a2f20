#ifndef GMUNN_SUITES_HPP_
#define GMUNN_SUITES_HPP_

#include <string>
#include <vector>

#include "gmunn/actions.hpp"
#include "gmunn/core.hpp"
#include "gmunn/munn.hpp"
#include "gmunn/presheaf.hpp"
#include "gmunn/topology.hpp"

// Fixed instance corpora and the two representation verification suites
// shared by the CLI and the acceptance tests.
namespace gmunn::suites {

struct NamedSemigroup {
  std::string name;
  InverseSemigroup s;
};

/// I_1..I_3, chains, powerset semilattices, cyclic groups up to 6, the
/// particular point semigroup, and two small hand-built semilattices.
std::vector<NamedSemigroup> semigroup_corpus();

struct NamedAction {
  std::string name;
  SupportedAction action;
};

/// Constructor-built supported actions over the corpus (conjugation, right
/// regular, quotients, free, strong semilattice, extension, presheaf and
/// section actions); at least twenty entries.
std::vector<NamedAction> action_corpus();

/// All meet-semilattices with at most max_n elements, one per isomorphism
/// class, by enumerating labelled posets with binary meets and reducing by
/// canonical relabelling.
std::vector<Semilattice> enumerate_semilattices(int max_n);

/// All topologies on at most max_points points, one per homeomorphism
/// class, by enumerating preorders.
std::vector<FiniteSpace> enumerate_spaces(int max_points);

/// The six-element presheaf over a 3-chain with fibre sizes 1, 2, 3 whose
/// generalised Munn semigroup has five elements, and its five-element
/// subpresheaf with the same T.
Presheaf fork_presheaf();
Presheaf fork_subpresheaf();

/// A small battery of etale bundles over sober bases.
std::vector<EtaleBundle> bundle_battery();

struct RepresentationCheck {
  std::string name;
  bool is_hom = false;
  bool separating = false;
  bool wide = false;
  bool kernel_contained = false;          // ker xi within rho_X
  bool kernel_exact_when_separating = false;
  bool global_implies_separating = false;
  bool ok() const {
    return is_hom && separating && wide && kernel_contained &&
           kernel_exact_when_separating && global_implies_separating;
  }
};

struct RepresentationSuite {
  std::vector<RepresentationCheck> items;
  bool ok() const;
};

/// Generalised Munn representations of every corpus action.
RepresentationSuite representation_suite();

struct RoundTripCheck {
  std::string name;
  RoundTripReport report;
};

struct RoundTripSuite {
  std::vector<RoundTripCheck> items;
  bool ok() const;
};

/// Hom/action round trips over all corpus pairs within the search bounds.
RoundTripSuite roundtrip_suite();

}  // namespace gmunn::suites

#endif  // GMUNN_SUITES_HPP_
