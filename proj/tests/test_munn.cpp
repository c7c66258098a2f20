#include "gmunn/munn.hpp"

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "gmunn/actions.hpp"
#include "gmunn/common.hpp"
#include "gmunn/core.hpp"
#include "gmunn/presheaf.hpp"
#include "test_support.hpp"

using namespace gmunn;
using gmunn::testing::code_of;

namespace {

Semilattice chain(int n) {
  return validate_semilattice(standard_example("chain_semilattice", n));
}

Presheaf fork_presheaf() {
  std::vector<Id> support = {0, 1, 1, 2, 2, 2};
  std::vector<Id> act = {0, 0, 0, 0, 1, 1, 0, 2, 2,
                         0, 1, 3, 0, 1, 4, 0, 2, 5};
  return validate_presheaf(6, chain(3), std::move(support), std::move(act));
}

Presheaf fork_subpresheaf() {
  std::vector<Id> support = {0, 1, 1, 2, 2};
  std::vector<Id> act = {0, 0, 0, 0, 1, 1, 0, 2, 2, 0, 1, 3, 0, 1, 4};
  return validate_presheaf(5, chain(3), std::move(support), std::move(act));
}

}  // namespace

TEST_CASE("Munn semigroup sizes") {
  CHECK(munn_semigroup(chain(2)).table.n == 2);
  auto vee = validate_semilattice(gmunn::testing::antichain_over_zero());
  CHECK(munn_semigroup(vee).table.n == 5);
  auto b2 = validate_semilattice(standard_example("powerset_semilattice", 2));
  auto tb2 = munn_semigroup(b2);
  CHECK(tb2.table.n == 7);
  CHECK(find_isomorphism(tb2.table, standard_example("symmetric_inverse", 2))
            .has_value());
}

TEST_CASE("Munn semigroup idempotents biject with the lattice") {
  for (auto e : {chain(3), chain(4),
                 validate_semilattice(gmunn::testing::diamond_semilattice()),
                 validate_semilattice(
                     standard_example("powerset_semilattice", 2))}) {
    auto te = munn_semigroup(e);
    CHECK(te.table.idem.size() == static_cast<size_t>(e.size()));
  }
}

TEST_CASE("Munn representation of I_2 is faithful") {
  auto s = standard_example("symmetric_inverse", 2);
  auto rep = munn_representation(s);
  CHECK(rep.rep.report.is_hom);
  CHECK(rep.rep.report.is_idempotent_separating);
  CHECK(rep.rep.report.image_is_wide);
  REQUIRE(rep.rep.report.kernel.has_value());
  CHECK(*rep.rep.report.kernel == equality_congruence(s.n));
  CHECK(*rep.rep.report.kernel == mu(s));
}

TEST_CASE("Munn representation collapses a group to the identity") {
  auto g = standard_example("cyclic_group", 4);
  auto rep = munn_representation(g);
  CHECK(rep.target.table.n == 1);
  for (Id u = 0; u < g.n; ++u) CHECK(rep.rep.map[u] == 0);
  CHECK(rep.rep.report.is_hom);
}

TEST_CASE("Munn representation of a Clifford semigroup lands on the idempotents") {
  GroupActionFamily family;
  family.lattice = chain(2);
  family.levels.resize(2);
  family.levels[0].group = standard_example("cyclic_group", 1);
  family.levels[0].carrier = 1;
  family.levels[0].act = {0};
  family.levels[1].group = standard_example("cyclic_group", 2);
  family.levels[1].carrier = 2;
  family.levels[1].act = {0, 1, 1, 0};
  family.phi[{1, 0}] = {0, 0};
  family.psi[{1, 0}] = {0, 0};
  auto s = strong_semilattice_action(family).action.s;

  auto rep = munn_representation(s);
  std::vector<Id> image(rep.rep.map.begin(), rep.rep.map.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  CHECK(image == rep.target.table.idem);
  REQUIRE(rep.rep.report.kernel.has_value());
  CHECK(*rep.rep.report.kernel == mu(s));
}

TEST_CASE("Munn representation kernel is mu across the corpus") {
  for (auto s : {standard_example("symmetric_inverse", 2),
                 standard_example("chain_semilattice", 4),
                 standard_example("powerset_semilattice", 2),
                 standard_example("cyclic_group", 6),
                 standard_example("particular_point_homeos", 3),
                 gmunn::testing::antichain_over_zero()}) {
    auto rep = munn_representation(s);
    CHECK(rep.rep.report.is_hom);
    CHECK(rep.rep.report.is_idempotent_separating);
    CHECK(rep.rep.report.image_is_wide);
    REQUIRE(rep.rep.report.kernel.has_value());
    CHECK(*rep.rep.report.kernel == mu(s));
  }
}

TEST_CASE("generalised Munn semigroup of (E, E, id) is the Munn semigroup") {
  for (auto e : {chain(2), chain(3),
                 validate_semilattice(gmunn::testing::antichain_over_zero()),
                 validate_semilattice(gmunn::testing::diamond_semilattice()),
                 validate_semilattice(
                     standard_example("powerset_semilattice", 2))}) {
    auto tx = generalized_munn(presheaf_from_semilattice(e));
    auto te = munn_semigroup(e);
    CHECK(tx.table.n == te.table.n);
    CHECK(find_isomorphism(tx.table, te.table).has_value());
  }
}

TEST_CASE("generalised Munn semigroup of the fork presheaf") {
  auto tx = generalized_munn(fork_presheaf());
  CHECK(tx.table.n == 5);
  // exactly two elements over the top level: the identity and the swap of
  // the two points sharing a lower point
  int top_count = 0;
  bool saw_identity = false, saw_swap = false;
  for (const auto& el : tx.elements) {
    if (el.e == 2 && el.f == 2) {
      ++top_count;
      if (el.alpha == std::vector<Id>{0, 1, 2, 3, 4, 5}) saw_identity = true;
      if (el.alpha == std::vector<Id>{0, 1, 2, 4, 3, 5}) saw_swap = true;
    }
  }
  CHECK(top_count == 2);
  CHECK(saw_identity);
  CHECK(saw_swap);
}

TEST_CASE("the fork presheaf and its subpresheaf have isomorphic Munn semigroups") {
  auto tx = generalized_munn(fork_presheaf());
  auto ty = generalized_munn(fork_subpresheaf());
  CHECK(tx.table.n == 5);
  CHECK(ty.table.n == 5);
  CHECK(find_isomorphism(tx.table, ty.table).has_value());
}

TEST_CASE("gamma projection on (E, E, id) is bijective") {
  auto e = validate_semilattice(gmunn::testing::diamond_semilattice());
  auto tx = generalized_munn(presheaf_from_semilattice(e));
  auto gamma = gamma_projection(tx);
  CHECK(gamma.report.is_hom);
  CHECK(gamma.report.is_idempotent_separating);
  CHECK(gamma.idempotents_match_lattice);
  REQUIRE(gamma.alpha_injective.has_value());
  CHECK(*gamma.alpha_injective);
  std::vector<Id> image(gamma.theta_map.begin(), gamma.theta_map.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  CHECK(image.size() == tx.elements.size());  // injective
  CHECK(image.size() == static_cast<size_t>(gamma.te.table.n));
}

TEST_CASE("gamma projection on the fork presheaf is not injective but separates idempotents") {
  auto tx = generalized_munn(fork_presheaf());
  auto gamma = gamma_projection(tx);
  CHECK(gamma.report.is_hom);
  CHECK(gamma.report.is_idempotent_separating);
  CHECK(gamma.idempotents_match_lattice);
  // T_E of a 3-chain has 3 elements; both top-level elements project to id
  CHECK(gamma.te.table.n == 3);
  REQUIRE(gamma.alpha_injective.has_value());
  CHECK(*gamma.alpha_injective);
}

TEST_CASE("theta is not determined by alpha without global support") {
  // single bottom point over the diamond lattice: empty fibres over e, f, top
  auto e = validate_semilattice(gmunn::testing::diamond_semilattice());
  auto p = validate_presheaf(1, e, {0}, {0, 0, 0, 0});
  auto tx = generalized_munn(p);
  CHECK_FALSE(tx.carrier_global);
  auto gamma = gamma_projection(tx);
  CHECK_FALSE(gamma.alpha_injective.has_value());
  // two distinct elements share the same alpha graph
  bool duplicate = false;
  for (size_t i = 0; i < tx.elements.size() && !duplicate; ++i)
    for (size_t j = i + 1; j < tx.elements.size(); ++j)
      if (tx.elements[i].alpha == tx.elements[j].alpha) {
        duplicate = true;
        break;
      }
  CHECK(duplicate);
}

TEST_CASE("the right regular action embeds into its generalised Munn semigroup") {
  for (auto s : {standard_example("symmetric_inverse", 2),
                 standard_example("chain_semilattice", 3),
                 standard_example("particular_point_homeos", 3)}) {
    auto rep = generalized_munn_representation(right_regular_action(s));
    CHECK(rep.rep.report.is_hom);
    CHECK(rep.rep.report.is_idempotent_separating);
    CHECK(rep.rep.report.image_is_wide);
    REQUIRE(rep.rep.report.kernel.has_value());
    CHECK(*rep.rep.report.kernel == equality_congruence(s.n));
  }
}

TEST_CASE("the conjugation action represents with kernel mu") {
  for (auto s : {standard_example("symmetric_inverse", 2),
                 standard_example("cyclic_group", 4)}) {
    auto rep = generalized_munn_representation(conjugation_action(s));
    REQUIRE(rep.rep.report.kernel.has_value());
    CHECK(*rep.rep.report.kernel == mu(s));
  }
}

TEST_CASE("quotient actions represent with kernel the quotient congruence") {
  for (auto s : {standard_example("symmetric_inverse", 2),
                 standard_example("chain_semilattice", 3),
                 standard_example("cyclic_group", 4)}) {
    for (const auto& rho : enumerate_congruences(s)) {
      if (!is_idempotent_separating(s, rho)) continue;
      auto a = quotient_action(s, rho);
      auto rep = generalized_munn_representation(a);
      REQUIRE(rep.rep.report.kernel.has_value());
      CHECK(*rep.rep.report.kernel == rho);
    }
  }
}

TEST_CASE("the representation kernel refines the characteristic congruence") {
  // one point fixed by both elements of a 2-chain: rho_X is universal and
  // not idempotent-separating, yet xi still separates the two levels
  auto e = standard_example("chain_semilattice", 2);
  auto a = validate_supported_action(1, e, {0}, {0, 0});
  auto rho = characteristic_congruence(a);
  CHECK(rho == universal_congruence(2));
  CHECK_FALSE(is_idempotent_separating(a.s, rho));
  auto rep = generalized_munn_representation(a);
  REQUIRE(rep.rep.report.kernel.has_value());
  CHECK(*rep.rep.report.kernel == equality_congruence(2));
  CHECK(congruence_refines(*rep.rep.report.kernel, rho));
}

TEST_CASE("kernel equals the characteristic congruence exactly when it separates") {
  for (auto s : {standard_example("symmetric_inverse", 2),
                 standard_example("chain_semilattice", 3),
                 standard_example("cyclic_group", 6)}) {
    for (const auto& a : {conjugation_action(s), right_regular_action(s)}) {
      auto rho = characteristic_congruence(a);
      auto rep = generalized_munn_representation(a);
      REQUIRE(rep.rep.report.kernel.has_value());
      CHECK(congruence_refines(*rep.rep.report.kernel, rho));
      if (is_idempotent_separating(a.s, rho))
        CHECK(*rep.rep.report.kernel == rho);
    }
  }
}

TEST_CASE("rebuilding an action from its representation is exact") {
  for (auto s : {standard_example("symmetric_inverse", 2),
                 standard_example("chain_semilattice", 3)}) {
    for (const auto& a : {conjugation_action(s), right_regular_action(s)}) {
      auto rep = generalized_munn_representation(a);
      auto y = restrict_to_idempotents(a);
      auto rebuilt = action_from_hom(a.s, y, rep.target, rep.rep.map);
      CHECK(rebuilt.action == a);
    }
  }
}

TEST_CASE("a semilattice maps canonically onto the idempotents of T_P") {
  auto e = chain(3);
  auto p = presheaf_from_semilattice(e);
  auto tp = generalized_munn(p);
  std::vector<Id> phi(e.size());
  for (Id g = 0; g < e.size(); ++g) phi[g] = tp.idempotent_ids[g];
  auto built = action_from_hom(e.alg, p, tp, phi);
  CHECK(built.action == right_regular_action(e.alg));
}

TEST_CASE("action_from_hom rejects unqualified maps") {
  auto e = chain(2);
  auto p = presheaf_from_semilattice(e);
  auto tp = generalized_munn(p);
  std::vector<Id> constant(e.size(), tp.idempotent_ids[1]);
  CHECK(code_of([&] { action_from_hom(e.alg, p, tp, constant); }) ==
        Errc::hom_precondition_failed);
}

TEST_CASE("round trip on I_2 with its conjugation presheaf") {
  auto s = standard_example("symmetric_inverse", 2);
  auto p = restrict_to_idempotents(conjugation_action(s));
  auto report = verify_theorem_d_roundtrip(s, p);
  CHECK(report.homs_checked > 0);
  CHECK(report.ok());
}

TEST_CASE("round trip on the 2-chain with itself") {
  auto e = standard_example("chain_semilattice", 2);
  auto p = presheaf_from_semilattice(validate_semilattice(e));
  auto report = verify_theorem_d_roundtrip(e, p);
  CHECK(report.homs_checked == 1);
  CHECK(report.ok());
}

TEST_CASE("isomorphic Munn semigroups carry the same number of actions") {
  auto e = standard_example("chain_semilattice", 3);
  auto tx = generalized_munn(fork_presheaf());
  auto ty = generalized_munn(fork_subpresheaf());
  auto homs_x = enumerate_wide_separating_homs(e, tx.table);
  auto homs_y = enumerate_wide_separating_homs(e, ty.table);
  CHECK(homs_x.size() == homs_y.size());
  CHECK(!homs_x.empty());
}
