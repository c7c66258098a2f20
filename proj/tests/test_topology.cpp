#include "gmunn/topology.hpp"

#include <algorithm>

#include "doctest.h"
#include "gmunn/actions.hpp"
#include "gmunn/common.hpp"
#include "gmunn/core.hpp"
#include "test_support.hpp"

using namespace gmunn;
using gmunn::testing::code_of;

namespace {

EtaleBundle identity_bundle(const FiniteSpace& b) {
  std::vector<Id> pi(b.m);
  for (Id p = 0; p < b.m; ++p) pi[p] = p;
  return validate_bundle(b, b, pi);
}

// two disjoint copies of the base glued over it
EtaleBundle double_cover(const FiniteSpace& b) {
  std::vector<uint32_t> opens;
  for (uint32_t u : b.opens)
    for (uint32_t v : b.opens) opens.push_back(u | (v << b.m));
  FiniteSpace total = validate_space(2 * b.m, std::move(opens));
  std::vector<Id> pi(2 * b.m);
  for (Id p = 0; p < b.m; ++p) {
    pi[p] = p;
    pi[p + b.m] = p;
  }
  return validate_bundle(std::move(total), b, std::move(pi));
}

FiniteSpace chain_space(int m) {
  std::vector<uint32_t> opens;
  uint32_t u = 0;
  opens.push_back(0);
  for (int i = 0; i < m; ++i) {
    u |= 1u << i;
    opens.push_back(u);
  }
  return validate_space(m, std::move(opens));
}

FiniteSpace indiscrete_space(int m) {
  return validate_space(m, {0, (1u << m) - 1});
}

// every open set is a union of section images contained in it
bool sections_form_basis(const EtaleBundle& bundle) {
  auto gamma = sections_presheaf(bundle);
  for (uint32_t w : bundle.total.opens) {
    uint32_t covered = 0;
    for (const auto& sigma : gamma.sections) {
      uint32_t img = 0;
      for (Id p = 0; p < bundle.base.m; ++p)
        if (sigma.values[p] != kNone) img |= 1u << sigma.values[p];
      if ((img & ~w) == 0) covered |= img;
    }
    if (covered != w) return false;
  }
  return true;
}

bool has_global_section(const EtaleBundle& bundle) {
  auto gamma = sections_presheaf(bundle);
  for (const auto& sigma : gamma.sections)
    if (sigma.domain == bundle.base.full()) return true;
  return false;
}

}  // namespace

TEST_CASE("space validation") {
  auto d2 = discrete_space(2);
  CHECK(d2.opens.size() == 4);
  CHECK(is_T0(d2));
  auto sierp = sierpinski_space();
  CHECK(sierp.opens.size() == 3);
  CHECK(is_T0(sierp));
  auto pp3 = particular_point_space(3);
  CHECK(pp3.opens.size() == 5);
  CHECK(is_T0(pp3));
  CHECK_FALSE(is_T0(indiscrete_space(2)));

  CHECK(code_of([] { validate_space(2, {0}); }) == Errc::missing_empty_or_full);
  CHECK(validate_space(2, {0, 1, 2, 3, 3}).opens.size() == 4);  // dups collapse
  CHECK(code_of([] { validate_space(3, {0, 1, 2, 7}); }) ==
        Errc::not_closed_under_union);
}

TEST_CASE("completely prime filters of the Sierpinski space") {
  auto sierp = sierpinski_space();
  auto filters = completely_prime_filters(sierp);
  CHECK(filters == std::vector<uint32_t>{1, 3});
  CHECK(is_sober(sierp));
}

TEST_CASE("the whole-space filter of the indiscrete space is nobody's neighbourhood") {
  auto report = sober_report(indiscrete_space(2));
  CHECK_FALSE(report.t0);
  CHECK_FALSE(report.sober);
  CHECK(report.filters == std::vector<uint32_t>{3});
}

TEST_CASE("the particular point space is sober") {
  // Every completely prime filter of a finite T0 space is a principal
  // up-set at a minimal point neighbourhood, so T0 and sober agree on
  // finite spaces; the set {{0},{0,1},X} is not upward closed and hence
  // not a filter at all.
  auto pp3 = particular_point_space(3);
  auto report = sober_report(pp3);
  CHECK(report.t0);
  CHECK(report.sober);
  CHECK(report.filters.size() == 3);
  CHECK(report.nonpoint_filters.empty());
}

TEST_CASE("sober agrees with T0 on all small spaces by exhaustive check") {
  // enumerate all preorders on up to 3 labelled points; each finite
  // topology arises this way
  for (int m = 1; m <= 3; ++m) {
    const int bits = m * m;
    for (uint32_t rel = 0; rel < (1u << bits); ++rel) {
      auto leq = [&](Id i, Id j) {
        return i == j || (rel & (1u << (i * m + j))) != 0;
      };
      bool transitive = true;
      for (Id i = 0; i < m && transitive; ++i)
        for (Id j = 0; j < m && transitive; ++j)
          for (Id k = 0; k < m; ++k)
            if (leq(i, j) && leq(j, k) && !leq(i, k)) {
              transitive = false;
              break;
            }
      if (!transitive) continue;
      // opens = down-sets of the preorder
      std::vector<uint32_t> opens;
      for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool closed = true;
        for (Id i = 0; i < m && closed; ++i) {
          if (!(mask & (1u << i))) continue;
          for (Id j = 0; j < m; ++j)
            if (leq(j, i) && !(mask & (1u << j))) {
              closed = false;
              break;
            }
        }
        if (closed) opens.push_back(mask);
      }
      auto space = validate_space(m, std::move(opens));
      CHECK(is_sober(space) == is_T0(space));
    }
  }
}

TEST_CASE("partial homeomorphism semigroup sizes") {
  CHECK(partial_homeo_semigroup(discrete_space(1)).table.n == 2);
  auto sierp = partial_homeo_semigroup(sierpinski_space());
  CHECK(sierp.table.n == 3);
  for (Id a = 0; a < sierp.table.n; ++a) CHECK(sierp.table.is_idempotent(a));
  auto d2 = partial_homeo_semigroup(discrete_space(2));
  CHECK(d2.table.n == 7);
  CHECK(find_isomorphism(d2.table, standard_example("symmetric_inverse", 2))
            .has_value());
}

TEST_CASE("partial homeomorphisms of the particular point space") {
  // identities on the five opens, the two maps between {0,1} and {0,2},
  // and the full swap of the two non-particular points
  auto hs = partial_homeo_semigroup(particular_point_space(3));
  CHECK(hs.table.n == 8);
  CHECK(hs.table.idem.size() == 5);
  CHECK(is_fundamental(hs.table));
  // the named seven-element structure is a wide inverse subsemigroup
  auto named = standard_example("particular_point_homeos", 3);
  std::vector<Id> sub;
  for (size_t i = 0; i < hs.elements.size(); ++i)
    if (hs.elements[i].dom != hs.space.full() ||
        hs.elements[i].map == std::vector<Id>{0, 1, 2})
      sub.push_back(static_cast<Id>(i));
  CHECK(sub.size() == 7);
  CHECK(is_wide_subsemigroup(hs.table, sub));
  CHECK(find_isomorphism(subsemigroup(hs.table, sub), named).has_value());
}

TEST_CASE("direct images identify the Munn semigroup of the opens") {
  for (const auto& space : {sierpinski_space(), discrete_space(2),
                            chain_space(3), particular_point_space(3)}) {
    auto report = prop_e_check(space);
    CHECK(report.iso);
    CHECK(report.fundamental);
    CHECK(report.homeo_size == report.munn_size);
  }
  CHECK(code_of([] { prop_e_check(indiscrete_space(2)); }) == Errc::not_sober);
}

TEST_CASE("bundle validation") {
  auto b = sierpinski_space();
  auto bundle = identity_bundle(b);
  CHECK(bundle.pi == std::vector<Id>{0, 1});

  // constant map to the open point is not surjective
  CHECK(code_of([&] {
          validate_bundle(discrete_space(2), sierpinski_space(), {0, 0});
        }) == Errc::not_surjective);
  // the fold of the Sierpinski space onto a point is not a local
  // homeomorphism at the closed point (its only neighbourhood is the whole
  // space, which is not injective over the point)
  CHECK(code_of([&] {
          validate_bundle(sierpinski_space(), discrete_space(1), {0, 0});
        }) == Errc::not_local_homeo);
}

TEST_CASE("sections of the identity bundle form the opens presheaf") {
  auto b = sierpinski_space();
  auto gamma = sections_presheaf(identity_bundle(b));
  CHECK(gamma.sections.size() == b.opens.size());
  auto omega = open_set_semilattice(b);
  CHECK(gamma.presheaf == presheaf_from_semilattice(omega));
}

TEST_CASE("sections of the two-point fibre over a point") {
  auto bundle = validate_bundle(discrete_space(2), discrete_space(1), {0, 0});
  auto gamma = sections_presheaf(bundle);
  CHECK(gamma.sections.size() == 3);  // empty section plus two global ones
  CHECK(has_global_section(bundle));
  CHECK(gamma.presheaf.global_support());
}

TEST_CASE("global support of the sections presheaf marks global sections") {
  // an open subspace embedded over a bigger base has no global section
  // unless the embedding is onto; remove the closed point's fibre
  auto total = validate_space(1, {0, 1});
  auto base = sierpinski_space();
  // pi: the single total point over the open base point: not surjective,
  // hence not a bundle at all
  CHECK(code_of([&] { validate_bundle(total, base, {0}); }) ==
        Errc::not_surjective);
  for (const auto& bundle :
       {identity_bundle(sierpinski_space()), double_cover(sierpinski_space()),
        validate_bundle(discrete_space(2), discrete_space(1), {0, 0})}) {
    auto gamma = sections_presheaf(bundle);
    CHECK(gamma.presheaf.global_support() == has_global_section(bundle));
  }
}

TEST_CASE("section images are an open basis of the total space") {
  for (const auto& bundle :
       {identity_bundle(sierpinski_space()), identity_bundle(chain_space(3)),
        double_cover(sierpinski_space()),
        validate_bundle(discrete_space(4), discrete_space(2), {0, 1, 0, 1})}) {
    CHECK(sections_form_basis(bundle));
  }
}

TEST_CASE("bundle automorphisms of the identity bundle match the partial homeomorphisms") {
  auto b = sierpinski_space();
  auto la = la_semigroup(identity_bundle(b));
  CHECK(la.table.n == 3);
  auto hs = partial_homeo_semigroup(b);
  CHECK(find_isomorphism(la.table, hs.table).has_value());
  // theta and theta_hat coincide on the identity bundle
  for (const auto& el : la.elements) CHECK(el.theta == el.theta_hat);
}

TEST_CASE("bundle automorphisms of the two-point fibre") {
  auto bundle = validate_bundle(discrete_space(2), discrete_space(1), {0, 0});
  auto la = la_semigroup(bundle);
  CHECK(la.table.n == 3);  // empty pair plus the two fibre permutations
}

TEST_CASE("the La action validates and is idempotent-separating") {
  for (const auto& bundle :
       {identity_bundle(sierpinski_space()),
        identity_bundle(particular_point_space(3)),
        double_cover(sierpinski_space()),
        validate_bundle(discrete_space(2), discrete_space(1), {0, 0})}) {
    auto la = la_action(bundle);
    auto rho = characteristic_congruence(la.action);
    CHECK(is_idempotent_separating(la.la.table, rho));
    if (is_sober(bundle.base))
      CHECK(rho == equality_congruence(la.la.table.n));
  }
}

TEST_CASE("Munn semigroup of the sections equals the bundle automorphisms") {
  for (const auto& bundle :
       {identity_bundle(sierpinski_space()),
        identity_bundle(chain_space(3)),
        identity_bundle(particular_point_space(3)),
        double_cover(sierpinski_space()),
        validate_bundle(discrete_space(2), discrete_space(1), {0, 0}),
        validate_bundle(discrete_space(4), discrete_space(2), {0, 1, 0, 1})}) {
    auto report = theorem_f_check(bundle);
    CHECK(report.iso);
    CHECK(report.reconstruction_ok);
    CHECK(report.char_cong_equality);
    CHECK(report.la_size == report.munn_size);
  }
  CHECK(code_of([&] { theorem_f_check(identity_bundle(indiscrete_space(2))); }) ==
        Errc::not_sober);
}

TEST_CASE("double cover sizes") {
  auto bundle = double_cover(sierpinski_space());
  auto gamma = sections_presheaf(bundle);
  CHECK(gamma.sections.size() == 5);
  auto la = la_semigroup(bundle);
  CHECK(la.table.n == 5);
}

TEST_CASE("order-ideal topology of the conjugation action") {
  auto s = standard_example("symmetric_inverse", 2);
  auto conj = conjugation_action(s);
  auto bundle = order_ideal_topology(conj);
  // support is injective, so every order-ideal is compatible
  auto compat = compatible_order_ideals(conj);
  CHECK(compat == bundle.total.opens);
}

TEST_CASE("order-ideal topology of a semilattice acting on itself") {
  auto e = standard_example("chain_semilattice", 2);
  auto reg = right_regular_action(e);
  auto bundle = order_ideal_topology(reg);
  CHECK(bundle.total.opens == std::vector<uint32_t>{0, 1, 3});
  CHECK(compatible_order_ideals(reg) == bundle.total.opens);
}

TEST_CASE("compatible order-ideals are the opens with injective support") {
  auto s = standard_example("symmetric_inverse", 2);
  auto reg = right_regular_action(s);
  auto bundle = order_ideal_topology(reg);
  auto compat = compatible_order_ideals(reg);
  // independent enumeration: injectivity of the support map on each open
  std::vector<uint32_t> injective_opens;
  for (uint32_t mask : bundle.total.opens) {
    uint32_t seen = 0;
    bool injective = true;
    for (Id x = 0; x < reg.m && injective; ++x) {
      if (!(mask & (1u << x))) continue;
      if (seen & (1u << bundle.pi[x])) injective = false;
      seen |= 1u << bundle.pi[x];
    }
    if (injective) injective_opens.push_back(mask);
  }
  CHECK(compat == injective_opens);
  CHECK(compat.size() < bundle.total.opens.size());
}

TEST_CASE("order-ideal topology requires global support") {
  auto e = gmunn::testing::diamond_semilattice();
  std::vector<Id> support = {0};
  std::vector<Id> act = {0, 0, 0, 0};
  auto a = validate_supported_action(1, e, std::move(support), std::move(act));
  CHECK_FALSE(a.global);
  CHECK(code_of([&] { order_ideal_topology(a); }) == Errc::not_global);
}

TEST_CASE("subspaces of open sets") {
  auto pp3 = particular_point_space(3);
  auto sub = subspace(pp3, 0b011);  // points {0,1}: a Sierpinski copy
  CHECK(sub == sierpinski_space());
}
