#include "gmunn/suites.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace gmunn::suites {

namespace {

InverseSemigroup antichain_over_zero() {
  return validate_inverse_semigroup(3, {0, 0, 0, 0, 1, 0, 0, 0, 2});
}

InverseSemigroup diamond() {
  return validate_inverse_semigroup(
      4, {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2, 0, 1, 2, 3});
}

GroupActionFamily two_level_family() {
  GroupActionFamily family;
  family.lattice =
      validate_semilattice(standard_example("chain_semilattice", 2));
  family.levels.resize(2);
  family.levels[0].group = standard_example("cyclic_group", 1);
  family.levels[0].carrier = 1;
  family.levels[0].act = {0};
  family.levels[1].group = standard_example("cyclic_group", 2);
  family.levels[1].carrier = 2;
  family.levels[1].act = {0, 1, 1, 0};
  family.phi[{1, 0}] = {0, 0};
  family.psi[{1, 0}] = {0, 0};
  return family;
}

SupportedAction presheaf_as_action(const Presheaf& p) {
  return validate_supported_action(p.m, p.lattice.alg, p.support, p.act);
}

}  // namespace

std::vector<NamedSemigroup> semigroup_corpus() {
  std::vector<NamedSemigroup> out;
  out.push_back({"I_1", standard_example("symmetric_inverse", 1)});
  out.push_back({"I_2", standard_example("symmetric_inverse", 2)});
  out.push_back({"I_3", standard_example("symmetric_inverse", 3)});
  out.push_back({"chain_2", standard_example("chain_semilattice", 2)});
  out.push_back({"chain_3", standard_example("chain_semilattice", 3)});
  out.push_back({"chain_4", standard_example("chain_semilattice", 4)});
  out.push_back({"powerset_1", standard_example("powerset_semilattice", 1)});
  out.push_back({"powerset_2", standard_example("powerset_semilattice", 2)});
  out.push_back({"powerset_3", standard_example("powerset_semilattice", 3)});
  for (int n = 2; n <= 6; ++n)
    out.push_back({"Z_" + std::to_string(n),
                   standard_example("cyclic_group", n)});
  out.push_back(
      {"particular_point", standard_example("particular_point_homeos", 3)});
  out.push_back({"antichain_over_zero", antichain_over_zero()});
  out.push_back({"diamond", diamond()});
  return out;
}

std::vector<NamedAction> action_corpus() {
  std::vector<NamedAction> out;
  for (const auto& [name, s] : semigroup_corpus()) {
    if (s.n > 8 && name != "particular_point") continue;
    out.push_back({"conjugation(" + name + ")", conjugation_action(s)});
    out.push_back({"right_regular(" + name + ")", right_regular_action(s)});
  }
  for (const char* name : {"I_2", "Z_4", "Z_6", "particular_point"}) {
    for (const auto& [n2, s] : semigroup_corpus())
      if (n2 == name)
        out.push_back({std::string("quotient_mu(") + name + ")",
                       quotient_action(s, mu(s))});
  }
  {
    auto s = standard_example("symmetric_inverse", 2);
    auto p = restrict_to_idempotents(conjugation_action(s));
    out.push_back({"free(I_2)", free_action(s, p).action});
    auto e = standard_example("chain_semilattice", 3);
    auto pe = restrict_to_idempotents(conjugation_action(e));
    out.push_back({"free(chain_3)", free_action(e, pe).action});
  }
  out.push_back(
      {"strong_semilattice(Z_2/2-chain)",
       strong_semilattice_action(two_level_family()).action});
  {
    auto z4 = standard_example("cyclic_group", 4);
    auto z2 = standard_example("cyclic_group", 2);
    out.push_back(
        {"extension(Z_4->Z_2)", extension_action(z4, z2, {0, 1, 0, 1}).action});
  }
  out.push_back({"fork_presheaf", presheaf_as_action(fork_presheaf())});
  out.push_back({"fork_subpresheaf", presheaf_as_action(fork_subpresheaf())});
  {
    // one bottom point plus a point over each atom of the diamond: the
    // characteristic congruence is equality without global support
    auto e = validate_semilattice(diamond());
    std::vector<Id> support = {0, 1, 2};
    std::vector<Id> act = {0, 0, 0, 0, 0, 1, 0, 1, 0, 0, 2, 2};
    out.push_back({"diamond_partial",
                   validate_supported_action(3, e.alg, std::move(support),
                                             std::move(act))});
  }
  out.push_back(
      {"la(sierpinski)", la_action(validate_bundle(sierpinski_space(),
                                                   sierpinski_space(),
                                                   {0, 1}))
                             .action});
  return out;
}

std::vector<Semilattice> enumerate_semilattices(int max_n) {
  std::vector<Semilattice> out;
  for (int n = 1; n <= max_n; ++n) {
    const int bits = n * (n - 1) / 2;
    std::set<std::vector<Id>> canon_tables;
    // strict relations compatible with the numeric order: every finite
    // poset admits a linear extension, so each isomorphism class appears
    for (uint32_t rel = 0; rel < (1u << bits); ++rel) {
      auto bit_index = [&](Id i, Id j) {  // i < j
        return i * n - i * (i + 1) / 2 + (j - i - 1);
      };
      auto leq = [&](Id i, Id j) {
        if (i == j) return true;
        if (i > j) return false;
        return (rel & (1u << bit_index(i, j))) != 0;
      };
      bool transitive = true;
      for (Id i = 0; i < n && transitive; ++i)
        for (Id j = 0; j < n && transitive; ++j)
          for (Id k = 0; k < n; ++k)
            if (leq(i, j) && leq(j, k) && !leq(i, k)) {
              transitive = false;
              break;
            }
      if (!transitive) continue;
      // binary meets must exist: a greatest common lower bound per pair
      std::vector<Id> meet(static_cast<size_t>(n) * n, kNone);
      bool has_meets = true;
      for (Id a = 0; a < n && has_meets; ++a)
        for (Id b = 0; b < n; ++b) {
          Id best = kNone;
          for (Id c = 0; c < n; ++c) {
            if (!leq(c, a) || !leq(c, b)) continue;
            if (best == kNone || leq(best, c)) best = c;
          }
          if (best == kNone) {
            has_meets = false;
            break;
          }
          for (Id c = 0; c < n; ++c)
            if (leq(c, a) && leq(c, b) && !leq(c, best)) {
              has_meets = false;
              break;
            }
          if (!has_meets) break;
          meet[static_cast<size_t>(a) * n + b] = best;
        }
      if (!has_meets) continue;
      // canonical form: least table over all relabellings
      std::vector<Id> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<Id> best_table;
      do {
        std::vector<Id> relabeled(static_cast<size_t>(n) * n);
        for (Id a = 0; a < n; ++a)
          for (Id b = 0; b < n; ++b)
            relabeled[static_cast<size_t>(perm[a]) * n + perm[b]] =
                perm[meet[static_cast<size_t>(a) * n + b]];
        if (best_table.empty() || relabeled < best_table)
          best_table = std::move(relabeled);
      } while (std::next_permutation(perm.begin(), perm.end()));
      canon_tables.insert(std::move(best_table));
    }
    for (const auto& table : canon_tables)
      out.push_back(semilattice_from_table(n, table));
  }
  return out;
}

std::vector<FiniteSpace> enumerate_spaces(int max_points) {
  std::vector<FiniteSpace> out;
  for (int m = 1; m <= max_points; ++m) {
    std::set<std::vector<uint32_t>> canon;
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
      // canonical form over point permutations
      std::vector<Id> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<uint32_t> best;
      do {
        std::vector<uint32_t> relabeled;
        relabeled.reserve(opens.size());
        for (uint32_t u : opens) {
          uint32_t v = 0;
          for (Id p = 0; p < m; ++p)
            if (u & (1u << p)) v |= 1u << perm[p];
          relabeled.push_back(v);
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (best.empty() || relabeled < best) best = std::move(relabeled);
      } while (std::next_permutation(perm.begin(), perm.end()));
      canon.insert(std::move(best));
    }
    for (const auto& opens : canon)
      out.push_back(validate_space(m, opens));
  }
  return out;
}

Presheaf fork_presheaf() {
  auto e = validate_semilattice(standard_example("chain_semilattice", 3));
  std::vector<Id> support = {0, 1, 1, 2, 2, 2};
  std::vector<Id> act = {0, 0, 0, 0, 1, 1, 0, 2, 2,
                         0, 1, 3, 0, 1, 4, 0, 2, 5};
  return validate_presheaf(6, std::move(e), std::move(support),
                           std::move(act));
}

Presheaf fork_subpresheaf() {
  auto e = validate_semilattice(standard_example("chain_semilattice", 3));
  std::vector<Id> support = {0, 1, 1, 2, 2};
  std::vector<Id> act = {0, 0, 0, 0, 1, 1, 0, 2, 2, 0, 1, 3, 0, 1, 4};
  return validate_presheaf(5, std::move(e), std::move(support),
                           std::move(act));
}

std::vector<EtaleBundle> bundle_battery() {
  std::vector<EtaleBundle> out;
  auto identity = [](const FiniteSpace& b) {
    std::vector<Id> pi(b.m);
    std::iota(pi.begin(), pi.end(), 0);
    return validate_bundle(b, b, pi);
  };
  out.push_back(identity(sierpinski_space()));
  out.push_back(identity(discrete_space(2)));
  // chain space on three points
  out.push_back(identity(validate_space(3, {0, 1, 3, 7})));
  // two-point discrete fibre over a point
  out.push_back(validate_bundle(discrete_space(2), discrete_space(1), {0, 0}));
  // double cover of the Sierpinski space
  {
    auto b = sierpinski_space();
    std::vector<uint32_t> opens;
    for (uint32_t u : b.opens)
      for (uint32_t v : b.opens) opens.push_back(u | (v << b.m));
    auto total = validate_space(4, std::move(opens));
    out.push_back(validate_bundle(std::move(total), b, {0, 1, 0, 1}));
  }
  // double cover of the two-point discrete space
  out.push_back(
      validate_bundle(discrete_space(4), discrete_space(2), {0, 1, 0, 1}));
  return out;
}

bool RepresentationSuite::ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const RepresentationCheck& c) { return c.ok(); });
}

RepresentationSuite representation_suite() {
  RepresentationSuite suite;
  for (const auto& [name, action] : action_corpus()) {
    RepresentationCheck check;
    check.name = name;
    auto rep = generalized_munn_representation(action);
    check.is_hom = rep.rep.report.is_hom;
    check.separating = rep.rep.report.is_idempotent_separating;
    check.wide = rep.rep.report.image_is_wide;
    auto rho = characteristic_congruence(action);
    bool rho_separating = is_idempotent_separating(action.s, rho);
    check.kernel_contained =
        rep.rep.report.kernel.has_value() &&
        congruence_refines(*rep.rep.report.kernel, rho);
    check.kernel_exact_when_separating =
        !rho_separating || *rep.rep.report.kernel == rho;
    check.global_implies_separating = !action.global || rho_separating;
    suite.items.push_back(std::move(check));
  }
  return suite;
}

bool RoundTripSuite::ok() const {
  return std::all_of(items.begin(), items.end(),
                     [](const RoundTripCheck& c) { return c.report.ok(); });
}

RoundTripSuite roundtrip_suite() {
  RoundTripSuite suite;
  for (const auto& [name, s] : semigroup_corpus()) {
    if (s.n > 8) continue;
    Presheaf p = restrict_to_idempotents(conjugation_action(s));
    if (generalized_munn(p).table.n > 16) continue;
    suite.items.push_back({name + " / conjugation presheaf",
                           verify_theorem_d_roundtrip(s, p)});
  }
  auto chain3 = standard_example("chain_semilattice", 3);
  suite.items.push_back(
      {"chain_3 / fork", verify_theorem_d_roundtrip(chain3, fork_presheaf())});
  suite.items.push_back({"chain_3 / fork_sub",
                         verify_theorem_d_roundtrip(chain3,
                                                    fork_subpresheaf())});
  return suite;
}

}  // namespace gmunn::suites
