#include "gmunn/core.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "gmunn/common.hpp"
#include "test_support.hpp"

using namespace gmunn;
using gmunn::testing::code_of;

namespace {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

int factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// |I_n| = sum_k C(n,k)^2 k!
int symmetric_inverse_order(int n) {
  int total = 0;
  for (int k = 0; k <= n; ++k)
    total += binomial(n, k) * binomial(n, k) * factorial(k);
  return total;
}

std::vector<InverseSemigroup> small_corpus() {
  std::vector<InverseSemigroup> out;
  out.push_back(standard_example("symmetric_inverse", 1));
  out.push_back(standard_example("symmetric_inverse", 2));
  out.push_back(standard_example("chain_semilattice", 2));
  out.push_back(standard_example("chain_semilattice", 3));
  out.push_back(standard_example("powerset_semilattice", 2));
  out.push_back(standard_example("cyclic_group", 1));
  out.push_back(standard_example("cyclic_group", 4));
  out.push_back(standard_example("cyclic_group", 6));
  out.push_back(standard_example("particular_point_homeos", 3));
  out.push_back(gmunn::testing::sym3());
  out.push_back(gmunn::testing::antichain_over_zero());
  out.push_back(gmunn::testing::diamond_semilattice());
  return out;
}

}  // namespace

TEST_CASE("validation accepts the one-element semigroup") {
  auto s = validate_inverse_semigroup(1, {0});
  CHECK(s.n == 1);
  CHECK(s.idem == std::vector<Id>{0});
  CHECK(s.inv == std::vector<Id>{0});
}

TEST_CASE("validation accepts I_2 with four idempotents") {
  auto s = standard_example("symmetric_inverse", 2);
  CHECK(s.n == symmetric_inverse_order(2));
  CHECK(s.n == 7);
  // idempotents of I_n are the partial identities: 2^n of them
  CHECK(s.idem.size() == 4);
}

TEST_CASE("validation accepts semilattices, every element idempotent") {
  auto s = standard_example("chain_semilattice", 2);
  CHECK(s.idem.size() == 2);
  for (Id a = 0; a < s.n; ++a) CHECK(s.is_idempotent(a));
}

TEST_CASE("left-zero band is rejected for non-commuting idempotents") {
  CHECK(code_of([] { validate_inverse_semigroup(2, {0, 0, 1, 1}); }) ==
        Errc::idempotents_do_not_commute);
}

TEST_CASE("validation rejects a non-associative table") {
  // 2-element table with x*y = x except 1*1 = 0: (1*1)*1=0*1=0, 1*(1*1)=1*0=1
  CHECK(code_of([] { validate_inverse_semigroup(2, {0, 0, 1, 0}); }) ==
        Errc::not_associative);
}

TEST_CASE("validation rejects tables without inverses") {
  // {0,1} with multiplication constant 0 is a null semigroup: 1 has no
  // inverse since x*1*x... 1x1 = 0 != 1 for all x
  CHECK(code_of([] { validate_inverse_semigroup(2, {0, 0, 0, 0}); }) ==
        Errc::not_regular);
}

TEST_CASE("natural order on a semilattice is e <= f iff ef = e") {
  auto e = gmunn::testing::diamond_semilattice();
  for (Id a = 0; a < e.n; ++a)
    for (Id b = 0; b < e.n; ++b)
      CHECK(natural_leq(e, a, b) == (e.at(a, b) == a));
}

TEST_CASE("natural order on I_2 is the restriction order") {
  auto s = standard_example("symmetric_inverse", 2);
  gmunn::testing::PartialMapModel model(2);
  REQUIRE(static_cast<int>(model.maps.size()) == s.n);
  for (Id a = 0; a < s.n; ++a)
    for (Id b = 0; b < s.n; ++b)
      CHECK(natural_leq(s, a, b) == model.restriction_leq(a, b));
  // the empty map is id 0 and lies below everything
  for (Id b = 0; b < s.n; ++b) CHECK(natural_leq(s, 0, b));
}

TEST_CASE("natural order on a group is equality") {
  auto g = standard_example("cyclic_group", 5);
  for (Id a = 0; a < g.n; ++a)
    for (Id b = 0; b < g.n; ++b) CHECK(natural_leq(g, a, b) == (a == b));
}

TEST_CASE("centralizer of idempotents") {
  auto chain = standard_example("chain_semilattice", 3);
  CHECK(centralizer_of_idempotents(chain) == std::vector<Id>{0, 1, 2});

  auto i2 = standard_example("symmetric_inverse", 2);
  CHECK(centralizer_of_idempotents(i2) == i2.idem);

  auto g = standard_example("cyclic_group", 4);
  CHECK(centralizer_of_idempotents(g).size() == 4);
}

TEST_CASE("mu on a group is universal") {
  auto g = standard_example("cyclic_group", 4);
  CHECK(mu(g) == universal_congruence(4));
  CHECK_FALSE(is_fundamental(g));
}

TEST_CASE("mu on I_2 is equality") {
  auto s = standard_example("symmetric_inverse", 2);
  CHECK(mu(s) == equality_congruence(s.n));
  CHECK(is_fundamental(s));
}

TEST_CASE("mu on the particular point semigroup is equality") {
  auto s = standard_example("particular_point_homeos", 3);
  CHECK(s.n == 7);
  CHECK(mu(s) == equality_congruence(7));
  CHECK(is_fundamental(s));
}

TEST_CASE("semilattices are fundamental, I_3 is fundamental") {
  CHECK(is_fundamental(standard_example("chain_semilattice", 4)));
  auto i3 = standard_example("symmetric_inverse", 3);
  CHECK(i3.n == 34);
  CHECK(is_fundamental(i3));
}

TEST_CASE("congruence generated by nothing is equality") {
  auto s = standard_example("symmetric_inverse", 2);
  CHECK(congruence_generated(s, {}) == equality_congruence(s.n));
}

TEST_CASE("congruence generated in a group matches normal-closure cosets") {
  // cyclic: subgroup generated by g is the multiples of gcd(g, n)
  auto g = standard_example("cyclic_group", 6);
  for (Id x = 0; x < 6; ++x) {
    auto rho = congruence_generated(g, {{0, x}});
    int d = std::gcd(6, static_cast<int>(x));
    Congruence expect{6, {}};
    expect.classof.resize(6);
    for (Id a = 0; a < 6; ++a) expect.classof[a] = a % d;
    CHECK(rho == expect);
  }
  // S_3: normal closure of a transposition is all of S_3, of a 3-cycle is A_3
  auto s3 = gmunn::testing::sym3();
  CHECK(congruence_generated(s3, {{0, 1}}) == universal_congruence(6));
  auto rho = congruence_generated(s3, {{0, 4}});
  CHECK(rho.class_count() == 2);
  CHECK(rho.same(0, 4));
  CHECK(rho.same(0, 5));
  CHECK(rho.same(1, 2));
  CHECK(rho.same(1, 3));
  CHECK_FALSE(rho.same(0, 1));
}

TEST_CASE("one pair collapses the 2-chain") {
  auto e = standard_example("chain_semilattice", 2);
  CHECK(congruence_generated(e, {{0, 1}}) == universal_congruence(2));
}

TEST_CASE("quotient by equality and by the universal congruence") {
  auto s = standard_example("symmetric_inverse", 2);
  auto q1 = quotient(s, equality_congruence(s.n));
  CHECK(q1.semigroup == s);
  auto q2 = quotient(s, universal_congruence(s.n));
  CHECK(q2.semigroup.n == 1);
}

TEST_CASE("quotient of a group by mu is its idempotent semilattice") {
  auto g = standard_example("cyclic_group", 4);
  auto q = quotient(g, mu(g));
  CHECK(q.semigroup.n == 1);
  // projection is a surjective homomorphism with kernel mu
  auto rep = check_homomorphism(g, q.semigroup, q.projection);
  CHECK(rep.is_hom);
  REQUIRE(rep.kernel.has_value());
  CHECK(*rep.kernel == mu(g));
}

TEST_CASE("kernel of a congruence") {
  auto s = standard_example("symmetric_inverse", 2);
  CHECK(kernel_of_congruence(s, equality_congruence(s.n)) == s.idem);
  CHECK(kernel_of_congruence(s, mu(s)) == centralizer_of_idempotents(s));
  std::vector<Id> all(s.n);
  std::iota(all.begin(), all.end(), 0);
  CHECK(kernel_of_congruence(s, universal_congruence(s.n)) == all);
  // Ker mu is a normal subsemigroup
  CHECK(is_normal_subsemigroup(s, kernel_of_congruence(s, mu(s))));
}

TEST_CASE("check_homomorphism flags") {
  auto s = standard_example("symmetric_inverse", 2);
  std::vector<Id> ident(s.n);
  std::iota(ident.begin(), ident.end(), 0);
  auto rep = check_homomorphism(s, s, ident);
  CHECK(rep.is_hom);
  CHECK(rep.is_idempotent_separating);
  CHECK(rep.image_is_wide);
  REQUIRE(rep.kernel.has_value());
  CHECK(*rep.kernel == equality_congruence(s.n));

  auto q = quotient(s, mu(s));
  auto rep2 = check_homomorphism(s, q.semigroup, q.projection);
  CHECK(rep2.is_hom);
  CHECK(rep2.is_idempotent_separating);
  CHECK(rep2.image_is_wide);
  CHECK(*rep2.kernel == mu(s));

  // constant map onto a non-idempotent is not a homomorphism
  Id non_idem = kNone;
  for (Id a = 0; a < s.n; ++a)
    if (!s.is_idempotent(a)) non_idem = a;
  REQUIRE(non_idem != kNone);
  std::vector<Id> constant(s.n, non_idem);
  CHECK_FALSE(check_homomorphism(s, s, constant).is_hom);
}

TEST_CASE("find_isomorphism finds the identity on S vs S") {
  auto s = standard_example("symmetric_inverse", 2);
  auto iso = find_isomorphism(s, s);
  REQUIRE(iso.has_value());
  std::vector<Id> ident(s.n);
  std::iota(ident.begin(), ident.end(), 0);
  CHECK(*iso == ident);
}

TEST_CASE("find_isomorphism distinguishes order structure") {
  auto chain = standard_example("chain_semilattice", 3);
  auto vee = gmunn::testing::antichain_over_zero();
  CHECK_FALSE(find_isomorphism(chain, vee).has_value());
  CHECK_FALSE(find_isomorphism(vee, chain).has_value());
}

TEST_CASE("find_isomorphism is symmetric") {
  auto a = standard_example("powerset_semilattice", 2);
  // relabelled copy of the powerset semilattice: permute ids by reversal
  std::vector<Id> perm = {3, 2, 1, 0};
  std::vector<Id> table(16);
  for (Id i = 0; i < 4; ++i)
    for (Id j = 0; j < 4; ++j)
      table[perm[i] * 4 + perm[j]] = perm[a.at(i, j)];
  auto b = validate_inverse_semigroup(4, std::move(table));
  CHECK(find_isomorphism(a, b).has_value());
  CHECK(find_isomorphism(b, a).has_value());
  auto chain = standard_example("chain_semilattice", 4);
  CHECK_FALSE(find_isomorphism(a, chain).has_value());
  CHECK_FALSE(find_isomorphism(chain, a).has_value());
}

TEST_CASE("find_isomorphism respects the size cap") {
  auto i3 = standard_example("symmetric_inverse", 3);
  int saved = max_size();
  set_max_size(10);
  CHECK(code_of([&] { (void)find_isomorphism(i3, i3); }) ==
        Errc::size_cap_exceeded);
  set_max_size(saved);
}

TEST_CASE("standard_example sizes") {
  CHECK(standard_example("symmetric_inverse", 1).n == 2);
  CHECK(standard_example("symmetric_inverse", 2).n == 7);
  CHECK(standard_example("symmetric_inverse", 3).n == symmetric_inverse_order(3));
  auto pp = standard_example("particular_point_homeos", 3);
  CHECK(pp.n == 7);
  CHECK(pp.idem.size() == 5);
  int non_idem = 0;
  for (Id a = 0; a < pp.n; ++a)
    if (!pp.is_idempotent(a)) ++non_idem;
  CHECK(non_idem == 2);
  CHECK(code_of([] { standard_example("symmetric_inverse", 5); }) ==
        Errc::size_cap_exceeded);
}

TEST_CASE("inverse identities hold on every corpus instance") {
  for (const auto& s : small_corpus()) {
    for (Id a = 0; a < s.n; ++a) {
      CHECK(s.at(s.at(a, s.inv[a]), a) == a);
      CHECK(s.inv[s.inv[a]] == a);
      for (Id b = 0; b < s.n; ++b)
        CHECK(s.inv[s.at(a, b)] == s.at(s.inv[b], s.inv[a]));
    }
  }
}

TEST_CASE("mu is idempotent-separating with kernel the centralizer") {
  for (const auto& s : small_corpus()) {
    auto m = mu(s);
    CHECK(is_idempotent_separating(s, m));
    CHECK(kernel_of_congruence(s, m) == centralizer_of_idempotents(s));
    CHECK(is_fundamental(s) ==
          (centralizer_of_idempotents(s) == s.idem));
  }
}

TEST_CASE("idempotent-separating quotients preserve the idempotent count") {
  for (const auto& s : small_corpus()) {
    if (s.n > max_congruence_size()) continue;
    for (const auto& rho : enumerate_congruences(s)) {
      if (!is_idempotent_separating(s, rho)) continue;
      auto q = quotient(s, rho);
      CHECK(q.semigroup.idem.size() == s.idem.size());
    }
  }
}

TEST_CASE("every idempotent-separating congruence refines mu") {
  for (const auto& s : small_corpus()) {
    if (s.n > 6) continue;
    auto m = mu(s);
    for (const auto& rho : enumerate_congruences(s)) {
      if (is_idempotent_separating(s, rho)) {
        CHECK(congruence_refines(rho, m));
      }
    }
  }
}

TEST_CASE("congruences of the 2-chain") {
  auto e = standard_example("chain_semilattice", 2);
  auto all = enumerate_congruences(e);
  CHECK(all.size() == 2);  // equality and universal
}
