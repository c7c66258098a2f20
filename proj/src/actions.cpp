#include "gmunn/actions.hpp"

#include <algorithm>
#include <numeric>

#include "gmunn/kernels.hpp"

namespace gmunn {

SupportedAction validate_supported_action(int m, InverseSemigroup s,
                                          std::vector<Id> support,
                                          std::vector<Id> act) {
  const int n = s.n;
  if (m < 0 || static_cast<int>(support.size()) != m ||
      static_cast<int>(act.size()) != m * n)
    fail(Errc::parse_error, "action table size mismatch");
  for (Id v : support) {
    if (v < 0 || v >= n) fail(Errc::parse_error, "support out of range", {v});
    if (!s.is_idempotent(v))
      fail(Errc::parse_error, "support value is not idempotent", {v});
  }
  for (Id v : act)
    if (v < 0 || v >= m) fail(Errc::parse_error, "action out of range", {v});

  SupportedAction a;
  a.m = m;
  a.s = std::move(s);
  a.support = std::move(support);
  a.act = std::move(act);
  for (Id x = 0; x < m; ++x) {
    if (a.act_at(x, a.support[x]) != x)
      fail(Errc::sa2_violation, "x . p(x) != x", {x});
    for (Id u = 0; u < n; ++u) {
      Id conj = a.s.at(a.s.at(a.s.inv[u], a.support[x]), u);
      if (a.support[a.act_at(x, u)] != conj)
        fail(Errc::sa3_violation, "p(x . s) != s^{-1} p(x) s", {x, u});
      for (Id v = 0; v < n; ++v)
        if (a.act_at(a.act_at(x, u), v) != a.act_at(x, a.s.at(u, v)))
          fail(Errc::sa1_violation, "(x . s) . t != x . st", {x, u, v});
    }
  }
  std::vector<uint8_t> hit(n, 0);
  for (Id x = 0; x < m; ++x) hit[a.support[x]] = 1;
  a.global = std::all_of(a.s.idem.begin(), a.s.idem.end(),
                         [&](Id e) { return hit[e] != 0; });
  return a;
}

SupportedAction conjugation_action(const InverseSemigroup& s) {
  const int k = static_cast<int>(s.idem.size());
  std::vector<Id> to_local(s.n, kNone);
  for (int i = 0; i < k; ++i) to_local[s.idem[i]] = i;
  std::vector<Id> support(k);
  std::vector<Id> act(static_cast<size_t>(k) * s.n);
  for (int i = 0; i < k; ++i) {
    support[i] = s.idem[i];
    for (Id u = 0; u < s.n; ++u)
      act[static_cast<size_t>(i) * s.n + u] =
          to_local[s.at(s.at(s.inv[u], s.idem[i]), u)];
  }
  return validate_supported_action(k, s, std::move(support), std::move(act));
}

SupportedAction right_regular_action(const InverseSemigroup& s) {
  std::vector<Id> support(s.n);
  for (Id x = 0; x < s.n; ++x) support[x] = s.d(x);
  return validate_supported_action(s.n, s, std::move(support), s.table);
}

SupportedAction quotient_action(const InverseSemigroup& s,
                                const Congruence& rho) {
  if (!is_idempotent_separating(s, rho))
    fail(Errc::not_idempotent_separating,
         "quotient actions need an idempotent-separating congruence");
  std::vector<Id> reps;
  for (Id a = 0; a < s.n; ++a)
    if (rho.classof[a] == a) reps.push_back(a);
  const int m = static_cast<int>(reps.size());
  std::vector<Id> to_class(s.n, kNone);
  for (int i = 0; i < m; ++i) to_class[reps[i]] = i;
  std::vector<Id> support(m);
  std::vector<Id> act(static_cast<size_t>(m) * s.n);
  for (int i = 0; i < m; ++i) {
    support[i] = s.d(reps[i]);  // well-defined: rho separates idempotents
    for (Id u = 0; u < s.n; ++u)
      act[static_cast<size_t>(i) * s.n + u] =
          to_class[rho.classof[s.at(reps[i], u)]];
  }
  return validate_supported_action(m, s, std::move(support), std::move(act));
}

FreeAction free_action(const InverseSemigroup& s, const Presheaf& p) {
  Semilattice es = idempotent_semilattice(s);
  if (!(p.lattice == es))
    fail(Errc::lattice_mismatch, "presheaf lattice must be E(S), ids aligned");
  std::vector<Id> to_local(s.n, kNone);
  for (size_t i = 0; i < s.idem.size(); ++i)
    to_local[s.idem[i]] = static_cast<Id>(i);

  std::vector<std::pair<Id, Id>> carrier;
  for (Id u = 0; u < s.n; ++u)
    for (Id x = 0; x < p.m; ++x)
      if (to_local[s.r(u)] == p.support[x]) carrier.emplace_back(u, x);
  std::map<std::pair<Id, Id>, Id> index;
  for (size_t i = 0; i < carrier.size(); ++i)
    index[carrier[i]] = static_cast<Id>(i);

  const int m = static_cast<int>(carrier.size());
  std::vector<Id> support(m);
  std::vector<Id> act(static_cast<size_t>(m) * s.n);
  for (int i = 0; i < m; ++i) {
    auto [t, x] = carrier[i];
    support[i] = s.d(t);
    for (Id u = 0; u < s.n; ++u) {
      Id tu = s.at(t, u);
      Id moved = p.act_at(x, to_local[s.r(tu)]);
      act[static_cast<size_t>(i) * s.n + u] = index.at({tu, moved});
    }
  }
  FreeAction out{
      validate_supported_action(m, s, std::move(support), std::move(act)),
      std::move(carrier)};
  return out;
}

namespace {

void validate_group_action_family(const GroupActionFamily& family) {
  const int k = family.lattice.size();
  if (static_cast<int>(family.levels.size()) != k)
    fail(Errc::not_functorial, "one group action per lattice element");
  for (Id e = 0; e < k; ++e) {
    const auto& level = family.levels[e];
    if (level.group.idem.size() != 1)
      fail(Errc::not_functorial, "level semigroup is not a group", {e});
    if (static_cast<int>(level.act.size()) != level.carrier * level.group.n)
      fail(Errc::not_functorial, "level action table size mismatch", {e});
    Id one = level.group.idem[0];
    for (Id x = 0; x < level.carrier; ++x) {
      if (level.act[static_cast<size_t>(x) * level.group.n + one] != x)
        fail(Errc::not_functorial, "identity must act trivially", {e, x});
      for (Id g = 0; g < level.group.n; ++g)
        for (Id h = 0; h < level.group.n; ++h) {
          Id xg = level.act[static_cast<size_t>(x) * level.group.n + g];
          Id lhs = level.act[static_cast<size_t>(xg) * level.group.n + h];
          Id rhs = level.act[static_cast<size_t>(x) * level.group.n +
                             level.group.at(g, h)];
          if (lhs != rhs)
            fail(Errc::not_functorial, "level action not associative",
                 {e, x, g, h});
        }
    }
  }

  auto get = [&](const std::map<std::pair<Id, Id>, std::vector<Id>>& maps,
                 Id e, Id f, int size,
                 const char* what) -> const std::vector<Id>& {
    auto it = maps.find({e, f});
    if (it == maps.end() || static_cast<int>(it->second.size()) != size)
      fail(Errc::not_functorial, std::string("missing or ill-sized ") + what,
           {e, f});
    return it->second;
  };

  for (Id e = 0; e < k; ++e)
    for (Id f = 0; f < k; ++f) {
      if (e == f || !family.lattice.leq(f, e)) continue;
      const auto& phi = get(family.phi, e, f, family.levels[e].carrier, "phi");
      const auto& psi = get(family.psi, e, f, family.levels[e].group.n, "psi");
      for (Id v : phi)
        if (v < 0 || v >= family.levels[f].carrier)
          fail(Errc::not_functorial, "phi out of range", {e, f});
      const auto& ge = family.levels[e].group;
      const auto& gf = family.levels[f].group;
      for (Id a = 0; a < ge.n; ++a) {
        if (psi[a] < 0 || psi[a] >= gf.n)
          fail(Errc::not_functorial, "psi out of range", {e, f});
        for (Id b = 0; b < ge.n; ++b)
          if (psi[ge.at(a, b)] != gf.at(psi[a], psi[b]))
            fail(Errc::not_functorial, "psi is not a homomorphism", {e, f});
      }
      for (Id x = 0; x < family.levels[e].carrier; ++x)
        for (Id g = 0; g < ge.n; ++g) {
          Id xg = family.levels[e].act[static_cast<size_t>(x) * ge.n + g];
          Id lhs = phi[xg];
          Id rhs = family.levels[f]
                       .act[static_cast<size_t>(phi[x]) * gf.n + psi[g]];
          if (lhs != rhs)
            fail(Errc::not_functorial, "(phi,psi) not equivariant",
                 {e, f, x, g});
        }
    }

  for (Id e = 0; e < k; ++e)
    for (Id f = 0; f < k; ++f) {
      if (!family.lattice.leq(f, e) || e == f) continue;
      for (Id g = 0; g < k; ++g) {
        if (!family.lattice.leq(g, f) || g == f || g == e) continue;
        const auto& phi_ef = family.phi.at({e, f});
        const auto& phi_fg = family.phi.at({f, g});
        const auto& phi_eg = family.phi.at({e, g});
        for (Id x = 0; x < family.levels[e].carrier; ++x)
          if (phi_fg[phi_ef[x]] != phi_eg[x])
            fail(Errc::not_functorial, "phi^f_g phi^e_f != phi^e_g",
                 {e, f, g});
        const auto& psi_ef = family.psi.at({e, f});
        const auto& psi_fg = family.psi.at({f, g});
        const auto& psi_eg = family.psi.at({e, g});
        for (Id a = 0; a < family.levels[e].group.n; ++a)
          if (psi_fg[psi_ef[a]] != psi_eg[a])
            fail(Errc::not_functorial, "psi^f_g psi^e_f != psi^e_g",
                 {e, f, g});
      }
    }
}

}  // namespace

StrongSemilatticeAction strong_semilattice_action(
    const GroupActionFamily& family) {
  validate_group_action_family(family);
  const int k = family.lattice.size();

  StrongSemilatticeAction out;
  std::vector<Id> group_base(k), carrier_base(k);
  int n = 0, m = 0;
  for (Id e = 0; e < k; ++e) {
    group_base[e] = n;
    carrier_base[e] = m;
    n += family.levels[e].group.n;
    m += family.levels[e].carrier;
    for (Id i = 0; i < family.levels[e].group.n; ++i)
      out.semigroup_labels.emplace_back(e, i);
    for (Id x = 0; x < family.levels[e].carrier; ++x)
      out.carrier_labels.emplace_back(e, x);
  }

  auto psi_to = [&](Id e, Id f, Id a) -> Id {  // f <= e
    return e == f ? a : family.psi.at({e, f})[a];
  };
  auto phi_to = [&](Id e, Id f, Id x) -> Id {
    return e == f ? x : family.phi.at({e, f})[x];
  };

  std::vector<Id> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    auto [e, a] = out.semigroup_labels[i];
    for (int j = 0; j < n; ++j) {
      auto [f, b] = out.semigroup_labels[j];
      Id ef = family.lattice.meet(e, f);
      Id prod = family.levels[ef].group.at(psi_to(e, ef, a), psi_to(f, ef, b));
      table[static_cast<size_t>(i) * n + j] = group_base[ef] + prod;
    }
  }
  InverseSemigroup s = validate_inverse_semigroup(n, std::move(table));

  std::vector<Id> support(m);
  std::vector<Id> act(static_cast<size_t>(m) * n);
  for (int xi = 0; xi < m; ++xi) {
    auto [e, x] = out.carrier_labels[xi];
    support[xi] = group_base[e] + family.levels[e].group.idem[0];
    for (int j = 0; j < n; ++j) {
      auto [f, b] = out.semigroup_labels[j];
      Id ef = family.lattice.meet(e, f);
      Id moved = family.levels[ef].act[static_cast<size_t>(phi_to(e, ef, x)) *
                                           family.levels[ef].group.n +
                                       psi_to(f, ef, b)];
      act[static_cast<size_t>(xi) * n + j] = carrier_base[ef] + moved;
    }
  }
  out.action = validate_supported_action(m, std::move(s), std::move(support),
                                         std::move(act));
  return out;
}

GroupActionFamily decompose_clifford_action(const SupportedAction& a) {
  const InverseSemigroup& s = a.s;
  if (centralizer_of_idempotents(s).size() != static_cast<size_t>(s.n))
    fail(Errc::parse_error, "action semigroup is not Clifford");
  GroupActionFamily family;
  family.lattice = idempotent_semilattice(s);
  const int k = family.lattice.size();

  std::vector<std::vector<Id>> group_elems(k), carrier_elems(k);
  std::vector<Id> group_local(s.n, kNone), carrier_local(a.m, kNone);
  std::vector<Id> idem_index(s.n, kNone);
  for (int i = 0; i < k; ++i) idem_index[s.idem[i]] = i;
  for (Id u = 0; u < s.n; ++u) {
    Id e = idem_index[s.d(u)];
    group_local[u] = static_cast<Id>(group_elems[e].size());
    group_elems[e].push_back(u);
  }
  for (Id x = 0; x < a.m; ++x) {
    Id e = idem_index[a.support[x]];
    carrier_local[x] = static_cast<Id>(carrier_elems[e].size());
    carrier_elems[e].push_back(x);
  }

  family.levels.resize(k);
  for (Id e = 0; e < k; ++e) {
    auto& level = family.levels[e];
    level.group = subsemigroup(s, group_elems[e]);
    level.carrier = static_cast<int>(carrier_elems[e].size());
    level.act.resize(static_cast<size_t>(level.carrier) * level.group.n);
    for (Id x = 0; x < level.carrier; ++x)
      for (Id g = 0; g < level.group.n; ++g)
        level.act[static_cast<size_t>(x) * level.group.n + g] =
            carrier_local[a.act_at(carrier_elems[e][x], group_elems[e][g])];
  }
  for (Id e = 0; e < k; ++e)
    for (Id f = 0; f < k; ++f) {
      if (e == f || !family.lattice.leq(f, e)) continue;
      std::vector<Id> phi(carrier_elems[e].size());
      for (size_t x = 0; x < carrier_elems[e].size(); ++x)
        phi[x] = carrier_local[a.act_at(carrier_elems[e][x], s.idem[f])];
      family.phi[{e, f}] = std::move(phi);
      std::vector<Id> psi(group_elems[e].size());
      for (size_t g = 0; g < group_elems[e].size(); ++g)
        psi[g] = group_local[s.at(group_elems[e][g], s.idem[f])];
      family.psi[{e, f}] = std::move(psi);
    }
  return family;
}

ExtensionAction extension_action(const InverseSemigroup& t,
                                 const InverseSemigroup& s,
                                 const std::vector<Id>& j,
                                 std::optional<std::vector<Id>> k) {
  if (static_cast<int>(j.size()) != t.n)
    fail(Errc::parse_error, "j must be defined on all of T");
  auto rep = check_homomorphism(t, s, j);
  if (!rep.is_hom) fail(Errc::not_homomorphism, "j is not a homomorphism");
  if (!rep.is_idempotent_separating)
    fail(Errc::not_idempotent_separating, "j must separate idempotents");
  std::vector<uint8_t> hit(s.n, 0);
  for (Id a = 0; a < t.n; ++a) hit[j[a]] = 1;
  for (Id b = 0; b < s.n; ++b)
    if (!hit[b]) fail(Errc::not_surjective_hom, "j must be surjective", {b});

  std::vector<Id> ker;
  for (Id a = 0; a < t.n; ++a)
    if (s.is_idempotent(j[a])) ker.push_back(a);
  InverseSemigroup ker_alg = subsemigroup(t, ker);
  for (Id a = 0; a < ker_alg.n; ++a)
    for (Id b = 0; b < ker_alg.n; ++b)
      if (ker_alg.at(a, b) != ker_alg.at(b, a))
        fail(Errc::kernel_not_abelian, "Ker j must be abelian",
             {ker[a], ker[b]});

  std::vector<Id> section;
  if (k) {
    section = std::move(*k);
    if (static_cast<int>(section.size()) != s.n)
      fail(Errc::not_section, "section must be defined on all of S");
    for (Id b = 0; b < s.n; ++b) {
      if (section[b] < 0 || section[b] >= t.n || j[section[b]] != b)
        fail(Errc::not_section, "j(k(s)) != s", {b});
    }
  } else {
    section.assign(s.n, kNone);
    for (Id a = 0; a < t.n; ++a)
      if (section[j[a]] == kNone) section[j[a]] = a;
  }

  std::vector<Id> ker_index(t.n, kNone);
  for (size_t i = 0; i < ker.size(); ++i)
    ker_index[ker[i]] = static_cast<Id>(i);
  const int m = static_cast<int>(ker.size());
  std::vector<Id> support(m);
  std::vector<Id> act(static_cast<size_t>(m) * s.n);
  for (int i = 0; i < m; ++i) {
    support[i] = j[ker[i]];
    for (Id b = 0; b < s.n; ++b) {
      Id conj = t.at(t.at(t.inv[section[b]], ker[i]), section[b]);
      act[static_cast<size_t>(i) * s.n + b] = ker_index[conj];
    }
  }
  ExtensionAction out{
      validate_supported_action(m, s, std::move(support), std::move(act)),
      std::move(ker), std::move(ker_alg)};
  return out;
}

Congruence characteristic_congruence(const SupportedAction& a) {
  return Congruence{
      a.s.n, kernels::column_partition(a.act, a.m, a.s.n, default_exec())};
}

SModuleReport check_s_module(const SupportedAction& a,
                             const InverseSemigroup& carrier_alg) {
  SModuleReport report;
  report.failed_axiom = -1;
  if (carrier_alg.n != a.m) {
    report.witness = {carrier_alg.n, a.m};
    return report;
  }
  // abelian Clifford carrier
  for (Id x = 0; x < a.m; ++x)
    for (Id y = 0; y < a.m; ++y)
      if (carrier_alg.at(x, y) != carrier_alg.at(y, x)) {
        report.witness = {x, y};
        return report;
      }
  // p must be a surjective idempotent-separating homomorphism onto E(S)
  for (Id x = 0; x < a.m; ++x)
    for (Id y = 0; y < a.m; ++y)
      if (a.support[carrier_alg.at(x, y)] !=
          a.s.at(a.support[x], a.support[y])) {
        report.witness = {x, y};
        return report;
      }
  std::vector<Id> zero_of(a.s.n, kNone);  // S idempotent -> 0_e carrier id
  for (Id x : carrier_alg.idem) {
    if (zero_of[a.support[x]] != kNone) {
      report.witness = {zero_of[a.support[x]], x};
      return report;
    }
    zero_of[a.support[x]] = x;
  }
  for (Id e : a.s.idem)
    if (zero_of[e] == kNone) {
      report.witness = {e};
      return report;
    }

  // (1) the action is by endomorphisms
  for (Id x = 0; x < a.m; ++x)
    for (Id y = 0; y < a.m; ++y)
      for (Id u = 0; u < a.s.n; ++u)
        if (a.act_at(carrier_alg.at(x, y), u) !=
            carrier_alg.at(a.act_at(x, u), a.act_at(y, u))) {
          report.failed_axiom = 1;
          report.witness = {x, y, u};
          return report;
        }
  // (2) associativity of the action
  for (Id x = 0; x < a.m; ++x)
    for (Id u = 0; u < a.s.n; ++u)
      for (Id v = 0; v < a.s.n; ++v)
        if (a.act_at(a.act_at(x, u), v) != a.act_at(x, a.s.at(u, v))) {
          report.failed_axiom = 2;
          report.witness = {x, u, v};
          return report;
        }
  // (3) a . e = a + 0_e
  for (Id x = 0; x < a.m; ++x)
    for (Id e : a.s.idem)
      if (a.act_at(x, e) != carrier_alg.at(x, zero_of[e])) {
        report.failed_axiom = 3;
        report.witness = {x, e};
        return report;
      }
  // (4) 0_e . s = 0_{s^{-1} e s}
  for (Id e : a.s.idem)
    for (Id u = 0; u < a.s.n; ++u) {
      Id conj = a.s.at(a.s.at(a.s.inv[u], e), u);
      if (a.act_at(zero_of[e], u) != zero_of[conj]) {
        report.failed_axiom = 4;
        report.witness = {e, u};
        return report;
      }
    }
  report.ok = true;
  report.failed_axiom = 0;
  return report;
}

ActionHomReport check_action_hom(const SupportedAction& a,
                                 const SupportedAction& b,
                                 const std::vector<Id>& alpha,
                                 const std::vector<Id>& theta) {
  ActionHomReport report;
  if (static_cast<int>(alpha.size()) != a.m ||
      static_cast<int>(theta.size()) != a.s.n)
    return report;
  for (Id v : alpha)
    if (v < 0 || v >= b.m) return report;
  for (Id v : theta)
    if (v < 0 || v >= b.s.n) return report;

  report.theta_is_hom = check_homomorphism(a.s, b.s, theta).is_hom;
  report.equivariant = true;
  for (Id x = 0; x < a.m && report.equivariant; ++x)
    for (Id u = 0; u < a.s.n; ++u)
      if (alpha[a.act_at(x, u)] != b.act_at(alpha[x], theta[u])) {
        report.equivariant = false;
        break;
      }
  report.square_commutes = true;
  for (Id x = 0; x < a.m; ++x)
    if (b.support[alpha[x]] != theta[a.support[x]]) {
      report.square_commutes = false;
      break;
    }
  report.valid =
      report.theta_is_hom && report.equivariant && report.square_commutes;

  auto bijective = [](const std::vector<Id>& map, int target) {
    if (static_cast<int>(map.size()) != target) return false;
    std::vector<uint8_t> seen(target, 0);
    for (Id v : map) {
      if (seen[v]) return false;
      seen[v] = 1;
    }
    return true;
  };
  report.iso = report.valid && bijective(alpha, b.m) && bijective(theta, b.s.n);
  return report;
}

Presheaf restrict_to_idempotents(const SupportedAction& a) {
  Semilattice es = idempotent_semilattice(a.s);
  const int k = es.size();
  std::vector<Id> idem_index(a.s.n, kNone);
  for (int i = 0; i < k; ++i) idem_index[a.s.idem[i]] = i;
  std::vector<Id> support(a.m);
  std::vector<Id> act(static_cast<size_t>(a.m) * k);
  for (Id x = 0; x < a.m; ++x) {
    support[x] = idem_index[a.support[x]];
    for (int i = 0; i < k; ++i)
      act[static_cast<size_t>(x) * k + i] = a.act_at(x, a.s.idem[i]);
  }
  return validate_presheaf(a.m, std::move(es), std::move(support),
                           std::move(act));
}

bool is_subaction(const SupportedAction& a, const std::vector<Id>& y) {
  std::vector<uint8_t> in(a.m, 0);
  for (Id v : y) in[v] = 1;
  for (Id v : y)
    for (Id u = 0; u < a.s.n; ++u)
      if (!in[a.act_at(v, u)]) return false;
  return true;
}

}  // namespace gmunn
