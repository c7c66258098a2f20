#include "gmunn/presheaf.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gmunn {

std::vector<Id> Semilattice::down_set(Id e) const {
  std::vector<Id> out;
  for (Id f = 0; f < alg.n; ++f)
    if (leq(f, e)) out.push_back(f);
  return out;
}

Semilattice validate_semilattice(const InverseSemigroup& s) {
  for (Id a = 0; a < s.n; ++a)
    if (!s.is_idempotent(a))
      fail(Errc::not_a_semilattice, "element is not idempotent", {a});
  Semilattice e;
  e.alg = s;
  e.leq_cache.assign(static_cast<size_t>(s.n) * s.n, 0);
  for (Id a = 0; a < s.n; ++a)
    for (Id b = 0; b < s.n; ++b)
      e.leq_cache[static_cast<size_t>(a) * s.n + b] = (s.at(a, b) == a);
  return e;
}

Semilattice semilattice_from_table(int n, std::vector<Id> table) {
  return validate_semilattice(validate_inverse_semigroup(n, std::move(table)));
}

Semilattice idempotent_semilattice(const InverseSemigroup& s) {
  const int k = static_cast<int>(s.idem.size());
  std::vector<Id> to_local(s.n, kNone);
  for (int i = 0; i < k; ++i) to_local[s.idem[i]] = i;
  std::vector<Id> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[static_cast<size_t>(i) * k + j] =
          to_local[s.at(s.idem[i], s.idem[j])];
  return semilattice_from_table(k, std::move(table));
}

std::vector<Id> Presheaf::fiber(Id e) const {
  std::vector<Id> out;
  for (Id x = 0; x < m; ++x)
    if (support[x] == e) out.push_back(x);
  return out;
}

bool Presheaf::global_support() const {
  std::vector<uint8_t> hit(lattice.size(), 0);
  for (Id x = 0; x < m; ++x) hit[support[x]] = 1;
  return std::all_of(hit.begin(), hit.end(), [](uint8_t h) { return h != 0; });
}

Presheaf validate_presheaf(int m, Semilattice lattice, std::vector<Id> support,
                           std::vector<Id> act) {
  const int k = lattice.size();
  if (m < 0 || static_cast<int>(support.size()) != m ||
      static_cast<int>(act.size()) != m * k)
    fail(Errc::parse_error, "presheaf table size mismatch");
  for (Id v : support)
    if (v < 0 || v >= k) fail(Errc::parse_error, "support out of range", {v});
  for (Id v : act)
    if (v < 0 || v >= m) fail(Errc::parse_error, "action out of range", {v});

  Presheaf p;
  p.m = m;
  p.lattice = std::move(lattice);
  p.support = std::move(support);
  p.act = std::move(act);
  for (Id x = 0; x < m; ++x) {
    if (p.act_at(x, p.support[x]) != x)
      fail(Errc::sa2_violation, "x . p(x) != x", {x});
    for (Id e = 0; e < k; ++e) {
      if (p.support[p.act_at(x, e)] != p.lattice.meet(p.support[x], e))
        fail(Errc::sa3_violation, "p(x . e) != p(x)e", {x, e});
      for (Id f = 0; f < k; ++f)
        if (p.act_at(p.act_at(x, e), f) != p.act_at(x, p.lattice.meet(e, f)))
          fail(Errc::sa1_violation, "(x . e) . f != x . ef", {x, e, f});
    }
  }
  return p;
}

Presheaf presheaf_from_semilattice(const Semilattice& e) {
  std::vector<Id> support(e.size());
  for (Id i = 0; i < e.size(); ++i) support[i] = i;
  return validate_presheaf(e.size(), e, std::move(support), e.alg.table);
}

Presheaf from_family(const PresheafFamily& family) {
  const int k = family.lattice.size();
  if (static_cast<int>(family.members.size()) != k)
    fail(Errc::parse_error, "family needs one member list per lattice element");
  int m = 0;
  for (const auto& level : family.members) m += static_cast<int>(level.size());
  std::vector<Id> support(m, kNone);
  std::vector<Id> local(m, kNone);
  for (Id e = 0; e < k; ++e)
    for (size_t i = 0; i < family.members[e].size(); ++i) {
      Id x = family.members[e][i];
      if (x < 0 || x >= m || support[x] != kNone)
        fail(Errc::parse_error, "family labels must partition 0..m-1", {x});
      support[x] = e;
      local[x] = static_cast<Id>(i);
    }

  auto restriction = [&](Id e, Id f, Id local_idx) -> Id {
    if (e == f) return local_idx;
    auto it = family.restrictions.find({e, f});
    if (it == family.restrictions.end() ||
        it->second.size() != family.members[e].size())
      fail(Errc::restriction_not_functorial, "missing restriction map", {e, f});
    Id out = it->second[local_idx];
    if (out < 0 || out >= static_cast<Id>(family.members[f].size()))
      fail(Errc::restriction_not_functorial, "restriction out of range", {e, f});
    return out;
  };

  // functoriality: phi^f_g . phi^e_f = phi^e_g for g <= f <= e
  for (Id e = 0; e < k; ++e)
    for (Id f = 0; f < k; ++f) {
      if (!family.lattice.leq(f, e)) continue;
      for (Id g = 0; g < k; ++g) {
        if (!family.lattice.leq(g, f)) continue;
        for (size_t i = 0; i < family.members[e].size(); ++i) {
          Id via = restriction(f, g, restriction(e, f, static_cast<Id>(i)));
          Id direct = restriction(e, g, static_cast<Id>(i));
          if (via != direct)
            fail(Errc::restriction_not_functorial,
                 "phi^f_g phi^e_f != phi^e_g", {e, f, g});
        }
      }
    }

  std::vector<Id> act(static_cast<size_t>(m) * k);
  for (Id x = 0; x < m; ++x)
    for (Id f = 0; f < k; ++f) {
      Id e = support[x];
      Id ef = family.lattice.meet(e, f);
      act[static_cast<size_t>(x) * k + f] =
          family.members[ef][restriction(e, ef, local[x])];
    }
  return validate_presheaf(m, family.lattice, std::move(support),
                           std::move(act));
}

PresheafFamily to_family(const Presheaf& p) {
  PresheafFamily family;
  family.lattice = p.lattice;
  const int k = p.lattice.size();
  family.members.resize(k);
  std::vector<Id> local(p.m, kNone);
  for (Id e = 0; e < k; ++e) {
    family.members[e] = p.fiber(e);
    for (size_t i = 0; i < family.members[e].size(); ++i)
      local[family.members[e][i]] = static_cast<Id>(i);
  }
  for (Id e = 0; e < k; ++e)
    for (Id f = 0; f < k; ++f) {
      if (e == f || !p.lattice.leq(f, e)) continue;
      std::vector<Id> map(family.members[e].size());
      for (size_t i = 0; i < family.members[e].size(); ++i)
        map[i] = local[p.act_at(family.members[e][i], f)];
      family.restrictions[{e, f}] = std::move(map);
    }
  return family;
}

bool steinberg_leq(const Presheaf& p, Id x, Id y) {
  return p.act_at(y, p.support[x]) == x;
}

bool is_order_ideal(const Presheaf& p, const std::vector<Id>& y) {
  std::vector<uint8_t> in(p.m, 0);
  for (Id v : y) in[v] = 1;
  for (Id v : y)
    for (Id x = 0; x < p.m; ++x)
      if (steinberg_leq(p, x, v) && !in[x]) return false;
  return true;
}

namespace {

std::vector<Id> meet_closure(const Semilattice& e, std::vector<Id> f) {
  std::set<Id> out(f.begin(), f.end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Id> snapshot(out.begin(), out.end());
    for (Id a : snapshot)
      for (Id b : snapshot)
        if (out.insert(e.meet(a, b)).second) changed = true;
  }
  return {out.begin(), out.end()};
}

}  // namespace

Subpresheaf make_subpresheaf(const Presheaf& p, std::vector<Id> ideal,
                             std::optional<std::vector<Id>> sublattice) {
  std::sort(ideal.begin(), ideal.end());
  if (!is_order_ideal(p, ideal))
    fail(Errc::parse_error, "subset is not an order-ideal");
  std::vector<Id> supports;
  for (Id x : ideal) supports.push_back(p.support[x]);
  std::vector<Id> f =
      sublattice ? std::move(*sublattice) : meet_closure(p.lattice, supports);
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  std::vector<uint8_t> in(p.lattice.size(), 0);
  for (Id e : f) in[e] = 1;
  for (Id e : f)
    for (Id g : f)
      if (!in[p.lattice.meet(e, g)])
        fail(Errc::parse_error, "sublattice not meet-closed", {e, g});
  for (Id x : ideal)
    if (!in[p.support[x]])
      fail(Errc::parse_error, "sublattice must contain p(ideal)", {x});
  return Subpresheaf{std::move(ideal), std::move(f)};
}

Subpresheaf principal(const Presheaf& p, Id e) {
  Subpresheaf sub;
  for (Id x = 0; x < p.m; ++x)
    if (p.lattice.leq(p.support[x], e)) sub.ideal.push_back(x);
  sub.sublattice = p.lattice.down_set(e);
  return sub;
}

std::vector<std::vector<Id>> enumerate_order_isomorphisms(
    int na, const std::function<bool(Id, Id)>& leq_a, int nb,
    const std::function<bool(Id, Id)>& leq_b) {
  std::vector<std::vector<Id>> out;
  if (na != nb) return out;
  std::vector<Id> map(na, kNone);
  std::vector<uint8_t> used(nb, 0);
  auto rec = [&](auto&& self, Id i) -> void {
    if (i == na) {
      out.push_back(map);
      return;
    }
    for (Id v = 0; v < nb; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (Id j = 0; j < i && ok; ++j) {
        if (leq_a(i, j) != leq_b(v, map[j])) ok = false;
        if (leq_a(j, i) != leq_b(map[j], v)) ok = false;
      }
      if (!ok) continue;
      map[i] = v;
      used[v] = 1;
      self(self, i + 1);
      map[i] = kNone;
      used[v] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<PairIso> subpresheaf_isomorphisms(const Presheaf& p,
                                              const Subpresheaf& a,
                                              const Subpresheaf& b) {
  check_cap(static_cast<int>(std::max(a.ideal.size(), b.ideal.size())),
            max_size(), "subpresheaf isomorphism enumeration");
  std::vector<PairIso> out;
  if (a.ideal.size() != b.ideal.size() ||
      a.sublattice.size() != b.sublattice.size())
    return out;

  const auto& ai = a.ideal;
  const auto& bi = b.ideal;
  const auto& af = a.sublattice;
  const auto& bf = b.sublattice;
  auto leq_af = [&](Id i, Id j) { return p.lattice.leq(af[i], af[j]); };
  auto leq_bf = [&](Id i, Id j) { return p.lattice.leq(bf[i], bf[j]); };
  auto thetas = enumerate_order_isomorphisms(
      static_cast<int>(af.size()), leq_af, static_cast<int>(bf.size()), leq_bf);

  const int n = static_cast<int>(ai.size());
  for (const auto& theta_local : thetas) {
    std::vector<Id> theta(p.lattice.size(), kNone);
    for (size_t i = 0; i < af.size(); ++i) theta[af[i]] = bf[theta_local[i]];

    std::vector<Id> alpha_local(n, kNone);
    std::vector<uint8_t> used(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == n) {
        PairIso iso;
        iso.alpha.assign(p.m, kNone);
        for (int x = 0; x < n; ++x) iso.alpha[ai[x]] = bi[alpha_local[x]];
        iso.theta = theta;
        out.push_back(std::move(iso));
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        if (theta[p.support[ai[i]]] != p.support[bi[v]]) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j) {
          if (steinberg_leq(p, ai[i], ai[j]) !=
              steinberg_leq(p, bi[v], bi[alpha_local[j]]))
            ok = false;
          if (steinberg_leq(p, ai[j], ai[i]) !=
              steinberg_leq(p, bi[alpha_local[j]], bi[v]))
            ok = false;
        }
        if (!ok) continue;
        alpha_local[i] = v;
        used[v] = 1;
        self(self, i + 1);
        alpha_local[i] = kNone;
        used[v] = 0;
      }
    };
    rec(rec, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gmunn
