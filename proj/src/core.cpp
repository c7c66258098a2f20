#include "gmunn/core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "gmunn/kernels.hpp"

namespace gmunn {

int Congruence::class_count() const {
  int count = 0;
  for (Id a = 0; a < n; ++a)
    if (classof[a] == a) ++count;
  return count;
}

std::vector<std::vector<Id>> Congruence::classes() const {
  std::map<Id, std::vector<Id>> by_rep;
  for (Id a = 0; a < n; ++a) by_rep[classof[a]].push_back(a);
  std::vector<std::vector<Id>> out;
  out.reserve(by_rep.size());
  for (auto& [rep, members] : by_rep) out.push_back(std::move(members));
  return out;
}

Congruence equality_congruence(int n) {
  Congruence c{n, std::vector<Id>(n)};
  std::iota(c.classof.begin(), c.classof.end(), 0);
  return c;
}

Congruence universal_congruence(int n) {
  return Congruence{n, std::vector<Id>(n, 0)};
}

bool congruence_refines(const Congruence& a, const Congruence& b) {
  if (a.n != b.n) return false;
  for (Id x = 0; x < a.n; ++x)
    if (b.classof[x] != b.classof[a.classof[x]]) return false;
  return true;
}

namespace {

// Flattens an arbitrary representative array to least representatives.
std::vector<Id> normalize_partition(std::vector<Id> rep) {
  const int n = static_cast<int>(rep.size());
  std::vector<Id> least(n, kNone);
  for (Id a = 0; a < n; ++a) {
    Id r = rep[a];
    if (least[r] == kNone || a < least[r]) least[r] = a;
  }
  for (Id a = 0; a < n; ++a) rep[a] = least[rep[a]];
  return rep;
}

struct UnionFind {
  std::vector<Id> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  Id find(Id a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool merge(Id a, Id b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

}  // namespace

InverseSemigroup validate_inverse_semigroup(int n, std::vector<Id> table) {
  if (n < 1) fail(Errc::parse_error, "semigroup must have at least 1 element");
  if (static_cast<int>(table.size()) != n * n)
    fail(Errc::parse_error, "table size mismatch");
  for (Id v : table)
    if (v < 0 || v >= n)
      fail(Errc::parse_error, "table entry out of range", {v});

  if (auto w = kernels::find_associativity_violation(table, n, default_exec()))
    fail(Errc::not_associative, "(ab)c != a(bc)", {(*w)[0], (*w)[1], (*w)[2]});

  InverseSemigroup s;
  s.n = n;
  s.table = std::move(table);
  s.idem_mask.assign(n, 0);
  for (Id a = 0; a < n; ++a)
    if (s.at(a, a) == a) {
      s.idem_mask[a] = 1;
      s.idem.push_back(a);
    }

  // Regularity first, then commuting idempotents, then uniqueness; with the
  // first two established uniqueness is a theorem, so the last check is an
  // internal consistency guard.
  std::vector<std::vector<Id>> inverses(n);
  for (Id a = 0; a < n; ++a) {
    for (Id x = 0; x < n; ++x)
      if (s.at(s.at(a, x), a) == a && s.at(s.at(x, a), x) == x)
        inverses[a].push_back(x);
    if (inverses[a].empty()) fail(Errc::not_regular, "no inverse", {a});
  }
  for (Id e : s.idem)
    for (Id f : s.idem)
      if (s.at(e, f) != s.at(f, e))
        fail(Errc::idempotents_do_not_commute, "ef != fe", {e, f});
  s.inv.resize(n);
  for (Id a = 0; a < n; ++a) {
    if (inverses[a].size() != 1)
      fail(Errc::non_unique_inverse, "ambiguous inverse", {a});
    s.inv[a] = inverses[a][0];
  }
  return s;
}

bool natural_leq(const InverseSemigroup& s, Id a, Id b) {
  return s.at(s.r(a), b) == a;  // a <= b iff a = aa^{-1}b
}

std::vector<Id> centralizer_of_idempotents(const InverseSemigroup& s) {
  std::vector<Id> out;
  for (Id a = 0; a < s.n; ++a) {
    bool central = true;
    for (Id e : s.idem)
      if (s.at(a, e) != s.at(e, a)) {
        central = false;
        break;
      }
    if (central) out.push_back(a);
  }
  return out;
}

Congruence mu(const InverseSemigroup& s) {
  return Congruence{s.n, kernels::mu_partition(s, default_exec())};
}

bool is_fundamental(const InverseSemigroup& s) {
  return mu(s) == equality_congruence(s.n);
}

Congruence congruence_generated(const InverseSemigroup& s,
                                const std::vector<std::pair<Id, Id>>& pairs) {
  UnionFind uf(s.n);
  std::deque<std::pair<Id, Id>> work(pairs.begin(), pairs.end());
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.merge(a, b)) continue;
    for (Id c = 0; c < s.n; ++c) {
      work.emplace_back(s.at(c, a), s.at(c, b));
      work.emplace_back(s.at(a, c), s.at(b, c));
    }
  }
  std::vector<Id> rep(s.n);
  for (Id a = 0; a < s.n; ++a) rep[a] = uf.find(a);
  return Congruence{s.n, normalize_partition(std::move(rep))};
}

QuotientResult quotient(const InverseSemigroup& s, const Congruence& rho) {
  std::vector<Id> reps;
  for (Id a = 0; a < s.n; ++a)
    if (rho.classof[a] == a) reps.push_back(a);
  const int k = static_cast<int>(reps.size());
  std::vector<Id> to_class(s.n, kNone);
  for (int i = 0; i < k; ++i) to_class[reps[i]] = i;
  std::vector<Id> projection(s.n);
  for (Id a = 0; a < s.n; ++a) projection[a] = to_class[rho.classof[a]];
  std::vector<Id> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[static_cast<size_t>(i) * k + j] = projection[s.at(reps[i], reps[j])];
  return QuotientResult{validate_inverse_semigroup(k, std::move(table)),
                        std::move(projection)};
}

std::vector<Id> kernel_of_congruence(const InverseSemigroup& s,
                                     const Congruence& rho) {
  std::vector<uint8_t> idem_class(s.n, 0);
  for (Id e : s.idem) idem_class[rho.classof[e]] = 1;
  std::vector<Id> out;
  for (Id a = 0; a < s.n; ++a)
    if (idem_class[rho.classof[a]]) out.push_back(a);
  return out;
}

bool is_idempotent_separating(const InverseSemigroup& s,
                              const Congruence& rho) {
  std::vector<Id> seen(s.n, kNone);
  for (Id e : s.idem) {
    Id c = rho.classof[e];
    if (seen[c] != kNone) return false;
    seen[c] = e;
  }
  return true;
}

bool is_inverse_subsemigroup(const InverseSemigroup& s,
                             const std::vector<Id>& elems) {
  std::vector<uint8_t> in(s.n, 0);
  for (Id a : elems) in[a] = 1;
  for (Id a : elems) {
    if (!in[s.inv[a]]) return false;
    for (Id b : elems)
      if (!in[s.at(a, b)]) return false;
  }
  return true;
}

bool is_wide_subsemigroup(const InverseSemigroup& s,
                          const std::vector<Id>& elems) {
  if (!is_inverse_subsemigroup(s, elems)) return false;
  std::vector<uint8_t> in(s.n, 0);
  for (Id a : elems) in[a] = 1;
  for (Id e : s.idem)
    if (!in[e]) return false;
  return true;
}

bool is_normal_subsemigroup(const InverseSemigroup& s,
                            const std::vector<Id>& elems) {
  if (!is_wide_subsemigroup(s, elems)) return false;
  std::vector<uint8_t> in(s.n, 0);
  for (Id a : elems) in[a] = 1;
  for (Id m : elems)
    for (Id x = 0; x < s.n; ++x)
      if (!in[s.at(s.at(s.inv[x], m), x)]) return false;
  return true;
}

HomReport check_homomorphism(const InverseSemigroup& s,
                             const InverseSemigroup& t,
                             const std::vector<Id>& map) {
  HomReport rep;
  if (static_cast<int>(map.size()) != s.n) return rep;
  for (Id v : map)
    if (v < 0 || v >= t.n) return rep;

  rep.is_hom = true;
  for (Id a = 0; a < s.n && rep.is_hom; ++a)
    for (Id b = 0; b < s.n; ++b)
      if (map[s.at(a, b)] != t.at(map[a], map[b])) {
        rep.is_hom = false;
        break;
      }

  rep.is_idempotent_separating = true;
  {
    std::vector<uint8_t> seen(t.n, 0);
    for (Id e : s.idem) {
      if (seen[map[e]]) {
        rep.is_idempotent_separating = false;
        break;
      }
      seen[map[e]] = 1;
    }
  }

  std::vector<uint8_t> hit(t.n, 0);
  for (Id a = 0; a < s.n; ++a) hit[map[a]] = 1;
  rep.image_is_wide = true;
  for (Id e : t.idem)
    if (!hit[e]) {
      rep.image_is_wide = false;
      break;
    }

  if (rep.is_hom) {
    std::vector<Id> cls(s.n);
    std::map<Id, Id> first;
    for (Id a = 0; a < s.n; ++a) {
      auto [it, inserted] = first.try_emplace(map[a], a);
      cls[a] = it->second;
    }
    rep.kernel = Congruence{s.n, std::move(cls)};
  }
  return rep;
}

namespace {

// Backtracking over element images with idempotent / order / inverse /
// product pruning. Images are tried in ascending order, so the first map
// found is the lexicographically least.
struct IsoSearch {
  const InverseSemigroup& s;
  const InverseSemigroup& t;
  std::vector<Id> map;
  std::vector<uint8_t> used;

  IsoSearch(const InverseSemigroup& s_, const InverseSemigroup& t_)
      : s(s_), t(t_), map(s_.n, kNone), used(t_.n, 0) {}

  // Elements are assigned in id order, so every product constraint is
  // enforced exactly when the last of {x, y, xy} receives its image; the
  // order and inverse checks are pruning only.
  bool compatible(Id a, Id v) const {
    if (s.is_idempotent(a) != t.is_idempotent(v)) return false;
    if (map[s.inv[a]] != kNone && map[s.inv[a]] != t.inv[v]) return false;
    Id aa = s.at(a, a);
    if (aa != a) {
      if (map[aa] != kNone) {
        if (map[aa] != t.at(v, v)) return false;
      } else if (used[t.at(v, v)]) {
        return false;
      }
    }
    for (Id b = 0; b < a; ++b) {
      if (natural_leq(s, a, b) != natural_leq(t, v, map[b])) return false;
      if (natural_leq(s, b, a) != natural_leq(t, map[b], v)) return false;
      Id ab = s.at(a, b), ba = s.at(b, a);
      Id vb = t.at(v, map[b]), bv = t.at(map[b], v);
      if (ab == a) {
        if (vb != v) return false;
      } else if (map[ab] != kNone) {
        if (map[ab] != vb) return false;
      } else if (used[vb]) {
        return false;
      }
      if (ba == a) {
        if (bv != v) return false;
      } else if (map[ba] != kNone) {
        if (map[ba] != bv) return false;
      } else if (used[bv]) {
        return false;
      }
    }
    // products of earlier elements landing on a
    for (Id x = 0; x < a; ++x)
      for (Id y = 0; y < a; ++y)
        if (s.at(x, y) == a && t.at(map[x], map[y]) != v) return false;
    return true;
  }

  bool extend(Id a) {
    if (a == s.n) return true;
    for (Id v = 0; v < t.n; ++v) {
      if (used[v] || !compatible(a, v)) continue;
      map[a] = v;
      used[v] = 1;
      if (extend(a + 1)) return true;
      map[a] = kNone;
      used[v] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Id>> find_isomorphism(const InverseSemigroup& s,
                                                const InverseSemigroup& t) {
  check_cap(std::max(s.n, t.n), max_size(), "isomorphism search");
  if (s.n != t.n || s.idem.size() != t.idem.size()) return std::nullopt;
  IsoSearch search(s, t);
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

InverseSemigroup subsemigroup(const InverseSemigroup& s,
                              const std::vector<Id>& elems) {
  const int k = static_cast<int>(elems.size());
  std::vector<Id> to_local(s.n, kNone);
  for (int i = 0; i < k; ++i) to_local[elems[i]] = i;
  std::vector<Id> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Id p = s.at(elems[i], elems[j]);
      if (to_local[p] == kNone)
        fail(Errc::closure_violation, "subset not closed under products",
             {elems[i], elems[j]});
      table[static_cast<size_t>(i) * k + j] = to_local[p];
    }
  return validate_inverse_semigroup(k, std::move(table));
}

namespace {

// Partial injective maps on {0..n-1} as total arrays with kNone; the table
// convention is table[f][g] = f after g.
std::vector<Id> compose_partial(const std::vector<Id>& f,
                                const std::vector<Id>& g) {
  std::vector<Id> out(g.size(), kNone);
  for (size_t x = 0; x < g.size(); ++x)
    if (g[x] != kNone && f[g[x]] != kNone) out[x] = f[g[x]];
  return out;
}

InverseSemigroup table_from_partial_maps(std::vector<std::vector<Id>> maps) {
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());
  const int k = static_cast<int>(maps.size());
  std::map<std::vector<Id>, Id> index;
  for (int i = 0; i < k; ++i) index[maps[i]] = i;
  std::vector<Id> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto it = index.find(compose_partial(maps[i], maps[j]));
      if (it == index.end())
        fail(Errc::closure_violation, "partial maps not closed", {i, j});
      table[static_cast<size_t>(i) * k + j] = it->second;
    }
  return validate_inverse_semigroup(k, std::move(table));
}

InverseSemigroup symmetric_inverse(int n) {
  check_cap(n, 4, "symmetric_inverse degree");
  std::vector<std::vector<Id>> maps;
  std::vector<Id> current(n, kNone);
  std::vector<uint8_t> used(n, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      maps.push_back(current);
      return;
    }
    current[pos] = kNone;
    self(self, pos + 1);
    for (Id v = 0; v < n; ++v) {
      if (used[v]) continue;
      current[pos] = v;
      used[v] = 1;
      self(self, pos + 1);
      used[v] = 0;
    }
    current[pos] = kNone;
  };
  if (n == 0) maps.push_back({});
  else rec(rec, 0);
  return table_from_partial_maps(std::move(maps));
}

InverseSemigroup chain_semilattice(int n) {
  check_cap(n, max_size(), "chain_semilattice");
  if (n < 1) fail(Errc::parse_error, "chain needs at least 1 element");
  std::vector<Id> table(static_cast<size_t>(n) * n);
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] = std::min(i, j);
  return validate_inverse_semigroup(n, std::move(table));
}

InverseSemigroup powerset_semilattice(int n) {
  check_cap(n, 4, "powerset_semilattice base size");
  const int k = 1 << n;
  std::vector<Id> table(static_cast<size_t>(k) * k);
  for (Id i = 0; i < k; ++i)
    for (Id j = 0; j < k; ++j) table[static_cast<size_t>(i) * k + j] = i & j;
  return validate_inverse_semigroup(k, std::move(table));
}

InverseSemigroup cyclic_group(int n) {
  check_cap(n, max_size(), "cyclic_group order");
  if (n < 1) fail(Errc::parse_error, "group needs at least 1 element");
  std::vector<Id> table(static_cast<size_t>(n) * n);
  for (Id i = 0; i < n; ++i)
    for (Id j = 0; j < n; ++j)
      table[static_cast<size_t>(i) * n + j] = (i + j) % n;
  return validate_inverse_semigroup(n, std::move(table));
}

// The partial-homeomorphism semigroup of the particular point space drawn
// in terms of point maps: identity maps on every open set, plus the maps
// between two-point opens {0,i} -> {0,j} fixing the particular point.
// For n = 3 this is the seven-element structure with two non-idempotents.
InverseSemigroup particular_point_homeos(int n) {
  if (n < 2) fail(Errc::parse_error, "needs at least 2 points");
  check_cap(n, 5, "particular_point_homeos points");
  std::vector<std::vector<Id>> maps;
  const uint32_t full = (1u << n) - 1;
  // opens: empty, and every set containing point 0
  std::vector<uint32_t> opens = {0};
  for (uint32_t m = 0; m <= full; ++m)
    if (m & 1u) opens.push_back(m);
  for (uint32_t u : opens) {
    std::vector<Id> idmap(n, kNone);
    for (int p = 0; p < n; ++p)
      if (u & (1u << p)) idmap[p] = p;
    maps.push_back(std::move(idmap));
  }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (i == j) continue;
      std::vector<Id> f(n, kNone);
      f[0] = 0;
      f[i] = j;
      maps.push_back(std::move(f));
    }
  return table_from_partial_maps(std::move(maps));
}

}  // namespace

InverseSemigroup standard_example(const std::string& name, int n) {
  if (name == "symmetric_inverse") return symmetric_inverse(n);
  if (name == "chain_semilattice") return chain_semilattice(n);
  if (name == "powerset_semilattice") return powerset_semilattice(n);
  if (name == "cyclic_group") return cyclic_group(n);
  if (name == "particular_point_homeos" || name == "particular_point")
    return particular_point_homeos(n);
  fail(Errc::parse_error, "unknown example name: " + name);
}

namespace {

Congruence join(const InverseSemigroup& s, const Congruence& a,
                const Congruence& b) {
  std::vector<std::pair<Id, Id>> pairs;
  for (Id x = 0; x < s.n; ++x) {
    pairs.emplace_back(x, a.classof[x]);
    pairs.emplace_back(x, b.classof[x]);
  }
  return congruence_generated(s, pairs);
}

}  // namespace

std::vector<Congruence> enumerate_congruences(const InverseSemigroup& s) {
  check_cap(s.n, max_congruence_size(), "congruence lattice enumeration");
  std::set<Congruence> all;
  all.insert(equality_congruence(s.n));
  std::deque<Congruence> fresh;
  for (Id a = 0; a < s.n; ++a)
    for (Id b = a + 1; b < s.n; ++b) {
      Congruence c = congruence_generated(s, {{a, b}});
      if (all.insert(c).second) fresh.push_back(std::move(c));
    }
  // Close under pairwise joins: every congruence is a join of principal ones.
  while (!fresh.empty()) {
    Congruence c = std::move(fresh.front());
    fresh.pop_front();
    std::vector<Congruence> snapshot(all.begin(), all.end());
    for (const Congruence& d : snapshot) {
      Congruence j = join(s, c, d);
      if (all.insert(j).second) fresh.push_back(std::move(j));
    }
  }
  return {all.begin(), all.end()};
}

}  // namespace gmunn
