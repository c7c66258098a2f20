#include "gmunn/munn.hpp"

#include <algorithm>
#include <map>

#include "gmunn/kernels.hpp"

namespace gmunn {

namespace {

std::vector<Id> compose_graphs(const std::vector<Id>& first_applied,
                               const std::vector<Id>& then_applied) {
  std::vector<Id> out(first_applied.size(), kNone);
  for (size_t x = 0; x < first_applied.size(); ++x)
    if (first_applied[x] != kNone && then_applied[first_applied[x]] != kNone)
      out[x] = then_applied[first_applied[x]];
  return out;
}

bool element_less(const MunnElement& a, const MunnElement& b) {
  if (a.e != b.e) return a.e < b.e;
  if (a.f != b.f) return a.f < b.f;
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  return a.theta < b.theta;
}

// Sorts the enumerated elements, builds the composition table and the
// identity-pair index, and validates the result as an inverse semigroup.
MunnSemigroup assemble(Semilattice lattice, int carrier, bool global,
                       std::vector<MunnElement> elements) {
  std::sort(elements.begin(), elements.end(), element_less);
  MunnSemigroup ms;
  ms.lattice = std::move(lattice);
  ms.carrier = carrier;
  ms.carrier_global = global;
  ms.elements = std::move(elements);

  std::map<std::pair<std::vector<Id>, std::vector<Id>>, Id> index;
  for (size_t i = 0; i < ms.elements.size(); ++i) {
    auto key = std::make_pair(ms.elements[i].alpha, ms.elements[i].theta);
    if (!index.emplace(key, static_cast<Id>(i)).second)
      fail(Errc::closure_violation, "duplicate element in enumeration",
           {static_cast<Id>(i)});
  }

  const int k = static_cast<int>(ms.elements.size());
  std::vector<Id> table(static_cast<size_t>(k) * k, kNone);
  kernels::indexed_for(k, default_exec(), [&](int i) {
    for (int j = 0; j < k; ++j) {
      // table[i][j] = element i after element j
      auto alpha = compose_graphs(ms.elements[j].alpha, ms.elements[i].alpha);
      auto theta = compose_graphs(ms.elements[j].theta, ms.elements[i].theta);
      auto it = index.find({alpha, theta});
      if (it != index.end())
        table[static_cast<size_t>(i) * k + j] = it->second;
    }
  });
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (table[static_cast<size_t>(i) * k + j] == kNone)
        fail(Errc::closure_violation, "composite not in the element list",
             {i, j});
  ms.table = validate_inverse_semigroup(k, std::move(table));

  ms.idempotent_ids.assign(ms.lattice.size(), kNone);
  for (int i = 0; i < k; ++i) {
    const auto& el = ms.elements[i];
    if (el.e != el.f) continue;
    bool identity = true;
    for (size_t x = 0; x < el.theta.size() && identity; ++x)
      if (el.theta[x] != kNone && el.theta[x] != static_cast<Id>(x))
        identity = false;
    for (size_t x = 0; x < el.alpha.size() && identity; ++x)
      if (el.alpha[x] != kNone && el.alpha[x] != static_cast<Id>(x))
        identity = false;
    if (identity) ms.idempotent_ids[el.e] = static_cast<Id>(i);
  }
  for (Id g = 0; g < ms.lattice.size(); ++g)
    if (ms.idempotent_ids[g] == kNone)
      fail(Errc::closure_violation, "missing identity pair", {g});
  return ms;
}

}  // namespace

Id MunnSemigroup::find(const std::vector<Id>& alpha,
                       const std::vector<Id>& theta) const {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i].alpha == alpha && elements[i].theta == theta)
      return static_cast<Id>(i);
  return kNone;
}

MunnSemigroup munn_semigroup(const Semilattice& e) {
  check_cap(e.size(), max_size(), "Munn semigroup of a semilattice");
  const int k = e.size();
  std::vector<std::vector<MunnElement>> buckets(
      static_cast<size_t>(k) * k);
  kernels::indexed_for(k * k, default_exec(), [&](int pair_index) {
    Id a = pair_index / k, b = pair_index % k;
    auto da = e.down_set(a);
    auto db = e.down_set(b);
    auto leq_a = [&](Id i, Id j) { return e.leq(da[i], da[j]); };
    auto leq_b = [&](Id i, Id j) { return e.leq(db[i], db[j]); };
    auto isos = enumerate_order_isomorphisms(
        static_cast<int>(da.size()), leq_a, static_cast<int>(db.size()), leq_b);
    for (const auto& local : isos) {
      MunnElement el;
      el.e = a;
      el.f = b;
      el.theta.assign(k, kNone);
      for (size_t i = 0; i < da.size(); ++i) el.theta[da[i]] = db[local[i]];
      buckets[pair_index].push_back(std::move(el));
    }
  });
  std::vector<MunnElement> elements;
  for (auto& bucket : buckets)
    for (auto& el : bucket) elements.push_back(std::move(el));
  return assemble(e, 0, true, std::move(elements));
}

MunnSemigroup generalized_munn(const Presheaf& p) {
  check_cap(p.m, max_size(), "generalised Munn semigroup carrier");
  check_cap(p.lattice.size(), max_size(), "generalised Munn semigroup lattice");
  const int k = p.lattice.size();
  std::vector<std::vector<MunnElement>> buckets(
      static_cast<size_t>(k) * k);
  kernels::indexed_for(k * k, default_exec(), [&](int pair_index) {
    Id a = pair_index / k, b = pair_index % k;
    auto pa = principal(p, a);
    auto pb = principal(p, b);
    for (auto& iso : subpresheaf_isomorphisms(p, pa, pb)) {
      MunnElement el;
      el.e = a;
      el.f = b;
      el.alpha = std::move(iso.alpha);
      el.theta = std::move(iso.theta);
      buckets[pair_index].push_back(std::move(el));
    }
  });
  std::vector<MunnElement> elements;
  for (auto& bucket : buckets)
    for (auto& el : bucket) elements.push_back(std::move(el));
  return assemble(p.lattice, p.m, p.global_support(), std::move(elements));
}

MunnRepresentation munn_representation(const InverseSemigroup& s) {
  Semilattice e = idempotent_semilattice(s);
  MunnSemigroup te = munn_semigroup(e);
  const int k = e.size();
  std::vector<Id> idem_index(s.n, kNone);
  for (int i = 0; i < k; ++i) idem_index[s.idem[i]] = i;

  std::vector<Id> map(s.n);
  for (Id u = 0; u < s.n; ++u) {
    // theta_{u^{-1}}: g |-> u g u^{-1} on d(u)-down -> r(u)-down
    std::vector<Id> theta(k, kNone);
    Id du = idem_index[s.d(u)];
    for (Id g = 0; g < k; ++g) {
      if (!e.leq(g, du)) continue;
      theta[g] = idem_index[s.at(s.at(u, s.idem[g]), s.inv[u])];
    }
    Id found = te.find({}, theta);
    if (found == kNone)
      fail(Errc::closure_violation, "image element missing from T_E", {u});
    map[u] = found;
  }
  HomReport report = check_homomorphism(s, te.table, map);
  return MunnRepresentation{std::move(te), {std::move(map), std::move(report)}};
}

MunnRepresentation generalized_munn_representation(const SupportedAction& a) {
  Presheaf y = restrict_to_idempotents(a);
  MunnSemigroup ty = generalized_munn(y);
  const int k = y.lattice.size();
  std::vector<Id> idem_index(a.s.n, kNone);
  for (int i = 0; i < k; ++i) idem_index[a.s.idem[i]] = i;

  std::vector<Id> map(a.s.n);
  for (Id u = 0; u < a.s.n; ++u) {
    Id du = idem_index[a.s.d(u)];
    std::vector<Id> alpha(a.m, kNone);
    for (Id x = 0; x < a.m; ++x)
      if (y.lattice.leq(y.support[x], du)) alpha[x] = a.act_at(x, a.s.inv[u]);
    std::vector<Id> theta(k, kNone);
    for (Id g = 0; g < k; ++g) {
      if (!y.lattice.leq(g, du)) continue;
      theta[g] = idem_index[a.s.at(a.s.at(u, a.s.idem[g]), a.s.inv[u])];
    }
    Id found = ty.find(alpha, theta);
    if (found == kNone)
      fail(Errc::closure_violation, "image element missing from T_Y", {u});
    map[u] = found;
  }
  HomReport report = check_homomorphism(a.s, ty.table, map);
  return MunnRepresentation{std::move(ty), {std::move(map), std::move(report)}};
}

GammaReport gamma_projection(const MunnSemigroup& tx) {
  GammaReport out;
  out.te = munn_semigroup(tx.lattice);
  out.theta_map.resize(tx.elements.size());
  for (size_t i = 0; i < tx.elements.size(); ++i) {
    Id found = out.te.find({}, tx.elements[i].theta);
    if (found == kNone)
      fail(Errc::closure_violation, "theta component missing from T_E",
           {static_cast<Id>(i)});
    out.theta_map[i] = found;
  }
  out.report = check_homomorphism(tx.table, out.te.table, out.theta_map);

  out.idempotents_match_lattice =
      tx.table.idem.size() == static_cast<size_t>(tx.lattice.size());
  for (Id g = 0; g < tx.lattice.size() && out.idempotents_match_lattice; ++g)
    if (!tx.table.is_idempotent(tx.idempotent_ids[g]))
      out.idempotents_match_lattice = false;

  if (tx.carrier_global) {
    bool injective = true;
    for (size_t i = 0; i < tx.elements.size() && injective; ++i)
      for (size_t j = i + 1; j < tx.elements.size(); ++j)
        if (tx.elements[i].alpha == tx.elements[j].alpha) {
          injective = false;
          break;
        }
    out.alpha_injective = injective;
  }
  return out;
}

ActionFromHom action_from_hom(const InverseSemigroup& s, const Presheaf& p,
                              const MunnSemigroup& tp,
                              const std::vector<Id>& phi) {
  if (!(p.lattice == idempotent_semilattice(s)))
    fail(Errc::lattice_mismatch, "presheaf lattice must be E(S), ids aligned");
  HomReport rep = check_homomorphism(s, tp.table, phi);
  if (!rep.is_hom || !rep.is_idempotent_separating || !rep.image_is_wide)
    fail(Errc::hom_precondition_failed,
         "phi must be an idempotent-separating homomorphism with wide image");

  // lattice_iso[g] = the S-idempotent mapped to the identity pair at g
  std::vector<Id> lattice_iso(p.lattice.size(), kNone);
  for (Id g = 0; g < p.lattice.size(); ++g) {
    for (Id e : s.idem)
      if (phi[e] == tp.idempotent_ids[g]) {
        lattice_iso[g] = e;
        break;
      }
    if (lattice_iso[g] == kNone)
      fail(Errc::hom_precondition_failed, "no idempotent maps to this level",
           {g});
  }

  std::vector<Id> support(p.m);
  for (Id x = 0; x < p.m; ++x) support[x] = lattice_iso[p.support[x]];

  std::vector<Id> act(static_cast<size_t>(p.m) * s.n);
  for (Id u = 0; u < s.n; ++u) {
    const MunnElement& el = tp.elements[phi[u]];
    std::vector<Id> alpha_inv(p.m, kNone);
    for (Id x = 0; x < p.m; ++x)
      if (el.alpha[x] != kNone) alpha_inv[el.alpha[x]] = x;
    for (Id x = 0; x < p.m; ++x)
      act[static_cast<size_t>(x) * s.n + u] = alpha_inv[p.act_at(x, el.f)];
  }
  ActionFromHom out{
      validate_supported_action(p.m, s, std::move(support), std::move(act)),
      std::move(lattice_iso)};
  return out;
}

namespace {

// Backtracking hom enumeration: idempotent images are pinned to a chosen
// semilattice isomorphism, other images range over the non-idempotents;
// products are checked when the last participant is assigned.
struct HomSearch {
  const InverseSemigroup& s;
  const InverseSemigroup& t;
  std::vector<Id> map;
  std::vector<Id> pinned;  // s-id -> forced image (idempotents), else kNone
  std::vector<std::vector<Id>>& out;

  HomSearch(const InverseSemigroup& s_, const InverseSemigroup& t_,
            std::vector<Id> pinned_, std::vector<std::vector<Id>>& out_)
      : s(s_), t(t_), map(s_.n, kNone), pinned(std::move(pinned_)), out(out_) {}

  bool consistent(Id a, Id v) const {
    if (map[s.inv[a]] != kNone && map[s.inv[a]] != t.inv[v]) return false;
    Id aa = s.at(a, a);
    if (aa == a) {
      if (t.at(v, v) != v) return false;
    } else if (map[aa] != kNone && map[aa] != t.at(v, v)) {
      return false;
    }
    for (Id b = 0; b < a; ++b) {
      Id ab = s.at(a, b), ba = s.at(b, a);
      Id vb = t.at(v, map[b]), bv = t.at(map[b], v);
      if (ab == a) {
        if (vb != v) return false;
      } else if (map[ab] != kNone && map[ab] != vb) {
        return false;
      }
      if (ba == a) {
        if (bv != v) return false;
      } else if (map[ba] != kNone && map[ba] != bv) {
        return false;
      }
    }
    for (Id x = 0; x < a; ++x)
      for (Id y = 0; y < a; ++y)
        if (s.at(x, y) == a && t.at(map[x], map[y]) != v) return false;
    return true;
  }

  void extend(Id a) {
    if (a == s.n) {
      out.push_back(map);
      return;
    }
    if (pinned[a] != kNone) {
      if (consistent(a, pinned[a])) {
        map[a] = pinned[a];
        extend(a + 1);
        map[a] = kNone;
      }
      return;
    }
    for (Id v = 0; v < t.n; ++v) {
      if (!consistent(a, v)) continue;
      map[a] = v;
      extend(a + 1);
      map[a] = kNone;
    }
  }
};

}  // namespace

std::vector<std::vector<Id>> enumerate_wide_separating_homs(
    const InverseSemigroup& s, const InverseSemigroup& t, int s_cap,
    int t_cap) {
  check_cap(s.n, s_cap, "hom enumeration source");
  check_cap(t.n, t_cap, "hom enumeration target");
  std::vector<std::vector<Id>> out;
  if (s.idem.size() != t.idem.size()) return out;

  Semilattice es = idempotent_semilattice(s);
  Semilattice et = idempotent_semilattice(t);
  auto leq_s = [&](Id i, Id j) { return es.leq(i, j); };
  auto leq_t = [&](Id i, Id j) { return et.leq(i, j); };
  auto isos = enumerate_order_isomorphisms(es.size(), leq_s, et.size(), leq_t);

  for (const auto& iso : isos) {
    std::vector<Id> pinned(s.n, kNone);
    for (size_t i = 0; i < s.idem.size(); ++i)
      pinned[s.idem[i]] = t.idem[iso[i]];
    HomSearch search(s, t, std::move(pinned), out);
    search.extend(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RoundTripReport verify_theorem_d_roundtrip(const InverseSemigroup& s,
                                           const Presheaf& p) {
  RoundTripReport report;
  MunnSemigroup tp = generalized_munn(p);
  auto homs = enumerate_wide_separating_homs(s, tp.table);
  report.homs_checked = static_cast<int>(homs.size());

  for (const auto& phi : homs) {
    auto built = action_from_hom(s, p, tp, phi);
    auto back = generalized_munn_representation(built.action);

    auto phi_report = check_homomorphism(s, tp.table, phi);
    if (!(back.rep.report.kernel == phi_report.kernel))
      report.kernels_match = false;

    auto image_of = [](const InverseSemigroup& amb, const std::vector<Id>& m) {
      std::vector<Id> elems(m.begin(), m.end());
      std::sort(elems.begin(), elems.end());
      elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
      return subsemigroup(amb, elems);
    };
    auto image_phi = image_of(tp.table, phi);
    auto image_xi = image_of(back.target.table, back.rep.map);
    if (!find_isomorphism(image_phi, image_xi).has_value())
      report.images_isomorphic = false;

    // second direction: rebuild the action from its own representation
    auto y = restrict_to_idempotents(built.action);
    auto rebuilt = action_from_hom(s, y, back.target, back.rep.map);
    if (!(rebuilt.action == built.action)) report.actions_reproduced = false;
    ++report.actions_checked;
  }
  return report;
}

}  // namespace gmunn
