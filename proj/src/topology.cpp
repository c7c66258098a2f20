#include "gmunn/topology.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "gmunn/kernels.hpp"

namespace gmunn {

namespace {

std::vector<Id> points_of(uint32_t mask) {
  std::vector<Id> out;
  for (Id p = 0; mask; ++p, mask >>= 1)
    if (mask & 1u) out.push_back(p);
  return out;
}

}  // namespace

bool FiniteSpace::is_open(uint32_t mask) const {
  return std::binary_search(opens.begin(), opens.end(), mask);
}

Id FiniteSpace::open_index(uint32_t mask) const {
  auto it = std::lower_bound(opens.begin(), opens.end(), mask);
  if (it == opens.end() || *it != mask) return kNone;
  return static_cast<Id>(it - opens.begin());
}

uint32_t FiniteSpace::min_nbhd(Id x) const {
  uint32_t out = full();
  for (uint32_t u : opens)
    if (u & (1u << x)) out &= u;
  return out;
}

FiniteSpace validate_space(int m, std::vector<uint32_t> opens) {
  if (m < 0 || m > 30) fail(Errc::parse_error, "point count out of range");
  FiniteSpace x;
  x.m = m;
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  x.opens = std::move(opens);
  for (uint32_t u : x.opens)
    if (u & ~x.full()) fail(Errc::parse_error, "open set out of range");
  if (!x.is_open(0) || !x.is_open(x.full()))
    fail(Errc::missing_empty_or_full, "opens must contain {} and the space");
  const int k = static_cast<int>(x.opens.size());
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!x.is_open(x.opens[i] | x.opens[j]))
        fail(Errc::not_closed_under_union, "union of opens not open", {i, j});
      if (!x.is_open(x.opens[i] & x.opens[j]))
        fail(Errc::not_closed_under_intersection,
             "intersection of opens not open", {i, j});
    }
  return x;
}

bool is_T0(const FiniteSpace& x) {
  for (Id a = 0; a < x.m; ++a)
    for (Id b = a + 1; b < x.m; ++b)
      if (x.min_nbhd(a) == x.min_nbhd(b)) return false;
  return true;
}

FiniteSpace particular_point_space(int m) {
  if (m < 1) fail(Errc::parse_error, "needs at least 1 point");
  if (m > 16) fail(Errc::size_cap_exceeded, "particular point space too large");
  std::vector<uint32_t> opens = {0};
  const uint32_t full = (1u << m) - 1;
  for (uint32_t u = 0; u <= full; ++u)
    if (u & 1u) opens.push_back(u);
  return validate_space(m, std::move(opens));
}

FiniteSpace discrete_space(int m) {
  if (m > 16) fail(Errc::size_cap_exceeded, "discrete space too large");
  std::vector<uint32_t> opens;
  const uint32_t full = m == 0 ? 0 : (1u << m) - 1;
  for (uint32_t u = 0; u <= full; ++u) {
    opens.push_back(u);
    if (u == full) break;
  }
  return validate_space(m, std::move(opens));
}

FiniteSpace sierpinski_space() { return validate_space(2, {0, 1, 3}); }

std::vector<uint32_t> completely_prime_filters(const FiniteSpace& x) {
  std::vector<uint32_t> out;
  for (uint32_t u : x.opens) {
    if (u == 0) continue;  // ups(0) contains the bottom: not proper
    bool prime = true;
    for (uint32_t v : x.opens) {
      for (uint32_t w : x.opens) {
        if ((u & ~(v | w)) != 0) continue;  // v|w not above u
        if ((u & ~v) != 0 && (u & ~w) != 0) {
          prime = false;
          break;
        }
      }
      if (!prime) break;
    }
    if (prime) out.push_back(u);
  }
  return out;
}

SoberReport sober_report(const FiniteSpace& x) {
  SoberReport report;
  report.t0 = is_T0(x);
  report.filters = completely_prime_filters(x);
  std::vector<uint32_t> point_minima;
  for (Id p = 0; p < x.m; ++p) point_minima.push_back(x.min_nbhd(p));
  std::sort(point_minima.begin(), point_minima.end());
  for (uint32_t f : report.filters)
    if (!std::binary_search(point_minima.begin(), point_minima.end(), f))
      report.nonpoint_filters.push_back(f);
  report.sober = report.t0 && report.nonpoint_filters.empty() &&
                 report.filters.size() == static_cast<size_t>(x.m);
  return report;
}

bool is_sober(const FiniteSpace& x) { return sober_report(x).sober; }

Semilattice open_set_semilattice(const FiniteSpace& x) {
  const int k = static_cast<int>(x.opens.size());
  std::vector<Id> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[static_cast<size_t>(i) * k + j] =
          x.open_index(x.opens[i] & x.opens[j]);
  return semilattice_from_table(k, std::move(table));
}

std::vector<std::vector<Id>> enumerate_homeomorphisms(const FiniteSpace& x,
                                                      uint32_t dom,
                                                      uint32_t cod) {
  auto dp = points_of(dom);
  auto cp = points_of(cod);
  // a bijection of finite spaces is a homeomorphism iff it is an
  // isomorphism of specialisation preorders; within an open subspace the
  // minimal neighbourhoods are the global ones
  auto leq_d = [&](Id i, Id j) {
    return (x.min_nbhd(dp[i]) & ~x.min_nbhd(dp[j])) == 0;
  };
  auto leq_c = [&](Id i, Id j) {
    return (x.min_nbhd(cp[i]) & ~x.min_nbhd(cp[j])) == 0;
  };
  auto isos = enumerate_order_isomorphisms(
      static_cast<int>(dp.size()), leq_d, static_cast<int>(cp.size()), leq_c);
  std::vector<std::vector<Id>> out;
  out.reserve(isos.size());
  for (const auto& local : isos) {
    std::vector<Id> graph(x.m, kNone);
    for (size_t i = 0; i < dp.size(); ++i) graph[dp[i]] = cp[local[i]];
    out.push_back(std::move(graph));
  }
  return out;
}

namespace {

std::vector<Id> compose_point_maps(const std::vector<Id>& first,
                                   const std::vector<Id>& then) {
  std::vector<Id> out(first.size(), kNone);
  for (size_t i = 0; i < first.size(); ++i)
    if (first[i] != kNone && then[first[i]] != kNone) out[i] = then[first[i]];
  return out;
}

}  // namespace

HomeoSemigroup partial_homeo_semigroup(const FiniteSpace& x) {
  check_cap(x.m, 16, "partial homeomorphism semigroup points");
  const int k = static_cast<int>(x.opens.size());
  std::vector<std::vector<PartialHomeo>> buckets(static_cast<size_t>(k) * k);
  kernels::indexed_for(k * k, default_exec(), [&](int pair_index) {
    uint32_t u = x.opens[pair_index / k];
    uint32_t v = x.opens[pair_index % k];
    if (std::popcount(u) != std::popcount(v)) return;
    for (auto& graph : enumerate_homeomorphisms(x, u, v))
      buckets[pair_index].push_back(PartialHomeo{u, v, std::move(graph)});
  });

  HomeoSemigroup hs;
  hs.space = x;
  for (auto& bucket : buckets)
    for (auto& el : bucket) hs.elements.push_back(std::move(el));
  std::sort(hs.elements.begin(), hs.elements.end(),
            [](const PartialHomeo& a, const PartialHomeo& b) {
              if (a.dom != b.dom) return a.dom < b.dom;
              if (a.cod != b.cod) return a.cod < b.cod;
              return a.map < b.map;
            });

  std::map<std::vector<Id>, Id> index;
  for (size_t i = 0; i < hs.elements.size(); ++i)
    index[hs.elements[i].map] = static_cast<Id>(i);
  const int n = static_cast<int>(hs.elements.size());
  std::vector<Id> table(static_cast<size_t>(n) * n, kNone);
  kernels::indexed_for(n, default_exec(), [&](int i) {
    for (int j = 0; j < n; ++j) {
      auto comp = compose_point_maps(hs.elements[j].map, hs.elements[i].map);
      auto it = index.find(comp);
      if (it != index.end()) table[static_cast<size_t>(i) * n + j] = it->second;
    }
  });
  for (Id c : table)
    if (c == kNone)
      fail(Errc::closure_violation, "partial homeomorphisms not closed");
  hs.table = validate_inverse_semigroup(n, std::move(table));
  return hs;
}

PropEReport prop_e_check(const FiniteSpace& x) {
  if (!is_sober(x)) fail(Errc::not_sober, "space is not sober");
  auto hs = partial_homeo_semigroup(x);
  auto omega = open_set_semilattice(x);
  auto te = munn_semigroup(omega);

  PropEReport report;
  report.homeo_size = hs.table.n;
  report.munn_size = te.table.n;
  report.fundamental = is_fundamental(hs.table);

  // delta: f |-> (W |-> f(W)) on the opens below dom f
  std::vector<Id> delta(hs.table.n);
  for (int i = 0; i < hs.table.n; ++i) {
    const auto& el = hs.elements[i];
    std::vector<Id> theta(omega.size(), kNone);
    for (Id w = 0; w < omega.size(); ++w) {
      uint32_t wm = x.opens[w];
      if (wm & ~el.dom) continue;
      uint32_t img = 0;
      for (Id p : points_of(wm)) img |= 1u << el.map[p];
      theta[w] = x.open_index(img);
    }
    Id found = te.find({}, theta);
    if (found == kNone)
      fail(Errc::closure_violation, "direct image map missing from T_E", {i});
    delta[i] = found;
  }
  auto rep = check_homomorphism(hs.table, te.table, delta);
  std::vector<Id> image(delta.begin(), delta.end());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  report.iso = rep.is_hom && hs.table.n == te.table.n &&
               static_cast<int>(image.size()) == te.table.n;
  return report;
}

EtaleBundle validate_bundle(FiniteSpace total, FiniteSpace base,
                            std::vector<Id> pi) {
  if (static_cast<int>(pi.size()) != total.m)
    fail(Errc::parse_error, "pi must be defined on every total point");
  for (Id v : pi)
    if (v < 0 || v >= base.m) fail(Errc::parse_error, "pi out of range", {v});

  auto preimage = [&](uint32_t v) {
    uint32_t out = 0;
    for (Id p = 0; p < total.m; ++p)
      if (v & (1u << pi[p])) out |= 1u << p;
    return out;
  };
  for (size_t i = 0; i < base.opens.size(); ++i)
    if (!total.is_open(preimage(base.opens[i])))
      fail(Errc::not_continuous, "preimage of an open is not open",
           {static_cast<Id>(i)});

  std::vector<uint8_t> hit(base.m, 0);
  for (Id p = 0; p < total.m; ++p) hit[pi[p]] = 1;
  for (Id b = 0; b < base.m; ++b)
    if (!hit[b]) fail(Errc::not_surjective, "pi misses a base point", {b});

  for (Id p = 0; p < total.m; ++p) {
    bool has_witness = false;
    for (uint32_t nb : total.opens) {
      if (!(nb & (1u << p))) continue;
      auto pts = points_of(nb);
      bool injective = true;
      uint32_t img = 0;
      for (Id q : pts) {
        if (img & (1u << pi[q])) {
          injective = false;
          break;
        }
        img |= 1u << pi[q];
      }
      if (!injective || !base.is_open(img)) continue;
      bool open_map = true;
      for (uint32_t w : total.opens) {
        if (w & ~nb) continue;
        uint32_t wimg = 0;
        for (Id q : points_of(w)) wimg |= 1u << pi[q];
        if (!base.is_open(wimg)) {
          open_map = false;
          break;
        }
      }
      if (open_map) {
        has_witness = true;
        break;
      }
    }
    if (!has_witness)
      fail(Errc::not_local_homeo, "no neighbourhood maps homeomorphically",
           {p});
  }
  return EtaleBundle{std::move(total), std::move(base), std::move(pi)};
}

Id SectionsPresheaf::index_of(const Section& s) const {
  auto it = std::lower_bound(sections.begin(), sections.end(), s);
  if (it == sections.end() || !(*it == s)) return kNone;
  return static_cast<Id>(it - sections.begin());
}

SectionsPresheaf sections_presheaf(const EtaleBundle& bundle) {
  const FiniteSpace& base = bundle.base;
  const FiniteSpace& total = bundle.total;

  SectionsPresheaf out;
  for (uint32_t u : base.opens) {
    auto pts = points_of(u);
    std::vector<std::vector<Id>> fibers(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
      for (Id q = 0; q < total.m; ++q)
        if (bundle.pi[q] == pts[i]) fibers[i].push_back(q);
    std::vector<Id> values(base.m, kNone);
    auto rec = [&](auto&& self, size_t i) -> void {
      if (i == pts.size()) {
        // continuity: preimages of total opens are open in the subspace
        for (uint32_t w : total.opens) {
          uint32_t pre = 0;
          for (Id bp : pts)
            if (w & (1u << values[bp])) pre |= 1u << bp;
          if (!base.is_open(pre)) return;
        }
        uint32_t img = 0;
        for (Id bp : pts) img |= 1u << values[bp];
        if (!total.is_open(img))
          fail(Errc::closure_violation, "section image is not open");
        out.sections.push_back(Section{u, values});
        return;
      }
      for (Id q : fibers[i]) {
        values[pts[i]] = q;
        self(self, i + 1);
      }
      values[pts[i]] = kNone;
    };
    rec(rec, 0);
  }
  std::sort(out.sections.begin(), out.sections.end());

  Semilattice omega = open_set_semilattice(base);
  const int m = static_cast<int>(out.sections.size());
  const int k = omega.size();
  std::vector<Id> support(m);
  std::vector<Id> act(static_cast<size_t>(m) * k);
  for (int i = 0; i < m; ++i) {
    support[i] = base.open_index(out.sections[i].domain);
    for (Id v = 0; v < k; ++v) {
      uint32_t new_dom = out.sections[i].domain & base.opens[v];
      Section restricted{new_dom, std::vector<Id>(base.m, kNone)};
      for (Id p : points_of(new_dom))
        restricted.values[p] = out.sections[i].values[p];
      Id target = out.index_of(restricted);
      if (target == kNone)
        fail(Errc::closure_violation, "restriction of a section missing");
      act[static_cast<size_t>(i) * k + v] = target;
    }
  }
  out.presheaf = validate_presheaf(m, std::move(omega), std::move(support),
                                   std::move(act));
  return out;
}

LaSemigroup la_semigroup(const EtaleBundle& bundle) {
  const FiniteSpace& base = bundle.base;
  const FiniteSpace& total = bundle.total;
  check_cap(total.m, 16, "principal partial automorphisms total points");

  auto preimage = [&](uint32_t v) {
    uint32_t out = 0;
    for (Id p = 0; p < total.m; ++p)
      if (v & (1u << bundle.pi[p])) out |= 1u << p;
    return out;
  };

  const int k = static_cast<int>(base.opens.size());
  std::vector<std::vector<LaElement>> buckets(static_cast<size_t>(k) * k);
  kernels::indexed_for(k * k, default_exec(), [&](int pair_index) {
    uint32_t u = base.opens[pair_index / k];
    uint32_t v = base.opens[pair_index % k];
    auto hats = enumerate_homeomorphisms(base, u, v);
    if (hats.empty()) return;
    uint32_t pu = preimage(u), pv = preimage(v);
    auto thetas = enumerate_homeomorphisms(total, pu, pv);
    for (const auto& theta : thetas)
      for (const auto& hat : hats) {
        bool commutes = true;
        for (Id p : points_of(pu))
          if (hat[bundle.pi[p]] != bundle.pi[theta[p]]) {
            commutes = false;
            break;
          }
        if (commutes)
          buckets[pair_index].push_back(LaElement{theta, hat, u, v});
      }
  });

  LaSemigroup out;
  for (auto& bucket : buckets)
    for (auto& el : bucket) out.elements.push_back(std::move(el));
  std::sort(out.elements.begin(), out.elements.end(),
            [](const LaElement& a, const LaElement& b) {
              if (a.dom_base != b.dom_base) return a.dom_base < b.dom_base;
              if (a.cod_base != b.cod_base) return a.cod_base < b.cod_base;
              if (a.theta_hat != b.theta_hat) return a.theta_hat < b.theta_hat;
              return a.theta < b.theta;
            });

  std::map<std::pair<std::vector<Id>, std::vector<Id>>, Id> index;
  for (size_t i = 0; i < out.elements.size(); ++i) {
    auto key =
        std::make_pair(out.elements[i].theta, out.elements[i].theta_hat);
    if (!index.emplace(key, static_cast<Id>(i)).second)
      fail(Errc::closure_violation, "duplicate bundle automorphism");
  }
  const int n = static_cast<int>(out.elements.size());
  std::vector<Id> table(static_cast<size_t>(n) * n, kNone);
  kernels::indexed_for(n, default_exec(), [&](int i) {
    for (int j = 0; j < n; ++j) {
      auto theta =
          compose_point_maps(out.elements[j].theta, out.elements[i].theta);
      auto hat = compose_point_maps(out.elements[j].theta_hat,
                                    out.elements[i].theta_hat);
      auto it = index.find({theta, hat});
      if (it != index.end()) table[static_cast<size_t>(i) * n + j] = it->second;
    }
  });
  for (Id c : table)
    if (c == kNone)
      fail(Errc::closure_violation, "bundle automorphisms not closed");
  out.table = validate_inverse_semigroup(n, std::move(table));

  out.idempotent_at.assign(base.opens.size(), kNone);
  for (size_t i = 0; i < out.elements.size(); ++i) {
    const auto& el = out.elements[i];
    if (el.dom_base != el.cod_base) continue;
    bool identity = true;
    for (size_t p = 0; p < el.theta.size() && identity; ++p)
      if (el.theta[p] != kNone && el.theta[p] != static_cast<Id>(p))
        identity = false;
    for (size_t p = 0; p < el.theta_hat.size() && identity; ++p)
      if (el.theta_hat[p] != kNone && el.theta_hat[p] != static_cast<Id>(p))
        identity = false;
    if (identity)
      out.idempotent_at[base.open_index(el.dom_base)] = static_cast<Id>(i);
  }
  for (Id v : out.idempotent_at)
    if (v == kNone) fail(Errc::closure_violation, "missing identity pair");
  return out;
}

LaAction la_action(const EtaleBundle& bundle) {
  LaAction out;
  out.la = la_semigroup(bundle);
  out.gamma = sections_presheaf(bundle);

  const int m = static_cast<int>(out.gamma.sections.size());
  const int n = out.la.table.n;
  std::vector<Id> support(m);
  std::vector<Id> act(static_cast<size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    const Section& sigma = out.gamma.sections[i];
    support[i] = out.la.idempotent_at[bundle.base.open_index(sigma.domain)];
    for (int j = 0; j < n; ++j) {
      const LaElement& el = out.la.elements[j];
      std::vector<Id> theta_inv(bundle.total.m, kNone);
      for (size_t p = 0; p < el.theta.size(); ++p)
        if (el.theta[p] != kNone) theta_inv[el.theta[p]] = static_cast<Id>(p);
      Section moved{0, std::vector<Id>(bundle.base.m, kNone)};
      for (Id u : points_of(el.dom_base)) {
        Id hu = el.theta_hat[u];
        if (!(sigma.domain & (1u << hu))) continue;
        moved.domain |= 1u << u;
        moved.values[u] = theta_inv[sigma.values[hu]];
      }
      Id target = out.gamma.index_of(moved);
      if (target == kNone)
        fail(Errc::closure_violation, "moved section missing from Gamma");
      act[static_cast<size_t>(i) * n + j] = target;
    }
  }
  out.action = validate_supported_action(m, out.la.table, std::move(support),
                                         std::move(act));
  return out;
}

TheoremFReport theorem_f_check(const EtaleBundle& bundle) {
  if (!is_sober(bundle.base)) fail(Errc::not_sober, "base is not sober");
  TheoremFReport report;
  LaAction la = la_action(bundle);
  report.la_size = la.la.table.n;
  report.char_cong_equality = characteristic_congruence(la.action) ==
                              equality_congruence(la.la.table.n);

  // the idempotent restriction of the La-action is the sections presheaf
  if (!(restrict_to_idempotents(la.action) == la.gamma.presheaf))
    fail(Errc::closure_violation,
         "La idempotents do not align with the open sets");

  auto rep = generalized_munn_representation(la.action);
  report.munn_size = rep.target.table.n;
  bool injective =
      rep.rep.report.kernel.has_value() &&
      *rep.rep.report.kernel == equality_congruence(la.la.table.n);
  report.iso = rep.rep.report.is_hom && injective &&
               report.la_size == report.munn_size;

  // reconstruct (alpha*, theta_hat*) from every Munn element and check it
  // hits that element again under the representation
  report.reconstruction_ok = true;
  const FiniteSpace& base = bundle.base;
  const FiniteSpace& total = bundle.total;
  for (size_t gi = 0; gi < rep.target.elements.size(); ++gi) {
    const MunnElement& el = rep.target.elements[gi];
    uint32_t u = base.opens[el.e];

    std::vector<Id> hat_star(base.m, kNone);
    bool ok = true;
    for (Id a : points_of(u)) {
      Id ia = base.open_index(base.min_nbhd(a));
      Id target_open = ia == kNone ? kNone : el.theta[ia];
      if (target_open == kNone) {
        ok = false;
        break;
      }
      uint32_t w = base.opens[target_open];
      Id b = kNone;
      for (Id cand = 0; cand < base.m; ++cand)
        if (base.min_nbhd(cand) == w) {
          if (b != kNone) {
            b = kNone;
            break;
          }
          b = cand;
        }
      if (b == kNone) {
        ok = false;
        break;
      }
      hat_star[a] = b;
    }

    std::vector<Id> alpha_star(total.m, kNone);
    if (ok)
      for (Id p = 0; p < total.m; ++p) {
        if (!(u & (1u << bundle.pi[p]))) continue;
        Id source = kNone;
        for (size_t si = 0; si < la.gamma.sections.size() && source == kNone;
             ++si) {
          const Section& sigma = la.gamma.sections[si];
          if ((sigma.domain & ~u) != 0) continue;
          if (sigma.values[bundle.pi[p]] == p) source = static_cast<Id>(si);
        }
        if (source == kNone || el.alpha[source] == kNone) {
          ok = false;
          break;
        }
        const Section& moved = la.gamma.sections[el.alpha[source]];
        Id vpt = hat_star[bundle.pi[p]];
        if (vpt == kNone || !(moved.domain & (1u << vpt))) {
          ok = false;
          break;
        }
        alpha_star[p] = moved.values[vpt];
      }

    Id la_id = kNone;
    if (ok)
      for (size_t i = 0; i < la.la.elements.size(); ++i)
        if (la.la.elements[i].theta == alpha_star &&
            la.la.elements[i].theta_hat == hat_star) {
          la_id = static_cast<Id>(i);
          break;
        }
    if (la_id == kNone || rep.rep.map[la_id] != static_cast<Id>(gi))
      report.reconstruction_ok = false;
  }
  return report;
}

namespace {

std::vector<uint32_t> down_set_masks(int m,
                                     const std::function<bool(Id, Id)>& leq) {
  std::vector<uint32_t> out;
  const uint32_t full = m == 0 ? 0 : (1u << m) - 1;
  for (uint32_t mask = 0;; ++mask) {
    bool closed = true;
    for (Id x = 0; x < m && closed; ++x) {
      if (!(mask & (1u << x))) continue;
      for (Id y = 0; y < m; ++y)
        if (leq(y, x) && !(mask & (1u << y))) {
          closed = false;
          break;
        }
    }
    if (closed) out.push_back(mask);
    if (mask == full) break;
  }
  return out;
}

}  // namespace

EtaleBundle order_ideal_topology(const SupportedAction& a) {
  if (!a.global)
    fail(Errc::not_global, "order-ideal topology needs global support");
  check_cap(a.m, 16, "order-ideal topology carrier");
  const int ke = static_cast<int>(a.s.idem.size());
  check_cap(ke, 16, "order-ideal topology idempotents");

  auto steinberg = [&](Id x, Id y) { return a.act_at(y, a.support[x]) == x; };
  FiniteSpace total = validate_space(a.m, down_set_masks(a.m, steinberg));

  std::vector<Id> idem_index(a.s.n, kNone);
  for (int i = 0; i < ke; ++i) idem_index[a.s.idem[i]] = i;
  auto idem_leq = [&](Id i, Id j) {
    return a.s.at(a.s.idem[i], a.s.idem[j]) == a.s.idem[i];
  };
  FiniteSpace base = validate_space(ke, down_set_masks(ke, idem_leq));

  std::vector<Id> pi(a.m);
  for (Id x = 0; x < a.m; ++x) pi[x] = idem_index[a.support[x]];
  return validate_bundle(std::move(total), std::move(base), std::move(pi));
}

std::vector<uint32_t> compatible_order_ideals(const SupportedAction& a) {
  EtaleBundle bundle = order_ideal_topology(a);
  std::vector<uint32_t> out;
  for (uint32_t mask : bundle.total.opens) {
    auto pts = points_of(mask);
    bool compatible = true;
    for (size_t i = 0; i < pts.size() && compatible; ++i)
      for (size_t j = i + 1; j < pts.size(); ++j) {
        Id x = pts[i], y = pts[j];
        if (a.act_at(x, a.support[y]) != a.act_at(y, a.support[x])) {
          compatible = false;
          break;
        }
      }
    if (compatible) out.push_back(mask);
  }
  return out;
}

FiniteSpace subspace(const FiniteSpace& x, uint32_t mask) {
  auto pts = points_of(mask);
  std::vector<Id> renumber(x.m, kNone);
  for (size_t i = 0; i < pts.size(); ++i)
    renumber[pts[i]] = static_cast<Id>(i);
  std::vector<uint32_t> opens;
  for (uint32_t u : x.opens) {
    uint32_t re = 0;
    for (Id p : points_of(u & mask)) re |= 1u << renumber[p];
    opens.push_back(re);
  }
  return validate_space(static_cast<int>(pts.size()), std::move(opens));
}

}  // namespace gmunn
