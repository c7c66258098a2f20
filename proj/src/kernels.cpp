#include "gmunn/kernels.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "gmunn/core.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gmunn::kernels {

namespace {

// Canonicalise signatures to a least-representative classof array: the
// class of i is the least j with signature[j] == signature[i].
std::vector<Id> group_by_signature(const std::vector<std::vector<Id>>& sig) {
  const int n = static_cast<int>(sig.size());
  std::vector<Id> classof(n);
  std::map<std::vector<Id>, Id> first;
  for (int i = 0; i < n; ++i) {
    auto [it, inserted] = first.try_emplace(sig[i], i);
    classof[i] = it->second;
  }
  return classof;
}

}  // namespace

std::optional<std::array<Id, 3>> find_associativity_violation(
    const std::vector<Id>& table, int n, Exec exec) {
  auto at = [&](Id a, Id b) { return table[static_cast<size_t>(a) * n + b]; };
  if (exec == Exec::serial) {
    for (Id a = 0; a < n; ++a)
      for (Id b = 0; b < n; ++b)
        for (Id c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            return std::array<Id, 3>{a, b, c};
    return std::nullopt;
  }
  // Parallel over the first index; reduce to the lexicographically least
  // witness so the result matches the serial scan.
  const int64_t none = std::numeric_limits<int64_t>::max();
  int64_t best = none;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(min : best)
#endif
  for (Id a = 0; a < n; ++a) {
    for (Id b = 0; b < n; ++b) {
      bool done = false;
      for (Id c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) {
          int64_t local = (static_cast<int64_t>(a) * n + b) * n + c;
          best = std::min(best, local);
          done = true;
          break;
        }
      if (done) break;
    }
  }
  if (best == none) return std::nullopt;
  Id c = static_cast<Id>(best % n);
  Id b = static_cast<Id>((best / n) % n);
  Id a = static_cast<Id>(best / n / n);
  return std::array<Id, 3>{a, b, c};
}

std::vector<Id> mu_partition(const InverseSemigroup& s, Exec exec) {
  const int n = s.n;
  const int k = static_cast<int>(s.idem.size());
  std::vector<std::vector<Id>> sig(n);
  auto fill = [&](int a) {
    sig[a].resize(k);
    for (int j = 0; j < k; ++j)
      sig[a][j] = s.at(s.at(s.inv[a], s.idem[j]), a);
  };
  indexed_for(n, exec, fill);
  return group_by_signature(sig);
}

std::vector<Id> column_partition(const std::vector<Id>& act, int m, int n,
                                 Exec exec) {
  std::vector<std::vector<Id>> sig(n);
  auto fill = [&](int s) {
    sig[s].resize(m);
    for (int x = 0; x < m; ++x) sig[s][x] = act[static_cast<size_t>(x) * n + s];
  };
  indexed_for(n, exec, fill);
  return group_by_signature(sig);
}

void indexed_for(int count, Exec exec, const std::function<void(int)>& fn) {
  if (exec == Exec::serial) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < count; ++i) fn(i);
}

}  // namespace gmunn::kernels
