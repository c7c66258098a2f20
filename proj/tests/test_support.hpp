#ifndef GMUNN_TEST_SUPPORT_HPP_
#define GMUNN_TEST_SUPPORT_HPP_

#include <functional>
#include <numeric>
#include <vector>

#include "gmunn/common.hpp"
#include "gmunn/core.hpp"

namespace gmunn::testing {

inline Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected a gmunn::Error");
}

// S_3 as a multiplication table: 0=id, 1=(12), 2=(13), 3=(23), 4=(123), 5=(132),
// composed apply-right-then-left.
inline InverseSemigroup sym3() {
  auto perm_mul = [](std::vector<int> f, std::vector<int> g) {
    std::vector<int> h(3);
    for (int i = 0; i < 3; ++i) h[i] = f[g[i]];
    return h;
  };
  std::vector<std::vector<int>> perms = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<Id> table(36);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      auto p = perm_mul(perms[i], perms[j]);
      for (int k = 0; k < 6; ++k)
        if (perms[k] == p) table[i * 6 + j] = k;
    }
  return validate_inverse_semigroup(6, std::move(table));
}

// Three-element semilattice with two incomparable elements over a zero:
// 0 bottom, 1 and 2 meet to 0.
inline InverseSemigroup antichain_over_zero() {
  std::vector<Id> table = {0, 0, 0, 0, 1, 0, 0, 0, 2};
  return validate_inverse_semigroup(3, std::move(table));
}

// Diamond semilattice: 0 bottom, 3 top, 1 and 2 incomparable with meet 0.
inline InverseSemigroup diamond_semilattice() {
  std::vector<Id> t = {
      0, 0, 0, 0,
      0, 1, 0, 1,
      0, 0, 2, 2,
      0, 1, 2, 3};
  return validate_inverse_semigroup(4, std::move(t));
}

// Test-side model of the symmetric inverse monoid on {0..n-1}: elements are
// partial injections as kNone-padded arrays in lexicographic order, the same
// element order standard_example uses. Serves as the independent oracle for
// the restriction order and for element counts.
struct PartialMapModel {
  int degree;
  std::vector<std::vector<Id>> maps;

  explicit PartialMapModel(int n) : degree(n) {
    std::vector<Id> cur(n, kNone);
    std::vector<uint8_t> used(n, 0);
    build(cur, used, 0);
    std::sort(maps.begin(), maps.end());
  }
  void build(std::vector<Id>& cur, std::vector<uint8_t>& used, int pos) {
    if (pos == degree) {
      maps.push_back(cur);
      return;
    }
    cur[pos] = kNone;
    build(cur, used, pos + 1);
    for (Id v = 0; v < degree; ++v) {
      if (used[v]) continue;
      cur[pos] = v;
      used[v] = 1;
      build(cur, used, pos + 1);
      used[v] = 0;
    }
    cur[pos] = kNone;
  }
  // f restricts g: dom f subseteq dom g and they agree there.
  bool restriction_leq(int i, int j) const {
    for (int x = 0; x < degree; ++x)
      if (maps[i][x] != kNone && maps[i][x] != maps[j][x]) return false;
    return true;
  }
};

}  // namespace gmunn::testing

#endif  // GMUNN_TEST_SUPPORT_HPP_
