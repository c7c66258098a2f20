#ifndef GMUNN_KERNELS_HPP_
#define GMUNN_KERNELS_HPP_

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "gmunn/common.hpp"

namespace gmunn {
struct InverseSemigroup;
}

// Data-parallel inner loops with a serial reference implementation.
// Every kernel is deterministic: the parallel path returns bit-identical
// results to the serial one (first-witness scans reduce to the
// lexicographic minimum; partitions canonicalise to least representatives).
namespace gmunn::kernels {

/// Lexicographically first (a,b,c) with (ab)c != a(bc), if any.
std::optional<std::array<Id, 3>> find_associativity_violation(
    const std::vector<Id>& table, int n, Exec exec);

/// classof array of the mu relation: a ~ b iff inv[a]*e*a = inv[b]*e*b for
/// all idempotents e.
std::vector<Id> mu_partition(const InverseSemigroup& s, Exec exec);

/// classof array over columns of an m x n action table: s ~ t iff the
/// columns s and t are identical.
std::vector<Id> column_partition(const std::vector<Id>& act, int m, int n,
                                 Exec exec);

/// Runs fn(i) for i in 0..count-1, possibly in parallel. fn must only write
/// to its own slot of any shared output.
void indexed_for(int count, Exec exec, const std::function<void(int)>& fn);

}  // namespace gmunn::kernels

#endif  // GMUNN_KERNELS_HPP_
