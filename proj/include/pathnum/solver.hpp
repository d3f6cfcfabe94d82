#ifndef PATHNUM_SOLVER_HPP
#define PATHNUM_SOLVER_HPP

#include <cstdint>
#include <functional>
#include <optional>

#include "pathnum/graph.hpp"
#include "pathnum/pattern.hpp"

namespace pathnum {

struct SolveStats {
    std::uint64_t patterns_enumerated = 0;
    std::uint64_t patterns_checked = 0;
    std::uint64_t patterns_feasible = 0;
    int components = 0;
};

/// Per-pattern observer status: value-pruned before the feasibility check,
/// checked and infeasible, or checked and feasible.
enum class PatternStatus { skipped, infeasible, feasible };

struct SolveOptions {
    std::optional<int> lmax;  // default: 16 * high of each nice component
    int threads = 1;          // 0 = hardware concurrency
    SolveStats* stats = nullptr;
    std::function<void(const Pattern&, int value, PatternStatus)> observer;
};

/// pn(g): sum over components; subcubic components by the closed formula,
/// the rest by pattern minimization over the nice transform.
int path_number(const Graph& g, const SolveOptions& options = {});

/// A partition witnessing path_number(g), assembled from the argmin pattern's
/// realized family, the witness extension, subcubic partitions of the
/// remainder, and the nice-transform replay.
PathPartition path_partition(const Graph& g, const SolveOptions& options = {});

/// Extend paths of a bull-free covering family of the nice pair (g, v4) so
/// that g minus the family has no pan cycles and no cycle or subdivided
/// diamond components, preserving family size, bull-freeness, coverage and
/// the odd-vertex count of the remainder.
CoveringFamily extend_for_witness(const Graph& g, const std::vector<int>& v4,
                                  const CoveringFamily& q);

/// True iff the paths are simple with at least one edge each, pairwise
/// edge-disjoint, and their edges union to exactly E(g).
bool verify_partition(const Graph& g, const PathPartition& partition);

}  // namespace pathnum

#endif
