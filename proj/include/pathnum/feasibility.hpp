#ifndef PATHNUM_FEASIBILITY_HPP
#define PATHNUM_FEASIBILITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "pathnum/graph.hpp"
#include "pathnum/pattern.hpp"

namespace pathnum {

/// A variable assignment plus the connecting paths realizing a pattern.
/// Connecting paths are indexed by the symbol pair they realize and stored in
/// the host graph's indexing (they avoid V4 by construction).
struct FeasibilityWitness {
    std::vector<int> assignment;  // variable -> vertex
    std::vector<std::pair<std::pair<int, int>, Path>> connecting;
};

/// Internally vertex-disjoint paths connecting the given terminal pairs
/// (shared endpoints allowed, no vertex of one path internal to another), or
/// nullopt. Pairs are routed in the given order; the first system found wins.
/// Throws std::invalid_argument on unknown terminals or a pair with s == t.
std::optional<std::vector<Path>> disjoint_paths(const Graph& h,
                                                const std::vector<std::pair<int, int>>& pairs);

/// Search for an assignment and connecting paths satisfying the feasibility
/// conditions: injective assignment outside N[V4] with matching degrees,
/// internally vertex-disjoint connecting paths in G - V4, and no trace whose
/// endpoint images form a bull pair. Throws std::invalid_argument if the
/// pattern is invalid.
std::optional<FeasibilityWitness> check_feasible(const Graph& g, const std::vector<int>& v4,
                                                 const Pattern& p);

/// Concatenate the witness paths and V4-incident edges in trace order.
/// Throws std::invalid_argument if the witness is inconsistent with p.
CoveringFamily realize_family(const Graph& g, const std::vector<int>& v4, const Pattern& p,
                              const FeasibilityWitness& w);

}  // namespace pathnum

#endif
