#ifndef PATHNUM_SUBCUBIC_HPP
#define PATHNUM_SUBCUBIC_HPP

#include "pathnum/graph.hpp"

#include <vector>

namespace pathnum {

/// Exact path number of a connected subcubic graph:
/// 2 for cycles and subdivided diamonds, odd/2 + pan otherwise.
/// Throws std::invalid_argument on disconnected or non-subcubic input.
int pn_subcubic(const Graph& g);

/// Remove the edges of a pan cycle and strip the vertices this isolates.
/// Throws std::invalid_argument if c is not a pan cycle of g.
Graph reduce_pan_cycle(const Graph& g, const std::vector<int>& c);

/// A path partition of size pn_subcubic(g), built by the inductive
/// construction: strip pan cycles, dissolve degree-2 vertices, and close the
/// all-odd base case with a size-bounded search.
PathPartition partition_subcubic(const Graph& g);

}  // namespace pathnum

#endif
