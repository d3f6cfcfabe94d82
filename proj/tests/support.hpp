#ifndef PATHNUM_TESTS_SUPPORT_HPP
#define PATHNUM_TESTS_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathnum/graph.hpp"
#include "pathnum/pattern.hpp"

namespace pathnum::test {

// -- small builders -----------------------------------------------------

Graph build(int n, const std::vector<std::pair<int, int>>& edges);
Graph build_tokens(const std::vector<std::string>& tokens,
                   const std::vector<std::pair<std::string, std::string>>& edges);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph wheel_graph(int rim);

// -- independent oracles ------------------------------------------------

// All simple cycles of g (n small), each normalized to start at its smallest
// vertex, direction toward the smaller neighbor.
std::vector<std::vector<int>> all_cycles(const Graph& g);
std::vector<int> normalize_cycle(std::vector<int> cycle);
bool cycle_has_chord(const Graph& g, const std::vector<int>& cycle);

// Exhaustive decision of the internally-vertex-disjoint connection problem,
// by enumerating complete path systems.
bool exhaustive_disjoint_paths(const Graph& h, const std::vector<std::pair<int, int>>& pairs);

// Seeded edge-disjoint covering family of (g, v4); optionally retries until
// every path is bull-free. Returns nullopt when the retry budget runs out.
std::optional<CoveringFamily> random_covering_family(const Graph& g, const std::vector<int>& v4,
                                                     std::uint64_t seed, bool require_bull_free);

// Generate-and-filter count of pattern equivalence classes: every trace set
// over N[V4] and lmax variables passing pattern_valid, each trace with a V4
// symbol, all variables used, counted once per canonical class (d included).
long naive_pattern_count(const Graph& g, const std::vector<int>& v4, int lmax);

// Pattern equivalence by explicit search over variable bijections, trace
// orders and orientations; independent of canonical_key.
bool patterns_equivalent(const Pattern& a, const Pattern& b);

// Connected-graph enumeration helper over the oracle's generator.
void for_each_connected(int n, int max_degree, const std::function<bool(const Graph&)>& cb);

}  // namespace pathnum::test

#endif
