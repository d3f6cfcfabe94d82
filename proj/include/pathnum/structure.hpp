#ifndef PATHNUM_STRUCTURE_HPP
#define PATHNUM_STRUCTURE_HPP

#include <utility>
#include <vector>

#include "pathnum/graph.hpp"

namespace pathnum {

/// Special structures of a graph: the high-degree set and the pan/bull cycles
/// that drive preprocessing.
struct StructureReport {
    std::vector<int> v4;        // vertices of degree >= 4, ascending
    int high = 0;               // sum of degrees over v4
    std::vector<std::vector<int>> pan_cycles;   // each starts at its degree-3 vertex
    std::vector<std::vector<int>> bull_cycles;  // each starts at the smaller degree-3 vertex
    std::vector<std::pair<int, int>> bull_pairs;
};

enum class ComponentKind { cycle, subdivided_diamond, subdivided_triangle, other };

StructureReport analyze(const Graph& g);

/// Classification of a connected graph. A subdivided triangle is reported as
/// cycle. Throws std::invalid_argument on disconnected input.
ComponentKind classify_component(const Graph& g);

/// True iff deg(u) = deg(v) = 3, uv is an edge, and u, v share a degree-2
/// neighbor (the degree-3 corners of a bull triangle).
bool is_bull_pair(const Graph& g, int u, int v);

int pan_count(const Graph& g);

bool is_subcubic(const Graph& g);

std::vector<int> v4_of(const Graph& g);

int high_of(const Graph& g);

}  // namespace pathnum

#endif
