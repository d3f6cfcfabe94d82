#ifndef PATHNUM_ORACLE_HPP
#define PATHNUM_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <string>

#include "pathnum/graph.hpp"

namespace pathnum {

/// Exact minimum path-partition size by exhaustive search. Ground truth for
/// differential testing; deliberately simple, no symmetry reduction.
/// Throws std::invalid_argument when |E(g)| exceeds edge_cap.
int brute_pn(const Graph& g, int edge_cap = 20);

/// Smallest number of edge deletions making g subcubic, by iterative-deepening
/// subset search over the edges incident to degree->=4 vertices.
int sen_bruteforce(const Graph& g, int edge_cap = 20);

struct GenParams {
    int n = 0;
    int m = 0;
    int extra = 0;
    int count = 1;
    std::uint64_t seed = 0;
};

/// Deterministic instance generation. Families: random_gnm, random_near_subcubic,
/// wheel, star, pan_gadget, bull_gadget, complete. Vertex tokens are "1".."n".
Graph gen(const std::string& family, const GenParams& params);

/// A label-independent certificate: equal for isomorphic graphs, distinct
/// otherwise. Exact (minimum adjacency encoding per component); intended for
/// small graphs only.
std::string canonical_certificate(const Graph& g);

/// Enumerate every graph on n vertices with maximum degree <= max_degree
/// (max_degree < 0 means unbounded), exactly once per isomorphism class,
/// by edge augmentation with certificate deduplication. The callback may
/// return false to stop early.
void enumerate_graphs(int n, int max_degree, const std::function<bool(const Graph&)>& cb);

}  // namespace pathnum

#endif
