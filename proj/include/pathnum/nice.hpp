#ifndef PATHNUM_NICE_HPP
#define PATHNUM_NICE_HPP

#include <string>
#include <vector>

#include "pathnum/graph.hpp"

namespace pathnum {

/// One reduction applied on the way to a nice graph, with enough token-level
/// detail to replay a witness backwards. For pan_removal, `cycle` starts at
/// the degree-3 attachment vertex. For bull_shorten, the three arcs replace
/// the triangle edges uv, uw, wv of the shortened graph.
struct ReplayStep {
    enum class Kind { pan_removal, bull_shorten };
    Kind kind;
    std::vector<std::string> cycle;                 // pan_removal
    std::vector<std::vector<std::string>> arcs;     // bull_shorten: uv, uw, wv arcs
};

struct NiceResult {
    Graph nice_graph;
    int pan_offset = 0;
    std::vector<ReplayStep> log;
};

/// Transform a connected non-subcubic graph into a nice one: delete pan cycles
/// (keeping the attachment vertex), then shorten every non-triangle bull cycle
/// to a triangle. pn(input) = pn(nice_graph) + pan_offset.
/// Throws std::invalid_argument if the input is subcubic or disconnected.
NiceResult make_nice(const Graph& g);

/// Lift a partition of the nice graph back to the original graph by undoing
/// the log in reverse: re-expand shortened bull triangles, then re-attach each
/// removed pan cycle (growing the witness by one path per cycle).
/// Throws std::invalid_argument if the partition is not valid for nice_graph.
PathPartition replay_witness(const PathPartition& nice_partition, const NiceResult& result,
                             const Graph& original);

std::string replay_log_to_json(const std::vector<ReplayStep>& log);
std::vector<ReplayStep> replay_log_from_json(const std::string& text);

}  // namespace pathnum

#endif
