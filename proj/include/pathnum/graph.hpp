#ifndef PATHNUM_GRAPH_HPP
#define PATHNUM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pathnum {

/// Undirected simple graph over opaque vertex tokens.
///
/// Vertices are addressed by dense indices 0..n-1 in first-appearance order;
/// the original tokens are kept for round-tripping input files. Instances are
/// immutable after construction: all edit operations return a new Graph.
class Graph {
public:
    Graph() = default;

    /// Build from explicit tokens and index edges. Throws std::invalid_argument
    /// on duplicate tokens, self-loops, parallel edges, or out-of-range indices.
    Graph(std::vector<std::string> tokens, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }

    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;

    const std::string& token(int v) const;
    const std::vector<std::string>& tokens() const { return tokens_; }
    std::optional<int> find(const std::string& token) const;
    /// Like find() but throws std::invalid_argument naming the token.
    int index_of(const std::string& token) const;

    /// All edges as (u, v) pairs with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    Graph with_edges_removed(const std::vector<std::pair<int, int>>& edges) const;
    Graph with_edges_added(const std::vector<std::pair<int, int>>& edges) const;
    /// Keep exactly the vertices with keep[v] true; edges restricted accordingly.
    Graph induced(const std::vector<char>& keep) const;

    bool operator==(const Graph& other) const;

private:
    void check_vertex(int v) const;

    std::vector<std::string> tokens_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    int m_ = 0;
};

/// Simple path as a vertex-index sequence; interpreted against a host graph.
struct Path {
    std::vector<int> v;

    int length() const { return static_cast<int>(v.size()) - 1; }
    std::vector<std::pair<int, int>> edge_set() const;
};

struct PathPartition {
    std::vector<Path> paths;

    int size() const { return static_cast<int>(paths.size()); }
};

/// Parse the graph file format: optional "c " comments, optional
/// "p edge <n> <m>" header (pre-declares tokens "1".."<n>"), edge lines
/// "e <u> <v>", isolated-vertex lines "n <v>". Throws std::runtime_error
/// naming the offending line on malformed input, duplicate edges or self-loops.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);

/// Plain edge-list format: one "u v" pair per line, or a single token for an
/// isolated vertex; blank lines ignored.
Graph parse_edgelist(std::istream& in);

void serialize(const Graph& g, std::ostream& out);
std::string serialize(const Graph& g);

/// Connected components as vertex-disjoint subgraphs (tokens preserved),
/// ordered by smallest contained vertex of g.
std::vector<Graph> components(const Graph& g);

/// Same vertex set, edges E(g) minus the edges of the given paths.
/// Throws std::invalid_argument if some listed path is not a path of g
/// or the paths are not pairwise edge-disjoint.
Graph remove_paths(const Graph& g, std::span<const Path> paths);
Graph remove_paths(const Graph& g, const PathPartition& partition);

int odd_count(const Graph& g);

/// Drop all degree-0 vertices.
Graph strip_isolated(const Graph& g);

bool is_simple_path(const Graph& g, const Path& p);

/// Re-express a path of `from` as a path of `to` by matching tokens.
Path translate(const Path& p, const Graph& from, const Graph& to);
PathPartition translate(const PathPartition& pp, const Graph& from, const Graph& to);

}  // namespace pathnum

#endif
