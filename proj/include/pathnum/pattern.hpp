#ifndef PATHNUM_PATTERN_HPP
#define PATHNUM_PATTERN_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pathnum/graph.hpp"

namespace pathnum {

// Trace symbols: a vertex index of the host graph (>= 0) or a variable
// (encoded as negative).
constexpr int var_symbol(int i) { return -1 - i; }
constexpr bool is_var_symbol(int s) { return s < 0; }
constexpr int var_index(int s) { return -1 - s; }

/// Projection of one path onto N[V4] plus variable placeholders.
struct Trace {
    std::vector<int> symbols;
};

/// A set of traces plus the degree specification of its variables.
struct Pattern {
    std::vector<Trace> traces;
    std::vector<int> d;  // variable degrees, values in {1,2,3}

    int ell() const { return static_cast<int>(d.size()); }
};

/// Edge-disjoint paths covering every edge incident to V4.
struct CoveringFamily {
    std::vector<Path> paths;

    int size() const { return static_cast<int>(paths.size()); }
};

/// Consecutive symbol pairs containing a V4 vertex (these must be graph edges)
/// and the remaining consecutive pairs (to be realized as connecting paths).
std::vector<std::pair<int, int>> trace_edges(const Trace& t, const std::vector<char>& in_v4);
std::vector<std::pair<int, int>> trace_ends(const Trace& t, const std::vector<char>& in_v4);

/// 0 if the symbol is absent, 1 at a trace endpoint, 2 in the interior.
int trace_deg(const Trace& t, int symbol);

std::vector<char> v4_mask(const Graph& g, const std::vector<int>& v4);
std::vector<char> closed_neighborhood_mask(const Graph& g, const std::vector<int>& v4);

bool is_covering_family(const Graph& g, const std::vector<int>& v4, const CoveringFamily& q);

/// The five pattern conditions checked against (g, v4), plus trace
/// well-formedness (symbols over N[V4] and declared variables, no repeats,
/// no variable adjacent to a V4 symbol, V4-incident pairs are edges).
bool pattern_valid(const Graph& g, const std::vector<int>& v4, const Pattern& p);

/// Oddity gains minus losses over N[V4] and the variables.
/// Throws std::invalid_argument on an invalid pattern.
int odd_number(const Graph& g, const std::vector<int>& v4, const Pattern& p);

/// Encode a covering family against the deterministic terminal collection
/// N[N[V4] + endpoints], with paths oriented smaller endpoint first and
/// variables numbered by first appearance. Unused terminal vertices are not
/// given variables. Throws std::invalid_argument if q is not a covering family.
Pattern encode(const Graph& g, const std::vector<int>& v4, const CoveringFamily& q);

/// Stream every valid pattern, each trace containing at least one V4 symbol,
/// exactly once up to variable renaming, trace reorientation and trace order.
/// Patterns appear with |traces| ascending, then the variable count ascending.
/// The effective variable cap is min(lmax, 16*high, |V - N[V4]|).
/// The callback returns false to stop. Throws std::invalid_argument if v4 is
/// empty or does not match the graph.
void enumerate_patterns(const Graph& g, const std::vector<int>& v4, int lmax,
                        const std::function<bool(const Pattern&)>& cb);

/// Canonical serialization: minimal over trace order, trace orientation and
/// variable renaming. Equal keys iff equivalent patterns.
std::string canonical_key(const Pattern& p);

std::string pattern_to_json(const Graph& g, const Pattern& p);

}  // namespace pathnum

#endif
