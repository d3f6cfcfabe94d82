#include "pathnum/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pathnum {

namespace {

// A maximal run of degree-2 vertices between two branch vertices (possibly the
// same one), or a direct branch-branch edge (empty interior).
struct Connection {
    int a, b;
    std::vector<int> interior;  // oriented a -> b
};

// Decompose edges around degree-2 chains. Vertices of degree != 2 are anchors;
// all-degree-2 cycles are returned separately.
struct ChainDecomposition {
    std::vector<Connection> connections;
    std::vector<std::vector<int>> pure_cycles;
};

ChainDecomposition decompose(const Graph& g) {
    ChainDecomposition out;
    std::vector<char> chain_done(g.n(), 0);
    for (int a = 0; a < g.n(); ++a) {
        if (g.degree(a) == 2) continue;
        for (int x : g.neighbors(a)) {
            if (g.degree(x) != 2) {
                if (a < x) out.connections.push_back({a, x, {}});
                continue;
            }
            if (chain_done[x]) continue;
            Connection c{a, -1, {}};
            int prev = a, cur = x;
            while (g.degree(cur) == 2) {
                chain_done[cur] = 1;
                c.interior.push_back(cur);
                int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
                prev = cur;
                cur = next;
            }
            c.b = cur;
            out.connections.push_back(std::move(c));
        }
    }
    // untouched degree-2 vertices form pure cycles
    for (int s = 0; s < g.n(); ++s) {
        if (g.degree(s) != 2 || chain_done[s]) continue;
        std::vector<int> cycle;
        int prev = -1, cur = s;
        do {
            chain_done[cur] = 1;
            cycle.push_back(cur);
            int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = next;
        } while (cur != s);
        out.pure_cycles.push_back(std::move(cycle));
    }
    return out;
}

std::vector<int> cycle_from_loop(const Connection& c) {
    std::vector<int> fwd{c.a};
    fwd.insert(fwd.end(), c.interior.begin(), c.interior.end());
    std::vector<int> rev{c.a};
    rev.insert(rev.end(), c.interior.rbegin(), c.interior.rend());
    return std::min(fwd, rev);
}

std::vector<int> cycle_from_pair(int u, int v, const Connection& c1, const Connection& c2) {
    auto walk = [&](const Connection& c, bool from_u) {
        std::vector<int> seq = c.interior;
        if ((c.a == u) != from_u) std::reverse(seq.begin(), seq.end());
        return seq;
    };
    auto assemble = [&](const Connection& first, const Connection& second) {
        std::vector<int> seq{u};
        auto i1 = walk(first, true);
        seq.insert(seq.end(), i1.begin(), i1.end());
        seq.push_back(v);
        auto i2 = walk(second, false);
        std::reverse(i2.begin(), i2.end());
        seq.insert(seq.end(), i2.rbegin(), i2.rend());
        return seq;
    };
    return std::min(assemble(c1, c2), assemble(c2, c1));
}

}  // namespace

std::vector<int> v4_of(const Graph& g) {
    std::vector<int> v4;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= 4) v4.push_back(v);
    return v4;
}

int high_of(const Graph& g) {
    int h = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) >= 4) h += g.degree(v);
    return h;
}

bool is_subcubic(const Graph& g) {
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 3) return false;
    return true;
}

StructureReport analyze(const Graph& g) {
    StructureReport r;
    r.v4 = v4_of(g);
    r.high = high_of(g);

    auto dec = decompose(g);
    std::map<std::pair<int, int>, std::vector<const Connection*>> between;
    for (const auto& c : dec.connections) {
        if (c.a == c.b) {
            if (g.degree(c.a) == 3) r.pan_cycles.push_back(cycle_from_loop(c));
        } else {
            between[std::minmax(c.a, c.b)].push_back(&c);
        }
    }
    for (const auto& [pair, conns] : between) {
        auto [u, v] = pair;
        if (g.degree(u) != 3 || g.degree(v) != 3) continue;
        bool have_direct_edge = g.has_edge(u, v);
        for (size_t i = 0; i < conns.size(); ++i) {
            for (size_t j = i + 1; j < conns.size(); ++j) {
                // skip cycles carrying the chord uv (only possible in closed
                // subcubic theta pieces)
                if (have_direct_edge && !conns[i]->interior.empty() &&
                    !conns[j]->interior.empty())
                    continue;
                r.bull_cycles.push_back(cycle_from_pair(u, v, *conns[i], *conns[j]));
            }
        }
    }
    std::sort(r.pan_cycles.begin(), r.pan_cycles.end());
    std::sort(r.bull_cycles.begin(), r.bull_cycles.end());

    for (int w = 0; w < g.n(); ++w) {
        if (g.degree(w) != 2) continue;
        int u = g.neighbors(w)[0], v = g.neighbors(w)[1];
        if (g.degree(u) == 3 && g.degree(v) == 3 && g.has_edge(u, v))
            r.bull_pairs.push_back(std::minmax(u, v));
    }
    std::sort(r.bull_pairs.begin(), r.bull_pairs.end());
    r.bull_pairs.erase(std::unique(r.bull_pairs.begin(), r.bull_pairs.end()),
                       r.bull_pairs.end());
    return r;
}

ComponentKind classify_component(const Graph& g) {
    if (components(g).size() != 1)
        throw std::invalid_argument("classify_component: graph is not connected");
    bool all_two = true;
    std::vector<int> deg3;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d != 2) all_two = false;
        if (d == 3) deg3.push_back(v);
        else if (d != 2) return ComponentKind::other;
    }
    if (all_two) return ComponentKind::cycle;
    if (deg3.size() != 2) return ComponentKind::other;
    auto dec = decompose(g);
    if (!dec.pure_cycles.empty()) return ComponentKind::other;
    int across = 0;
    for (const auto& c : dec.connections) {
        if (c.a == c.b) return ComponentKind::other;  // loop chain
        ++across;
    }
    return across == 3 ? ComponentKind::subdivided_diamond : ComponentKind::other;
}

bool is_bull_pair(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("is_bull_pair: u == v");
    if (g.degree(u) != 3 || g.degree(v) != 3 || !g.has_edge(u, v)) return false;
    for (int w : g.neighbors(u))
        if (w != v && g.degree(w) == 2 && g.has_edge(w, v)) return true;
    return false;
}

int pan_count(const Graph& g) {
    return static_cast<int>(analyze(g).pan_cycles.size());
}

}  // namespace pathnum
