#include "pathnum/subcubic.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "pathnum/solver.hpp"
#include "pathnum/structure.hpp"

namespace pathnum {

namespace {

void require_connected_subcubic(const Graph& g, const char* who) {
    if (!is_subcubic(g)) throw std::invalid_argument(std::string(who) + ": graph is not subcubic");
    if (g.n() == 0 || components(g).size() != 1)
        throw std::invalid_argument(std::string(who) + ": graph is not connected");
}

bool is_pan_cycle(const Graph& g, const std::vector<int>& c) {
    if (c.size() < 3) return false;
    std::vector<char> on(g.n(), 0);
    for (int v : c) {
        if (v < 0 || v >= g.n() || on[v]) return false;
        on[v] = 1;
    }
    for (size_t i = 0; i < c.size(); ++i)
        if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
    int deg3 = 0;
    for (int v : c) {
        if (g.degree(v) == 3) ++deg3;
        else if (g.degree(v) != 2) return false;
    }
    return deg3 == 1;
}

// Bounded search for a partition with exactly `target` paths. Same scheme as
// the brute-force oracle: commit one path at a time starting at the smallest
// uncovered edge.
struct TargetSearch {
    int n;
    std::vector<char> adj;
    std::vector<int> deg;
    int edges_left = 0;
    int target;
    std::vector<std::vector<int>> current;
    std::optional<std::vector<std::vector<int>>> found;

    bool has(int u, int v) const { return adj[u * n + v]; }
    void take(int u, int v) {
        adj[u * n + v] = adj[v * n + u] = 0;
        --deg[u];
        --deg[v];
        --edges_left;
    }
    void give(int u, int v) {
        adj[u * n + v] = adj[v * n + u] = 1;
        ++deg[u];
        ++deg[v];
        ++edges_left;
    }

    int lower_bound() const {
        std::vector<char> seen(n, 0);
        int bound = 0;
        for (int s = 0; s < n; ++s) {
            if (seen[s] || deg[s] == 0) continue;
            int odd = 0;
            std::vector<int> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                if (deg[u] % 2) ++odd;
                for (int w = 0; w < n; ++w)
                    if (has(u, w) && !seen[w]) {
                        seen[w] = 1;
                        stack.push_back(w);
                    }
            }
            bound += std::max(1, odd / 2);
        }
        return bound;
    }

    void next_path() {
        if (found) return;
        if (edges_left == 0) {
            found = current;
            return;
        }
        int used = static_cast<int>(current.size());
        if (used + lower_bound() > target) return;
        int u = -1, v = -1;
        for (int a = 0; a < n && u < 0; ++a)
            for (int b = a + 1; b < n; ++b)
                if (has(a, b)) {
                    u = a;
                    v = b;
                    break;
                }
        current.push_back({u, v});
        take(u, v);
        grow(false);
        give(u, v);
        current.pop_back();
    }

    void grow(bool backward) {
        if (found) return;
        auto& path = current.back();
        int tip = backward ? path.front() : path.back();
        for (int w = 0; w < n && !found; ++w) {
            if (!has(tip, w)) continue;
            if (std::find(path.begin(), path.end(), w) != path.end()) continue;
            take(tip, w);
            if (backward) {
                path.insert(path.begin(), w);
                grow(true);
                path.erase(path.begin());
            } else {
                path.push_back(w);
                grow(false);
                path.pop_back();
            }
            give(tip, w);
        }
        if (found) return;
        if (!backward)
            grow(true);
        else
            next_path();
    }
};

std::optional<PathPartition> find_partition_of_size(const Graph& g, int target) {
    TargetSearch s;
    s.n = g.n();
    s.adj.assign(s.n * s.n, 0);
    s.deg.assign(s.n, 0);
    for (auto [u, v] : g.edges()) s.give(u, v);
    s.target = target;
    s.current.reserve(g.m() + 1);  // grow() keeps references into it
    s.next_path();
    if (!s.found) return std::nullopt;
    PathPartition out;
    for (auto& p : *s.found) out.paths.push_back(Path{p});
    return out;
}

// Recover the cyclic vertex order of an all-degree-2 connected graph.
std::vector<int> cycle_order(const Graph& g) {
    std::vector<int> seq;
    int prev = -1, cur = 0;
    do {
        seq.push_back(cur);
        int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
        prev = cur;
        cur = next;
    } while (cur != 0);
    return seq;
}

// The three x-y arcs of a subdivided diamond, as full vertex sequences.
std::vector<std::vector<int>> diamond_arcs(const Graph& g, int x) {
    std::vector<std::vector<int>> arcs;
    for (int s : g.neighbors(x)) {
        std::vector<int> arc{x};
        int prev = x, cur = s;
        while (g.degree(cur) == 2) {
            arc.push_back(cur);
            int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            prev = cur;
            cur = next;
        }
        arc.push_back(cur);
        arcs.push_back(std::move(arc));
    }
    return arcs;
}

Path* find_path_with_endpoint(PathPartition& pp, int v) {
    for (Path& p : pp.paths) {
        if (p.v.back() == v) return &p;
        if (p.v.front() == v) {
            std::reverse(p.v.begin(), p.v.end());
            return &p;
        }
    }
    return nullptr;
}

void ensure(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

PathPartition worker(const Graph& g);

// Translate the partition of a derived graph back into g's indexing.
void absorb(PathPartition& into, const Graph& g, const Graph& sub, const PathPartition& part) {
    for (const Path& p : part.paths) into.paths.push_back(translate(p, sub, g));
}

PathPartition worker(const Graph& g) {
    if (g.m() == 0) return {};

    ComponentKind kind = classify_component(g);
    if (kind == ComponentKind::cycle) {
        auto seq = cycle_order(g);
        int k = static_cast<int>(seq.size());
        int j = k / 2;
        Path p1{std::vector<int>(seq.begin(), seq.begin() + j + 1)};
        Path p2{std::vector<int>(seq.begin() + j, seq.end())};
        p2.v.push_back(seq[0]);
        return PathPartition{{p1, p2}};
    }
    if (kind == ComponentKind::subdivided_diamond) {
        int x = -1;
        for (int v = 0; v < g.n() && x < 0; ++v)
            if (g.degree(v) == 3) x = v;
        auto arcs = diamond_arcs(g, x);
        int split = -1;
        for (int i = 0; i < 3; ++i)
            if (arcs[i].size() > 2) split = i;
        ensure(split >= 0, "subdivided diamond with all arcs trivial");
        std::swap(arcs[split], arcs[1]);
        // P1 runs arc 0 from x to y then one edge back into arc 1;
        // P2 takes the rest of arc 1 plus arc 2.
        const auto& a1 = arcs[1];
        int mid = a1[a1.size() - 2];
        Path p1{arcs[0]};
        p1.v.push_back(mid);
        Path p2{std::vector<int>(a1.rbegin() + 2, a1.rend())};
        p2.v.insert(p2.v.begin(), mid);
        p2.v.insert(p2.v.end(), arcs[2].begin() + 1, arcs[2].end());
        return PathPartition{{p1, p2}};
    }

    StructureReport rep = analyze(g);
    if (!rep.pan_cycles.empty()) {
        const auto& c = rep.pan_cycles.front();
        int x = c[0];
        Graph reduced = reduce_pan_cycle(g, c);
        PathPartition sub = worker(reduced);
        PathPartition out;
        absorb(out, g, reduced, sub);
        Path* p = find_path_with_endpoint(out, x);
        ensure(p != nullptr, "pan anchor is not a path endpoint");
        int t = 1;
        for (size_t i = 2; i < c.size(); ++i)
            if (c[i] < c[t]) t = static_cast<int>(i);
        // forward arc x..c[t] extends p; the other arc becomes a new path
        p->v.insert(p->v.end(), c.begin() + 1, c.begin() + t + 1);
        Path rest{std::vector<int>(c.begin() + t, c.end())};
        rest.v.push_back(x);
        out.paths.push_back(rest);
        return out;
    }

    int v2 = -1;
    for (int v = 0; v < g.n() && v2 < 0; ++v)
        if (g.degree(v) == 2) v2 = v;

    if (v2 < 0) {
        // all degrees odd: the lower bound odd/2 is attainable
        int target = odd_count(g) / 2;
        auto part = find_partition_of_size(g, target);
        ensure(part.has_value(), "no partition of size odd/2 on an all-odd graph");
        return *part;
    }

    int x = g.neighbors(v2)[0], y = g.neighbors(v2)[1];
    if (!g.has_edge(x, y)) {
        // dissolve v2: solve on g - {v2 x, v2 y} + {xy}, then re-expand the edge
        Graph dissolved =
            g.with_edges_removed({{v2, x}, {v2, y}}).with_edges_added({{x, y}});
        Graph stripped = strip_isolated(dissolved);
        PathPartition sub = worker(stripped);
        PathPartition out;
        absorb(out, g, stripped, sub);
        for (Path& p : out.paths) {
            for (size_t i = 0; i + 1 < p.v.size(); ++i) {
                if ((p.v[i] == x && p.v[i + 1] == y) || (p.v[i] == y && p.v[i + 1] == x)) {
                    p.v.insert(p.v.begin() + i + 1, v2);
                    return out;
                }
            }
        }
        throw std::logic_error("dissolved edge not found in any path");
    }

    // triangle v2, x, y with deg(x) = deg(y) = 3
    ensure(g.degree(x) == 3 && g.degree(y) == 3, "triangle corners must have degree 3");
    Graph cut = g.with_edges_removed({{v2, x}, {v2, y}, {x, y}});
    std::vector<Graph> comps;
    for (const Graph& c : components(strip_isolated(cut)))
        comps.push_back(c);

    if (comps.size() == 2) {
        // absorb the triangle between the two sides
        int xi = 0;
        if (!comps[0].find(g.token(x))) xi = 1;
        PathPartition out;
        absorb(out, g, comps[xi], worker(comps[xi]));
        Path* px = find_path_with_endpoint(out, x);
        ensure(px != nullptr, "degree-1 cut vertex not a path endpoint");
        px->v.push_back(v2);
        px->v.push_back(y);
        PathPartition right;
        absorb(right, g, comps[1 - xi], worker(comps[1 - xi]));
        Path* py = find_path_with_endpoint(right, y);
        ensure(py != nullptr, "degree-1 cut vertex not a path endpoint");
        py->v.push_back(x);
        for (Path& p : right.paths) out.paths.push_back(std::move(p));
        return out;
    }

    ensure(comps.size() == 1, "triangle cut produced more than two components");
    const Graph& rest_g = comps[0];
    // any x-y path works here; BFS keeps it deterministic
    int xr = rest_g.index_of(g.token(x)), yr = rest_g.index_of(g.token(y));
    std::vector<int> parent(rest_g.n(), -2);
    std::vector<int> queue{xr};
    parent[xr] = -1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int w : rest_g.neighbors(u))
            if (parent[w] == -2) {
                parent[w] = u;
                queue.push_back(w);
            }
    }
    ensure(parent[yr] != -2, "x and y disconnected in a connected remainder");
    std::vector<int> pathxy;
    for (int u = yr; u != -1; u = parent[u]) pathxy.push_back(u);
    std::reverse(pathxy.begin(), pathxy.end());

    std::vector<std::pair<int, int>> path_edges;
    for (size_t i = 0; i + 1 < pathxy.size(); ++i)
        path_edges.emplace_back(pathxy[i], pathxy[i + 1]);
    Graph rest2 = rest_g.with_edges_removed(path_edges);

    PathPartition out;
    for (const Graph& c : components(strip_isolated(rest2)))
        absorb(out, g, c, worker(c));

    // translate the x-y path into g's indexing
    std::vector<int> P;
    for (int u : pathxy) P.push_back(g.index_of(rest_g.token(u)));

    int w = -1, wi = -1;
    for (size_t i = 1; i + 1 < P.size(); ++i) {
        int u = P[i];
        if (rest_g.degree(rest_g.index_of(g.token(u))) == 3 && (w < 0 || u < w)) {
            w = u;
            wi = static_cast<int>(i);
        }
    }
    ensure(w >= 0, "no degree-3 vertex interior to the chosen x-y path");

    Path* q = find_path_with_endpoint(out, w);
    ensure(q != nullptr, "path interior vertex not an endpoint after cut");
    int z = q->v.front();
    auto zi_it = std::find(P.begin(), P.end(), z);

    if (zi_it == P.end()) {
        // path 1: z ... w, then along P to x, then the edge xy
        Path p1 = *q;
        for (int i = wi - 1; i >= 0; --i) p1.v.push_back(P[i]);
        p1.v.push_back(y);
        // path 2: x v y, then along P back to w
        Path p2{{x, v2}};
        for (int i = static_cast<int>(P.size()) - 1; i >= wi; --i) p2.v.push_back(P[i]);
        *q = p1;
        out.paths.push_back(p2);
        return out;
    }

    int zi = static_cast<int>(zi_it - P.begin());
    if (zi > wi) {
        // mirror so that z lies between x and w
        std::reverse(P.begin(), P.end());
        std::swap(x, y);
        wi = static_cast<int>(P.size()) - 1 - wi;
        zi = static_cast<int>(P.size()) - 1 - zi;
    }
    // path 1: w ... z (reverse of q), then along P to x, then x v y
    Path p1{std::vector<int>(q->v.rbegin(), q->v.rend())};
    for (int i = zi - 1; i >= 0; --i) p1.v.push_back(P[i]);
    p1.v.push_back(v2);
    p1.v.push_back(y);
    // path 2: z ... y along P, then the edge yx
    Path p2{std::vector<int>(P.begin() + zi, P.end())};
    p2.v.push_back(x);
    *q = p1;
    out.paths.push_back(p2);
    return out;
}

}  // namespace

int pn_subcubic(const Graph& g) {
    require_connected_subcubic(g, "pn_subcubic");
    if (g.m() == 0) return 0;
    ComponentKind kind = classify_component(g);
    if (kind == ComponentKind::cycle || kind == ComponentKind::subdivided_diamond) return 2;
    return odd_count(g) / 2 + pan_count(g);
}

Graph reduce_pan_cycle(const Graph& g, const std::vector<int>& c) {
    if (!is_pan_cycle(g, c))
        throw std::invalid_argument("reduce_pan_cycle: not a pan cycle of the graph");
    std::vector<std::pair<int, int>> cycle_edges;
    for (size_t i = 0; i < c.size(); ++i)
        cycle_edges.emplace_back(c[i], c[(i + 1) % c.size()]);
    return strip_isolated(g.with_edges_removed(cycle_edges));
}

PathPartition partition_subcubic(const Graph& g) {
    require_connected_subcubic(g, "partition_subcubic");
    PathPartition out = worker(g);
    if (!verify_partition(g, out) || out.size() != pn_subcubic(g))
        throw std::logic_error("partition_subcubic: constructed witness failed verification");
    return out;
}

}  // namespace pathnum
