#include "pathnum/feasibility.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "pathnum/structure.hpp"

namespace pathnum {

namespace {

// Backtracking router. A vertex may be internal to at most one path and, if
// internal anywhere, may not appear on any other path; terminals of any pair
// are therefore never usable as internal vertices.
struct Router {
    const Graph& h;
    std::vector<std::pair<int, int>> pairs;
    std::vector<char> is_terminal;
    std::vector<char> internal_used;
    std::vector<std::vector<int>> routed;

    bool route(size_t i) {
        if (i == pairs.size()) return true;
        auto [s, t] = pairs[i];
        std::vector<int> path{s};
        std::vector<char> on_path(h.n(), 0);
        on_path[s] = 1;
        return walk(i, s, t, path, on_path);
    }

    bool walk(size_t i, int cur, int t, std::vector<int>& path, std::vector<char>& on_path) {
        for (int w : h.neighbors(cur)) {
            if (w == t) {
                path.push_back(t);
                routed.push_back(path);
                for (size_t j = 1; j + 1 < path.size(); ++j) internal_used[path[j]] = 1;
                if (route(i + 1)) return true;
                for (size_t j = 1; j + 1 < path.size(); ++j) internal_used[path[j]] = 0;
                routed.pop_back();
                path.pop_back();
                continue;
            }
            if (on_path[w] || is_terminal[w] || internal_used[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            if (walk(i, w, t, path, on_path)) return true;
            path.pop_back();
            on_path[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<Path>> disjoint_paths(const Graph& h,
                                                const std::vector<std::pair<int, int>>& pairs) {
    for (auto [s, t] : pairs) {
        if (s < 0 || s >= h.n() || t < 0 || t >= h.n())
            throw std::invalid_argument("disjoint_paths: unknown terminal");
        if (s == t)
            throw std::invalid_argument("disjoint_paths: a pair with equal endpoints");
    }
    Router r{h, pairs, std::vector<char>(h.n(), 0), std::vector<char>(h.n(), 0), {}};
    for (auto [s, t] : pairs) r.is_terminal[s] = r.is_terminal[t] = 1;
    if (!r.route(0)) return std::nullopt;
    std::vector<Path> out;
    for (auto& p : r.routed) out.push_back(Path{std::move(p)});
    return out;
}

namespace {

struct FeasibilitySearch {
    const Graph& g;
    const std::vector<int>& v4;
    const Pattern& p;
    std::vector<char> in_v4, in_nv4;

    Graph h;                  // g - V4
    std::vector<int> h_to_g;  // index maps via tokens
    std::vector<int> g_to_h;

    std::vector<std::pair<int, int>> sym_pairs;                // ends pairs over symbols
    std::vector<std::pair<int, int>> endpoint_syms;            // per trace
    std::vector<std::vector<int>> candidates;                  // per variable
    std::vector<int> assignment;                               // variable -> g vertex
    std::vector<char> taken;                                   // g vertex used by a variable

    std::optional<FeasibilityWitness> result;

    explicit FeasibilitySearch(const Graph& graph, const std::vector<int>& v4_,
                               const Pattern& pat)
        : g(graph), v4(v4_), p(pat) {}

    int fmap(int sym) const {
        return is_var_symbol(sym) ? assignment[var_index(sym)] : sym;
    }

    void assign(size_t i) {
        if (result) return;
        if (i == assignment.size()) {
            try_routing();
            return;
        }
        for (int v : candidates[i]) {
            if (taken[v]) continue;
            taken[v] = 1;
            assignment[i] = v;
            assign(i + 1);
            taken[v] = 0;
            if (result) return;
        }
    }

    void try_routing() {
        for (auto [a, b] : endpoint_syms) {
            int fa = fmap(a), fb = fmap(b);
            if (in_v4[fa] || in_v4[fb]) continue;
            if (is_bull_pair(g, fa, fb)) return;
        }
        std::vector<std::pair<int, int>> hpairs;
        for (auto [a, b] : sym_pairs) hpairs.emplace_back(g_to_h[fmap(a)], g_to_h[fmap(b)]);
        // route tighter pairs first
        std::vector<size_t> order(hpairs.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            auto width = [&](size_t i) {
                return std::min(h.degree(hpairs[i].first), h.degree(hpairs[i].second));
            };
            return width(a) < width(b);
        });
        std::vector<std::pair<int, int>> ordered;
        for (size_t i : order) ordered.push_back(hpairs[i]);
        auto paths = disjoint_paths(h, ordered);
        if (!paths) return;

        FeasibilityWitness w;
        w.assignment = assignment;
        for (size_t k = 0; k < order.size(); ++k) {
            Path in_g;
            for (int v : (*paths)[k].v) in_g.v.push_back(h_to_g[v]);
            w.connecting.emplace_back(sym_pairs[order[k]], std::move(in_g));
        }
        result = std::move(w);
    }
};

}  // namespace

std::optional<FeasibilityWitness> check_feasible(const Graph& g, const std::vector<int>& v4,
                                                 const Pattern& p) {
    if (!pattern_valid(g, v4, p))
        throw std::invalid_argument("check_feasible: invalid pattern");

    FeasibilitySearch s(g, v4, p);
    s.in_v4 = v4_mask(g, v4);
    s.in_nv4 = closed_neighborhood_mask(g, v4);

    std::vector<char> keep(g.n(), 1);
    for (int v : v4) keep[v] = 0;
    s.h = g.induced(keep);
    s.h_to_g.assign(s.h.n(), -1);
    s.g_to_h.assign(g.n(), -1);
    for (int v = 0; v < s.h.n(); ++v) {
        int orig = g.index_of(s.h.token(v));
        s.h_to_g[v] = orig;
        s.g_to_h[orig] = v;
    }

    for (const Trace& t : p.traces) {
        for (auto e : trace_ends(t, s.in_v4)) s.sym_pairs.push_back(e);
        s.endpoint_syms.emplace_back(t.symbols.front(), t.symbols.back());
    }

    s.candidates.resize(p.ell());
    for (int i = 0; i < p.ell(); ++i)
        for (int v = 0; v < g.n(); ++v)
            if (!s.in_nv4[v] && g.degree(v) == p.d[i]) s.candidates[i].push_back(v);

    s.assignment.assign(p.ell(), -1);
    s.taken.assign(g.n(), 0);
    s.assign(0);
    return s.result;
}

CoveringFamily realize_family(const Graph& g, const std::vector<int>& v4, const Pattern& p,
                              const FeasibilityWitness& w) {
    if (!pattern_valid(g, v4, p))
        throw std::invalid_argument("realize_family: invalid pattern");
    auto in_v4 = v4_mask(g, v4);
    auto in_nv4 = closed_neighborhood_mask(g, v4);

    if (static_cast<int>(w.assignment.size()) != p.ell())
        throw std::invalid_argument("realize_family: assignment size mismatch");
    std::set<int> images;
    for (int i = 0; i < p.ell(); ++i) {
        int v = w.assignment[i];
        if (v < 0 || v >= g.n() || in_nv4[v] || g.degree(v) != p.d[i] ||
            !images.insert(v).second)
            throw std::invalid_argument("realize_family: bad variable assignment");
    }
    auto fmap = [&](int sym) {
        return is_var_symbol(sym) ? w.assignment[var_index(sym)] : sym;
    };

    std::map<std::pair<int, int>, const Path*> connect;
    for (const auto& [sympair, path] : w.connecting) {
        if (path.v.size() < 2 || !is_simple_path(g, path))
            throw std::invalid_argument("realize_family: connecting entry is not a path");
        for (int v : path.v)
            if (in_v4[v])
                throw std::invalid_argument("realize_family: connecting path meets V4");
        connect[sympair] = &path;
    }

    CoveringFamily out;
    for (const Trace& t : p.traces) {
        Path walk;
        walk.v.push_back(fmap(t.symbols.front()));
        for (size_t i = 0; i + 1 < t.symbols.size(); ++i) {
            int a = t.symbols[i], b = t.symbols[i + 1];
            int fa = fmap(a), fb = fmap(b);
            bool edge_pair = (!is_var_symbol(a) && in_v4[a]) || (!is_var_symbol(b) && in_v4[b]);
            if (edge_pair) {
                walk.v.push_back(fb);
                continue;
            }
            auto it = connect.find(std::minmax(a, b));
            if (it == connect.end())
                throw std::invalid_argument("realize_family: missing connecting path");
            std::vector<int> seg = it->second->v;
            if (seg.front() == fb && seg.back() == fa) std::reverse(seg.begin(), seg.end());
            if (seg.front() != fa || seg.back() != fb)
                throw std::invalid_argument("realize_family: connecting path endpoints mismatch");
            walk.v.insert(walk.v.end(), seg.begin() + 1, seg.end());
        }
        if (!is_simple_path(g, walk))
            throw std::logic_error("realize_family: trace realization is not a simple path");
        out.paths.push_back(std::move(walk));
    }

    if (!is_covering_family(g, v4, out))
        throw std::logic_error("realize_family: result is not a covering family");
    for (const Path& path : out.paths)
        if (!in_v4[path.v.front()] && !in_v4[path.v.back()] &&
            is_bull_pair(g, path.v.front(), path.v.back()))
            throw std::logic_error("realize_family: realized path is not bull-free");
    return out;
}

}  // namespace pathnum
