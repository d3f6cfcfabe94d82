#include "support.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "pathnum/oracle.hpp"
#include "pathnum/structure.hpp"

namespace pathnum::test {

Graph build(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::string> tokens;
    for (int i = 1; i <= n; ++i) tokens.push_back(std::to_string(i));
    return Graph(tokens, edges);
}

Graph build_tokens(const std::vector<std::string>& tokens,
                   const std::vector<std::pair<std::string, std::string>>& edges) {
    std::vector<std::pair<int, int>> idx;
    auto find = [&](const std::string& t) {
        for (size_t i = 0; i < tokens.size(); ++i)
            if (tokens[i] == t) return static_cast<int>(i);
        throw std::invalid_argument("build_tokens: unknown token " + t);
    };
    for (auto& [a, b] : edges) idx.emplace_back(find(a), find(b));
    return Graph(tokens, idx);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return build(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return build(n, e);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return build(n, e);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return build(leaves + 1, e);
}

Graph wheel_graph(int rim) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < rim; ++i) {
        e.emplace_back(i, (i + 1) % rim);
        e.emplace_back(i, rim);
    }
    return build(rim + 1, e);
}

std::vector<int> normalize_cycle(std::vector<int> cycle) {
    auto mn = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), mn, cycle.end());
    if (cycle.size() > 2 && cycle.back() < cycle[1]) {
        std::reverse(cycle.begin() + 1, cycle.end());
    }
    return cycle;
}

std::vector<std::vector<int>> all_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    std::vector<char> on_path(g.n(), 0);
    std::function<void(int, int)> dfs = [&](int start, int cur) {
        for (int w : g.neighbors(cur)) {
            if (w == start && path.size() >= 3) {
                if (path[1] < path.back()) out.push_back(path);
                continue;
            }
            if (w <= start || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            dfs(start, w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (int s = 0; s < g.n(); ++s) {
        path.assign(1, s);
        dfs(s, s);
    }
    for (auto& c : out) c = normalize_cycle(std::move(c));
    std::sort(out.begin(), out.end());
    return out;
}

bool cycle_has_chord(const Graph& g, const std::vector<int>& cycle) {
    int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i)
        for (int j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;
            if (g.has_edge(cycle[i], cycle[j])) return true;
        }
    return false;
}

namespace {

bool internally_compatible(const std::vector<int>& a, const std::vector<int>& b) {
    auto internal_hits = [](const std::vector<int>& p, const std::vector<int>& q) {
        for (size_t i = 1; i + 1 < q.size(); ++i)
            if (std::find(p.begin(), p.end(), q[i]) != p.end()) return true;
        return false;
    };
    return !internal_hits(a, b) && !internal_hits(b, a);
}

}  // namespace

bool exhaustive_disjoint_paths(const Graph& h, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::vector<int>> chosen;
    std::function<bool(size_t)> route = [&](size_t i) -> bool {
        if (i == pairs.size()) return true;
        auto [s, t] = pairs[i];
        std::vector<int> path{s};
        std::vector<char> used(h.n(), 0);
        used[s] = 1;
        std::function<bool(int)> grow = [&](int cur) -> bool {
            if (cur == t) {
                bool ok = true;
                for (const auto& other : chosen)
                    if (!internally_compatible(other, path)) ok = false;
                if (ok) {
                    chosen.push_back(path);
                    if (route(i + 1)) return true;
                    chosen.pop_back();
                }
                return false;
            }
            for (int w : h.neighbors(cur)) {
                if (used[w]) continue;
                used[w] = 1;
                path.push_back(w);
                if (grow(w)) return true;
                path.pop_back();
                used[w] = 0;
            }
            return false;
        };
        return grow(s);
    };
    return route(0);
}

std::optional<CoveringFamily> random_covering_family(const Graph& g, const std::vector<int>& v4,
                                                     std::uint64_t seed, bool require_bull_free) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> v4edges;
    for (int v : v4)
        for (int w : g.neighbors(v)) {
            std::pair<int, int> e = std::minmax(v, w);
            if (std::find(v4edges.begin(), v4edges.end(), e) == v4edges.end())
                v4edges.push_back(e);
        }

    for (int attempt = 0; attempt < 80; ++attempt) {
        std::set<std::pair<int, int>> used;
        CoveringFamily fam;
        auto covered = [&](const std::pair<int, int>& e) { return used.count(e) > 0; };
        for (;;) {
            auto it = std::find_if(v4edges.begin(), v4edges.end(),
                                   [&](const auto& e) { return !covered(e); });
            if (it == v4edges.end()) break;
            std::vector<int> path{it->first, it->second};
            used.insert(*it);
            for (int dir = 0; dir < 2; ++dir) {
                for (;;) {
                    int tip = dir == 0 ? path.back() : path.front();
                    std::vector<int> options;
                    for (int w : g.neighbors(tip)) {
                        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
                        if (used.count(std::minmax(tip, w))) continue;
                        options.push_back(w);
                    }
                    if (options.empty() || rng() % 3 == 0) break;
                    int w = options[rng() % options.size()];
                    used.insert(std::minmax(tip, w));
                    if (dir == 0) path.push_back(w);
                    else path.insert(path.begin(), w);
                }
            }
            fam.paths.push_back(Path{path});
        }
        if (require_bull_free) {
            bool ok = true;
            for (const Path& p : fam.paths) {
                int a = p.v.front(), b = p.v.back();
                if (g.degree(a) < 4 && g.degree(b) < 4 && is_bull_pair(g, a, b)) ok = false;
            }
            if (!ok) continue;
        }
        return fam;
    }
    return std::nullopt;
}

namespace {

// all well-formed traces over N[V4] and `vars` variable labels
std::vector<Trace> all_traces(const Graph& g, const std::vector<char>& in_v4,
                              const std::vector<char>& in_nv4, int vars) {
    std::vector<int> alphabet;
    for (int v = 0; v < g.n(); ++v)
        if (in_nv4[v]) alphabet.push_back(v);
    for (int x = 0; x < vars; ++x) alphabet.push_back(var_symbol(x));

    std::vector<Trace> out;
    std::vector<int> cur;
    std::function<void()> grow = [&]() {
        if (cur.size() >= 2) {
            bool has_v4 = false;
            for (int s : cur)
                if (!is_var_symbol(s) && in_v4[s]) has_v4 = true;
            if (has_v4) out.push_back(Trace{cur});
        }
        for (int s : alphabet) {
            if (std::find(cur.begin(), cur.end(), s) != cur.end()) continue;
            if (!cur.empty()) {
                int last = cur.back();
                bool lv4 = !is_var_symbol(last) && in_v4[last];
                bool sv4 = !is_var_symbol(s) && in_v4[s];
                if ((lv4 && is_var_symbol(s)) || (sv4 && is_var_symbol(last))) continue;
                if ((lv4 || sv4) && !g.has_edge(last, s)) continue;
            }
            cur.push_back(s);
            grow();
            cur.pop_back();
        }
    };
    grow();
    return out;
}

}  // namespace

long naive_pattern_count(const Graph& g, const std::vector<int>& v4, int lmax) {
    auto in_v4 = v4_mask(g, v4);
    auto in_nv4 = closed_neighborhood_mask(g, v4);
    int outside = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!in_nv4[v]) ++outside;
    int l_cap = std::min({lmax, 16 * high_of(g), outside});

    auto traces = all_traces(g, in_v4, in_nv4, l_cap);
    std::set<std::pair<int, int>> v4_edges;
    for (int v : v4)
        for (int w : g.neighbors(v)) v4_edges.insert(std::minmax(v, w));

    struct TraceInfo {
        std::vector<std::pair<int, int>> edges, ends;
    };
    std::vector<TraceInfo> info;
    for (const Trace& t : traces)
        info.push_back({trace_edges(t, in_v4), trace_ends(t, in_v4)});

    std::set<std::string> classes;
    std::vector<int> picked;
    std::set<std::pair<int, int>> used_edges, used_ends;

    auto emit = [&] {
        Pattern p;
        std::set<int> used_vars;
        for (int idx : picked) {
            p.traces.push_back(traces[idx]);
            for (int s : traces[idx].symbols)
                if (is_var_symbol(s)) used_vars.insert(var_index(s));
        }
        // remap variables onto 0..k-1 preserving label order
        std::vector<int> order(used_vars.begin(), used_vars.end());
        for (Trace& t : p.traces)
            for (int& s : t.symbols)
                if (is_var_symbol(s)) {
                    int pos = static_cast<int>(
                        std::find(order.begin(), order.end(), var_index(s)) - order.begin());
                    s = var_symbol(pos);
                }
        int k = static_cast<int>(order.size());
        std::vector<int> sums(k, 0);
        for (const Trace& t : p.traces)
            for (size_t i = 0; i < t.symbols.size(); ++i)
                if (is_var_symbol(t.symbols[i]))
                    sums[var_index(t.symbols[i])] +=
                        (i == 0 || i + 1 == t.symbols.size()) ? 1 : 2;
        std::function<void(int)> choose_d = [&](int i) {
            if (i == k) {
                if (pattern_valid(g, v4, p)) classes.insert(canonical_key(p));
                return;
            }
            for (int dv = std::max(1, sums[i]); dv <= 3; ++dv) {
                p.d.push_back(dv);
                choose_d(i + 1);
                p.d.pop_back();
            }
        };
        p.d.clear();
        choose_d(0);
    };

    // every trace consumes at least one V4 edge, so patterns complete exactly
    // when the coverage does
    std::function<void(size_t)> visit = [&](size_t from) {
        if (used_edges == v4_edges) {
            emit();
            return;
        }
        for (size_t i = from; i < traces.size(); ++i) {
            bool ok = true;
            for (auto e : info[i].edges)
                if (used_edges.count(e)) ok = false;
            for (auto e : info[i].ends)
                if (used_ends.count(e)) ok = false;
            if (!ok) continue;
            for (auto e : info[i].edges) used_edges.insert(e);
            for (auto e : info[i].ends) used_ends.insert(e);
            picked.push_back(static_cast<int>(i));
            visit(i + 1);
            picked.pop_back();
            for (auto e : info[i].edges) used_edges.erase(e);
            for (auto e : info[i].ends) used_ends.erase(e);
        }
    };
    visit(0);
    return static_cast<long>(classes.size());
}

bool patterns_equivalent(const Pattern& a, const Pattern& b) {
    if (a.traces.size() != b.traces.size() || a.ell() != b.ell()) return false;
    std::vector<int> perm(a.ell());
    for (int i = 0; i < a.ell(); ++i) perm[i] = i;
    auto normalized = [](const Pattern& p, const std::vector<int>& var_map) {
        std::vector<std::vector<int>> traces;
        for (const Trace& t : p.traces) {
            std::vector<int> s = t.symbols;
            for (int& sym : s)
                if (is_var_symbol(sym)) sym = var_symbol(var_map[var_index(sym)]);
            std::vector<int> r(s.rbegin(), s.rend());
            traces.push_back(std::min(s, r));
        }
        std::sort(traces.begin(), traces.end());
        return traces;
    };
    std::vector<int> identity(b.ell());
    for (int i = 0; i < b.ell(); ++i) identity[i] = i;
    auto target = normalized(b, identity);
    do {
        bool d_match = true;
        for (int i = 0; i < a.ell(); ++i)
            if (a.d[i] != b.d[perm[i]]) d_match = false;
        if (d_match && normalized(a, perm) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

void for_each_connected(int n, int max_degree, const std::function<bool(const Graph&)>& cb) {
    enumerate_graphs(n, max_degree, [&](const Graph& g) {
        if (components(g).size() != 1) return true;
        return cb(g);
    });
}

}  // namespace pathnum::test
