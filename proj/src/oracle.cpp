#include "pathnum/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace pathnum {

namespace {

// Search state for brute_pn on one connected piece: an adjacency matrix of
// still-uncovered edges. Paths are committed one at a time, each starting at
// the smallest uncovered edge, growing first forward then backward.
struct BruteSearch {
    int n;
    std::vector<char> adj;  // n*n
    std::vector<int> deg;
    int edges_left = 0;
    int best;

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

    // Sum over remaining components with edges of max(1, odd/2).
    int lower_bound() const {
        std::vector<int> comp(n, -1);
        int bound = 0;
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1 || deg[s] == 0) continue;
            int odd = 0;
            std::vector<int> stack{s};
            comp[s] = s;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                if (deg[u] % 2) ++odd;
                for (int w = 0; w < n; ++w)
                    if (has(u, w) && comp[w] == -1) {
                        comp[w] = s;
                        stack.push_back(w);
                    }
            }
            bound += std::max(1, odd / 2);
        }
        return bound;
    }

    void commit_path(int count, std::vector<char>& on_path, int head, int tail, bool backward);

    void next_path(int count) {
        if (edges_left == 0) {
            best = std::min(best, count);
            return;
        }
        if (count + lower_bound() >= best) return;
        int u = -1, v = -1;
        for (int a = 0; a < n && u < 0; ++a)
            for (int b = a + 1; b < n; ++b)
                if (has(a, b)) {
                    u = a;
                    v = b;
                    break;
                }
        std::vector<char> on_path(n, 0);
        on_path[u] = on_path[v] = 1;
        take(u, v);
        commit_path(count, on_path, u, v, false);
        give(u, v);
    }
};

void BruteSearch::commit_path(int count, std::vector<char>& on_path, int head, int tail,
                              bool backward) {
    int grow = backward ? head : tail;
    for (int w = 0; w < n; ++w) {
        if (!has(grow, w) || on_path[w]) continue;
        on_path[w] = 1;
        take(grow, w);
        if (backward)
            commit_path(count, on_path, w, tail, true);
        else
            commit_path(count, on_path, head, w, false);
        give(grow, w);
        on_path[w] = 0;
    }
    if (!backward)
        commit_path(count, on_path, head, tail, true);  // stop growing forward
    else
        next_path(count + 1);  // path complete
}

int brute_pn_connected(const Graph& g) {
    if (g.m() == 0) return 0;
    BruteSearch s;
    s.n = g.n();
    s.adj.assign(s.n * s.n, 0);
    s.deg.assign(s.n, 0);
    for (auto [u, v] : g.edges()) s.give(u, v);
    s.best = g.m();  // one path per edge always works
    s.next_path(0);
    return s.best;
}

}  // namespace

int brute_pn(const Graph& g, int edge_cap) {
    if (g.m() > edge_cap)
        throw std::invalid_argument("brute_pn: graph exceeds edge cap of " +
                                    std::to_string(edge_cap));
    int total = 0;
    for (const Graph& c : components(g)) total += brute_pn_connected(c);
    return total;
}

namespace {

bool subcubic_after(const Graph& g, const std::vector<std::pair<int, int>>& candidates,
                    const std::vector<int>& chosen) {
    std::vector<int> deg(g.n());
    for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
    for (int i : chosen) {
        --deg[candidates[i].first];
        --deg[candidates[i].second];
    }
    for (int v = 0; v < g.n(); ++v)
        if (deg[v] > 3) return false;
    return true;
}

bool choose_subset(const Graph& g, const std::vector<std::pair<int, int>>& candidates,
                   std::vector<int>& chosen, int start, int remaining) {
    if (remaining == 0) return subcubic_after(g, candidates, chosen);
    for (int i = start; i + remaining <= static_cast<int>(candidates.size()); ++i) {
        chosen.push_back(i);
        if (choose_subset(g, candidates, chosen, i + 1, remaining - 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

int sen_bruteforce(const Graph& g, int edge_cap) {
    if (g.m() > edge_cap)
        throw std::invalid_argument("sen_bruteforce: graph exceeds edge cap of " +
                                    std::to_string(edge_cap));
    std::vector<std::pair<int, int>> candidates;
    for (auto [u, v] : g.edges())
        if (g.degree(u) >= 4 || g.degree(v) >= 4) candidates.emplace_back(u, v);
    for (int s = 0;; ++s) {
        std::vector<int> chosen;
        if (choose_subset(g, candidates, chosen, 0, s)) return s;
    }
}

namespace {

std::vector<std::string> numbered_tokens(int n) {
    std::vector<std::string> t;
    t.reserve(n);
    for (int i = 1; i <= n; ++i) t.push_back(std::to_string(i));
    return t;
}

// All raw randomness goes through rng() directly so generated instances are
// identical across standard libraries.
std::uint64_t rnd(std::mt19937_64& rng, std::uint64_t k) { return rng() % k; }

std::vector<std::pair<int, int>> shuffled_pairs(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (int i = static_cast<int>(pairs.size()) - 1; i > 0; --i)
        std::swap(pairs[i], pairs[rnd(rng, i + 1)]);
    return pairs;
}

Graph gen_gnm(const GenParams& p) {
    if (p.n < 1 || p.m < 0 || p.m > p.n * (p.n - 1) / 2)
        throw std::invalid_argument("random_gnm: need 1 <= n and 0 <= m <= n(n-1)/2");
    std::mt19937_64 rng(p.seed);
    auto pairs = shuffled_pairs(p.n, rng);
    pairs.resize(p.m);
    return Graph(numbered_tokens(p.n), pairs);
}

Graph gen_near_subcubic(const GenParams& p) {
    if (p.n < 1 || p.extra < 0)
        throw std::invalid_argument("random_near_subcubic: need n >= 1, extra >= 0");
    std::mt19937_64 rng(p.seed);
    auto pairs = shuffled_pairs(p.n, rng);
    std::vector<int> deg(p.n, 0);
    std::vector<char> used(pairs.size(), 0);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [u, v] = pairs[i];
        if (deg[u] < 3 && deg[v] < 3 && rnd(rng, 4) != 0) {
            edges.push_back(pairs[i]);
            used[i] = 1;
            ++deg[u];
            ++deg[v];
        }
    }
    int added = 0;
    for (size_t i = 0; i < pairs.size() && added < p.extra; ++i) {
        if (used[i]) continue;
        edges.push_back(pairs[i]);
        used[i] = 1;
        ++added;
    }
    if (added < p.extra)
        throw std::invalid_argument("random_near_subcubic: not enough vertex pairs for extra");
    return Graph(numbered_tokens(p.n), edges);
}

Graph gen_wheel(const GenParams& p) {
    if (p.n < 4) throw std::invalid_argument("wheel: need n >= 4");
    int rim = p.n - 1, hub = p.n - 1;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < rim; ++i) {
        edges.emplace_back(i, (i + 1) % rim);
        edges.emplace_back(i, hub);
    }
    return Graph(numbered_tokens(p.n), edges);
}

Graph gen_star(const GenParams& p) {
    if (p.n < 1) throw std::invalid_argument("star: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < p.n; ++i) edges.emplace_back(0, i);
    return Graph(numbered_tokens(p.n), edges);
}

Graph gen_complete(const GenParams& p) {
    if (p.n < 1) throw std::invalid_argument("complete: need n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < p.n; ++u)
        for (int v = u + 1; v < p.n; ++v) edges.emplace_back(u, v);
    return Graph(numbered_tokens(p.n), edges);
}

// Star core (center degree >= 4) with `count` cycles attached at distinct
// leaves; each attachment vertex ends at degree 3, so each cycle is a pan cycle.
Graph gen_pan_gadget(const GenParams& p) {
    if (p.count < 1) throw std::invalid_argument("pan_gadget: need count >= 1");
    std::mt19937_64 rng(p.seed);
    int leaves = std::max(4, p.count);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    int next = leaves + 1;
    for (int i = 0; i < p.count; ++i) {
        int anchor = 1 + i;
        int len = 3 + static_cast<int>(rnd(rng, 3));  // cycle length 3..5
        int prev = anchor;
        for (int j = 0; j < len - 1; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, anchor);
    }
    return Graph(numbered_tokens(next), edges);
}

// Star core with `count` bull cycles, each across a pair of leaves: the direct
// leaf-leaf edge plus a chain of 1..3 interior vertices closes the cycle.
Graph gen_bull_gadget(const GenParams& p) {
    if (p.count < 1) throw std::invalid_argument("bull_gadget: need count >= 1");
    std::mt19937_64 rng(p.seed);
    int leaves = std::max(4, 2 * p.count);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    int next = leaves + 1;
    for (int i = 0; i < p.count; ++i) {
        int a = 1 + 2 * i, b = 2 + 2 * i;
        edges.emplace_back(a, b);
        int interior = 1 + static_cast<int>(rnd(rng, 3));
        int prev = a;
        for (int j = 0; j < interior; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, b);
    }
    return Graph(numbered_tokens(next), edges);
}

}  // namespace

Graph gen(const std::string& family, const GenParams& params) {
    if (family == "random_gnm") return gen_gnm(params);
    if (family == "random_near_subcubic") return gen_near_subcubic(params);
    if (family == "wheel") return gen_wheel(params);
    if (family == "star") return gen_star(params);
    if (family == "pan_gadget") return gen_pan_gadget(params);
    if (family == "bull_gadget") return gen_bull_gadget(params);
    if (family == "complete") return gen_complete(params);
    throw std::invalid_argument("unknown family: " + family);
}

namespace {

// Lexicographically minimal upper-triangle adjacency encoding over all vertex
// orderings, with prefix pruning. Exponential in principle; used on small
// connected graphs only.
struct MinEncoding {
    int k;
    std::vector<char> adj;  // k*k
    std::vector<char> best;
    std::vector<char> cur;
    std::vector<int> perm;
    std::vector<char> taken;

    // Prefix ordering against the best complete encoding so far; ties are
    // explored, strictly worse prefixes pruned.
    void dfs(int pos) {
        if (pos == k) {
            if (cur < best) best = cur;
            return;
        }
        int offset = pos * (pos - 1) / 2;
        for (int v = 0; v < k; ++v) {
            if (taken[v]) continue;
            for (int i = 0; i < pos; ++i) cur[offset + i] = adj[perm[i] * k + v];
            bool worse = false;
            for (int i = 0; i < offset + pos; ++i) {
                if (cur[i] != best[i]) {
                    worse = cur[i] > best[i];
                    break;
                }
            }
            if (worse) continue;
            taken[v] = 1;
            perm[pos] = v;
            dfs(pos + 1);
            taken[v] = 0;
        }
    }

    std::string run() {
        int bits = k * (k - 1) / 2;
        best.assign(bits, 1);
        cur.assign(bits, 0);
        perm.assign(k, -1);
        taken.assign(k, 0);
        dfs(0);
        std::string s = std::to_string(k) + ":";
        for (char b : best) s += static_cast<char>('0' + b);
        return s;
    }
};

}  // namespace

std::string canonical_certificate(const Graph& g) {
    int isolated = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 0) ++isolated;
    std::vector<std::string> parts;
    for (const Graph& c : components(strip_isolated(g))) {
        if (c.n() > 12)
            throw std::invalid_argument("canonical_certificate: component too large");
        MinEncoding enc;
        enc.k = c.n();
        enc.adj.assign(c.n() * c.n(), 0);
        for (auto [u, v] : c.edges()) enc.adj[u * c.n() + v] = enc.adj[v * c.n() + u] = 1;
        parts.push_back(enc.run());
    }
    std::sort(parts.begin(), parts.end());
    std::string out = "i" + std::to_string(isolated);
    for (const auto& p : parts) out += "|" + p;
    return out;
}

void enumerate_graphs(int n, int max_degree, const std::function<bool(const Graph&)>& cb) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: n < 0");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    auto tokens = numbered_tokens(n);

    std::vector<std::vector<char>> level{std::vector<char>(pairs.size(), 0)};
    if (!cb(Graph(tokens, {}))) return;
    while (!level.empty()) {
        std::vector<std::vector<char>> next;
        std::set<std::string> seen;
        for (const auto& mask : level) {
            std::vector<int> deg(n, 0);
            std::vector<std::pair<int, int>> edges;
            for (size_t i = 0; i < pairs.size(); ++i)
                if (mask[i]) {
                    edges.push_back(pairs[i]);
                    ++deg[pairs[i].first];
                    ++deg[pairs[i].second];
                }
            for (size_t i = 0; i < pairs.size(); ++i) {
                if (mask[i]) continue;
                auto [u, v] = pairs[i];
                if (max_degree >= 0 && (deg[u] + 1 > max_degree || deg[v] + 1 > max_degree))
                    continue;
                auto grown = edges;
                grown.push_back(pairs[i]);
                Graph h(tokens, grown);
                if (!seen.insert(canonical_certificate(h)).second) continue;
                if (!cb(h)) return;
                auto mask2 = mask;
                mask2[i] = 1;
                next.push_back(std::move(mask2));
            }
        }
        level = std::move(next);
    }
}

}  // namespace pathnum
