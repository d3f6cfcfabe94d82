#include "pathnum/pattern.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "pathnum/structure.hpp"

namespace pathnum {

namespace {

bool pair_has_v4(int a, int b, const std::vector<char>& in_v4) {
    return (!is_var_symbol(a) && in_v4[a]) || (!is_var_symbol(b) && in_v4[b]);
}

std::pair<int, int> norm_pair(int a, int b) { return std::minmax(a, b); }

}  // namespace

std::vector<std::pair<int, int>> trace_edges(const Trace& t, const std::vector<char>& in_v4) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i + 1 < t.symbols.size(); ++i)
        if (pair_has_v4(t.symbols[i], t.symbols[i + 1], in_v4))
            out.push_back(norm_pair(t.symbols[i], t.symbols[i + 1]));
    return out;
}

std::vector<std::pair<int, int>> trace_ends(const Trace& t, const std::vector<char>& in_v4) {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i + 1 < t.symbols.size(); ++i)
        if (!pair_has_v4(t.symbols[i], t.symbols[i + 1], in_v4))
            out.push_back(norm_pair(t.symbols[i], t.symbols[i + 1]));
    return out;
}

int trace_deg(const Trace& t, int symbol) {
    if (t.symbols.empty()) return 0;
    if (t.symbols.front() == symbol || t.symbols.back() == symbol) return 1;
    for (size_t i = 1; i + 1 < t.symbols.size(); ++i)
        if (t.symbols[i] == symbol) return 2;
    return 0;
}

std::vector<char> v4_mask(const Graph& g, const std::vector<int>& v4) {
    std::vector<char> mask(g.n(), 0);
    for (int v : v4) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("v4 vertex out of range");
        mask[v] = 1;
    }
    return mask;
}

std::vector<char> closed_neighborhood_mask(const Graph& g, const std::vector<int>& v4) {
    std::vector<char> mask = v4_mask(g, v4);
    for (int v : v4)
        for (int w : g.neighbors(v)) mask[w] = 1;
    return mask;
}

bool is_covering_family(const Graph& g, const std::vector<int>& v4, const CoveringFamily& q) {
    std::set<std::pair<int, int>> used;
    for (const Path& p : q.paths) {
        if (p.v.size() < 2 || !is_simple_path(g, p)) return false;
        for (auto e : p.edge_set())
            if (!used.insert(e).second) return false;
    }
    for (int v : v4)
        for (int w : g.neighbors(v))
            if (!used.count(norm_pair(v, w))) return false;
    return true;
}

bool pattern_valid(const Graph& g, const std::vector<int>& v4, const Pattern& p) {
    auto in_v4 = v4_mask(g, v4);
    auto in_nv4 = closed_neighborhood_mask(g, v4);
    int ell = p.ell();
    for (int dv : p.d)
        if (dv < 1 || dv > 3) return false;

    for (const Trace& t : p.traces) {
        std::set<int> seen;
        for (int s : t.symbols) {
            if (is_var_symbol(s)) {
                if (var_index(s) < 0 || var_index(s) >= ell) return false;
            } else {
                if (s < 0 || s >= g.n() || !in_nv4[s]) return false;
            }
            if (!seen.insert(s).second) return false;
        }
        for (size_t i = 0; i + 1 < t.symbols.size(); ++i) {
            int a = t.symbols[i], b = t.symbols[i + 1];
            bool av4 = !is_var_symbol(a) && in_v4[a];
            bool bv4 = !is_var_symbol(b) && in_v4[b];
            if ((av4 && is_var_symbol(b)) || (bv4 && is_var_symbol(a))) return false;
            if ((av4 || bv4) && !g.has_edge(a, b)) return false;
        }
    }

    // conditions 1 and 2: ends and edges pairwise disjoint across traces
    std::set<std::pair<int, int>> all_ends, all_edges;
    for (const Trace& t : p.traces) {
        for (auto e : trace_ends(t, in_v4))
            if (!all_ends.insert(e).second) return false;
        for (auto e : trace_edges(t, in_v4))
            if (!all_edges.insert(e).second) return false;
    }

    // condition 3: edges(T) equals the set of edges incident to V4
    std::set<std::pair<int, int>> v4_edges;
    for (int v : v4)
        for (int w : g.neighbors(v)) v4_edges.insert(norm_pair(v, w));
    if (all_edges != v4_edges) return false;

    // conditions 4 and 5: degree budgets
    std::vector<int> sum_var(ell, 0), sum_real(g.n(), 0);
    for (const Trace& t : p.traces) {
        for (size_t i = 0; i < t.symbols.size(); ++i) {
            int s = t.symbols[i];
            int deg = (i == 0 || i + 1 == t.symbols.size()) ? 1 : 2;
            if (is_var_symbol(s)) sum_var[var_index(s)] += deg;
            else sum_real[s] += deg;
        }
    }
    for (int i = 0; i < ell; ++i)
        if (sum_var[i] > p.d[i]) return false;
    for (int v = 0; v < g.n(); ++v)
        if (in_nv4[v] && !in_v4[v] && sum_real[v] > g.degree(v)) return false;
    return true;
}

int odd_number(const Graph& g, const std::vector<int>& v4, const Pattern& p) {
    if (!pattern_valid(g, v4, p)) throw std::invalid_argument("odd_number: invalid pattern");
    std::vector<int> sum_var(p.ell(), 0), sum_real(g.n(), 0);
    for (const Trace& t : p.traces) {
        for (size_t i = 0; i < t.symbols.size(); ++i) {
            int s = t.symbols[i];
            int deg = (i == 0 || i + 1 == t.symbols.size()) ? 1 : 2;
            if (is_var_symbol(s)) sum_var[var_index(s)] += deg;
            else sum_real[s] += deg;
        }
    }
    int result = 0;
    auto account = [&](int base_degree, int pattern_degree) {
        if (pattern_degree % 2 == 0) return;
        result += (base_degree % 2 == 0) ? 1 : -1;
    };
    for (int v = 0; v < g.n(); ++v)
        if (sum_real[v] > 0) account(g.degree(v), sum_real[v]);
    for (int i = 0; i < p.ell(); ++i) account(p.d[i], sum_var[i]);
    return result;
}

Pattern encode(const Graph& g, const std::vector<int>& v4, const CoveringFamily& q) {
    if (!is_covering_family(g, v4, q))
        throw std::invalid_argument("encode: not a covering family");
    auto in_nv4 = closed_neighborhood_mask(g, v4);

    std::vector<char> u0 = in_nv4;
    for (const Path& p : q.paths) {
        u0[p.v.front()] = 1;
        u0[p.v.back()] = 1;
    }
    std::vector<char> u = u0;
    for (int v = 0; v < g.n(); ++v)
        if (u0[v])
            for (int w : g.neighbors(v)) u[w] = 1;

    std::vector<std::vector<int>> oriented;
    for (const Path& p : q.paths) {
        std::vector<int> seq = p.v;
        if (seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
        oriented.push_back(std::move(seq));
    }
    std::sort(oriented.begin(), oriented.end());

    Pattern out;
    std::map<int, int> var_of;  // outside vertex -> variable
    for (const auto& seq : oriented) {
        Trace t;
        for (int v : seq) {
            if (in_nv4[v]) {
                t.symbols.push_back(v);
            } else if (u[v]) {
                auto it = var_of.find(v);
                if (it == var_of.end())
                    it = var_of.emplace(v, static_cast<int>(var_of.size())).first;
                t.symbols.push_back(var_symbol(it->second));
            }
        }
        out.traces.push_back(std::move(t));
    }
    out.d.assign(var_of.size(), 0);
    for (auto [vertex, var] : var_of) out.d[var] = g.degree(vertex);

    if (out.ell() > 16 * high_of(g))
        throw std::logic_error("encode: variable count exceeds the 16*high bound");
    if (!pattern_valid(g, v4, out))
        throw std::logic_error("encode: produced an invalid pattern");
    return out;
}

namespace {

// Serialization for canonical keys: fixed text form per symbol, variables
// renumbered by first appearance along the chosen trace order/orientIf.
struct KeyState {
    std::map<int, int> var_map;  // original var -> canonical var
    int next_var = 0;
};

std::string serialize_trace(const std::vector<int>& symbols, bool reversed, KeyState& ks) {
    std::string s;
    int k = static_cast<int>(symbols.size());
    for (int i = 0; i < k; ++i) {
        int sym = symbols[reversed ? k - 1 - i : i];
        if (is_var_symbol(sym)) {
            auto it = ks.var_map.find(var_index(sym));
            if (it == ks.var_map.end())
                it = ks.var_map.emplace(var_index(sym), ks.next_var++).first;
            s += "x" + std::to_string(it->second);
        } else {
            s += "v" + std::to_string(sym);
        }
        s += ",";
    }
    return s;
}

struct KeySearch {
    const Pattern& p;
    std::string best;

    void rec(std::vector<char>& used, const KeyState& ks, const std::string& prefix) {
        if (!best.empty() && prefix > best) return;
        size_t t = p.traces.size();
        bool done = true;
        struct Cand {
            std::string text;
            size_t idx;
            bool rev;
        };
        std::vector<Cand> cands;
        for (size_t i = 0; i < t; ++i) {
            if (used[i]) continue;
            done = false;
            for (bool rev : {false, true}) {
                KeyState tmp = ks;
                cands.push_back({serialize_trace(p.traces[i].symbols, rev, tmp), i, rev});
            }
        }
        if (done) {
            std::string full = prefix + "#d:";
            std::vector<int> inv(ks.next_var, -1);
            for (auto [orig, canon] : ks.var_map) inv[canon] = orig;
            for (int canon = 0; canon < ks.next_var; ++canon)
                full += std::to_string(p.d[inv[canon]]) + ",";
            // variables absent from every trace (permitted but never produced
            // here) are appended in sorted order
            std::vector<int> rest;
            for (int i = 0; i < p.ell(); ++i)
                if (!ks.var_map.count(i)) rest.push_back(p.d[i]);
            std::sort(rest.begin(), rest.end());
            for (int dv : rest) full += "u" + std::to_string(dv);
            if (best.empty() || full < best) best = full;
            return;
        }
        std::string min_text;
        for (const Cand& c : cands)
            if (min_text.empty() || c.text < min_text) min_text = c.text;
        std::set<std::pair<size_t, bool>> tried;
        for (const Cand& c : cands) {
            if (c.text != min_text) continue;
            if (!tried.insert({c.idx, c.rev}).second) continue;
            KeyState ks2 = ks;
            std::string text = serialize_trace(p.traces[c.idx].symbols, c.rev, ks2);
            used[c.idx] = 1;
            rec(used, ks2, prefix + text + ";");
            used[c.idx] = 0;
        }
    }
};

}  // namespace

std::string canonical_key(const Pattern& p) {
    KeySearch search{p, {}};
    std::vector<char> used(p.traces.size(), 0);
    KeyState ks;
    search.rec(used, ks, "");
    return search.best;
}

namespace {

// Exact-size pattern enumeration: builds the traces of a pattern with exactly
// `t_target` traces and `l_target` variables, depth-first with incremental
// checks of the pattern conditions. Traces are kept sorted and oriented so
// that most duplicates never arise; a canonical-key set removes the rest.
struct Enumerator {
    const Graph& g;
    std::vector<char> in_v4, in_nv4;
    std::vector<int> symbols_real;  // N[V4] members, ascending
    int t_target = 0, l_target = 0;

    std::map<std::pair<int, int>, int> edge_id;
    int m4 = 0;
    std::vector<char> edge_used;
    int edges_covered = 0;

    std::vector<int> budget;    // per real vertex
    std::vector<int> sum_real;  // per real vertex
    std::vector<int> sum_var;
    int vars_used = 0;
    std::set<std::pair<int, int>> ends_used;

    std::vector<std::vector<int>> done;
    std::vector<int> cur;
    std::vector<char> in_cur_real;
    std::vector<char> in_cur_var;
    int cur_base_vars = 0;

    const std::function<bool(const Pattern&)>* cb = nullptr;
    std::set<std::string>* seen = nullptr;
    bool stopped = false;

    explicit Enumerator(const Graph& graph) : g(graph) {}

    int key(int s) const { return is_var_symbol(s) ? g.n() + var_index(s) : s; }

    bool has_v4_symbol(const std::vector<int>& trace) const {
        for (int s : trace)
            if (!is_var_symbol(s) && in_v4[s]) return true;
        return false;
    }

    bool orientation_ok() const {
        int k = static_cast<int>(cur.size());
        // keys of the reversed reading, with variables introduced in this
        // trace renumbered by first appearance along the reversal
        std::map<int, int> remap;
        int next = cur_base_vars;
        std::vector<int> kr(k);
        for (int i = 0; i < k; ++i) {
            int s = cur[k - 1 - i];
            if (is_var_symbol(s) && var_index(s) >= cur_base_vars) {
                auto it = remap.find(var_index(s));
                if (it == remap.end()) it = remap.emplace(var_index(s), next++).first;
                kr[i] = g.n() + it->second;
            } else {
                kr[i] = key(s);
            }
        }
        for (int i = 0; i < k; ++i) {
            int kf = key(cur[i]);
            if (kf != kr[i]) return kf < kr[i];
        }
        return true;
    }

    bool order_ok() const {
        if (done.empty()) return true;
        const auto& prev = done.back();
        auto cmp = [&](int a, int b) { return key(a) < key(b); };
        return !std::lexicographical_compare(cur.begin(), cur.end(), prev.begin(), prev.end(),
                                             cmp);
    }

    void emit() {
        Pattern p;
        for (const auto& tr : done) p.traces.push_back(Trace{tr});
        p.d.assign(l_target, 0);
        emit_degrees(p, 0);
    }

    void emit_degrees(Pattern& p, int i) {
        if (stopped) return;
        if (i == l_target) {
            std::string k = canonical_key(p);
            if (!seen->insert(k).second) return;
            if (!(*cb)(p)) stopped = true;
            return;
        }
        for (int dv = std::max(1, sum_var[i]); dv <= 3; ++dv) {
            p.d[i] = dv;
            emit_degrees(p, i + 1);
            if (stopped) return;
        }
    }

    void start_trace() {
        if (stopped) return;
        if (static_cast<int>(done.size()) == t_target) {
            if (edges_covered == m4 && vars_used == l_target) emit();
            return;
        }
        int remaining = t_target - static_cast<int>(done.size());
        if (remaining > m4 - edges_covered) return;

        int prev_first = done.empty() ? -1 : key(done.back().front());
        for (int v : symbols_real) {
            if (key(v) < prev_first) continue;
            if (!in_v4[v] && sum_real[v] + 1 > budget[v]) continue;
            push_real_first(v);
            extend();
            pop_real_first(v);
            if (stopped) return;
        }
        for (int x = 0; x <= std::min(vars_used, l_target - 1); ++x) {
            if (key(var_symbol(x)) < prev_first) continue;
            if (x < vars_used && sum_var[x] + 1 > 3) continue;
            bool fresh = (x == vars_used);
            push_var_first(x, fresh);
            extend();
            pop_var_first(x, fresh);
            if (stopped) return;
        }
    }

    void push_real_first(int v) {
        cur_base_vars = vars_used;
        cur.assign(1, v);
        in_cur_real[v] = 1;
        ++sum_real[v];
    }
    void pop_real_first(int v) {
        --sum_real[v];
        in_cur_real[v] = 0;
        cur.clear();
    }
    void push_var_first(int x, bool fresh) {
        cur_base_vars = vars_used;
        cur.assign(1, var_symbol(x));
        in_cur_var[x] = 1;
        ++sum_var[x];
        if (fresh) ++vars_used;
    }
    void pop_var_first(int x, bool fresh) {
        if (fresh) --vars_used;
        --sum_var[x];
        in_cur_var[x] = 0;
        cur.clear();
    }

    void extend() {
        if (stopped) return;
        int last = cur.back();

        if (cur.size() >= 2 && has_v4_symbol(cur) && orientation_ok() && order_ok()) {
            done.push_back(cur);
            std::vector<int> saved;
            saved.swap(cur);
            // the next trace gets fresh membership marks
            std::vector<char> saved_real = in_cur_real, saved_var = in_cur_var;
            std::fill(in_cur_real.begin(), in_cur_real.end(), 0);
            std::fill(in_cur_var.begin(), in_cur_var.end(), 0);
            int base_saved = cur_base_vars;
            start_trace();
            cur_base_vars = base_saved;
            in_cur_real = std::move(saved_real);
            in_cur_var = std::move(saved_var);
            cur.swap(saved);
            done.pop_back();
            if (stopped) return;
        }

        bool last_var = is_var_symbol(last);
        bool last_v4 = !last_var && in_v4[last];
        // interior budget for the symbol we are about to extend past
        if (last_var) {
            if (sum_var[var_index(last)] + 1 > 3) return;
        } else if (!last_v4) {
            if (sum_real[last] + 1 > budget[last]) return;
        }

        for (int v : symbols_real) {
            if (in_cur_real[v]) continue;
            bool v_v4 = in_v4[v];
            if (last_var && v_v4) continue;
            int eid = -1;
            if (v_v4 || last_v4) {
                auto it = edge_id.find(norm_pair(last, v));
                if (it == edge_id.end()) continue;  // not an edge of g
                eid = it->second;
                if (edge_used[eid]) continue;
            } else {
                if (ends_used.count(norm_pair(last, v))) continue;
            }
            if (!v_v4 && sum_real[v] + 1 > budget[v]) continue;

            apply_step(last, v, eid);
            extend();
            undo_step(last, v, eid);
            if (stopped) return;
        }
        if (!last_v4) {
            for (int x = 0; x <= std::min(vars_used, l_target - 1); ++x) {
                if (in_cur_var[x]) continue;
                bool fresh = (x == vars_used);
                if (!fresh && sum_var[x] + 1 > 3) continue;
                int sym = var_symbol(x);
                if (ends_used.count(norm_pair(last, sym))) continue;

                ends_used.insert(norm_pair(last, sym));
                if (last_var) ++sum_var[var_index(last)];
                else ++sum_real[last];
                ++sum_var[x];
                in_cur_var[x] = 1;
                if (fresh) ++vars_used;
                cur.push_back(sym);

                extend();

                cur.pop_back();
                if (fresh) --vars_used;
                in_cur_var[x] = 0;
                --sum_var[x];
                if (last_var) --sum_var[var_index(last)];
                else --sum_real[last];
                ends_used.erase(norm_pair(last, sym));
                if (stopped) return;
            }
        }
    }

    void apply_step(int last, int v, int eid) {
        if (eid >= 0) {
            edge_used[eid] = 1;
            ++edges_covered;
        } else {
            ends_used.insert(norm_pair(last, v));
        }
        if (is_var_symbol(last)) ++sum_var[var_index(last)];
        else ++sum_real[last];
        ++sum_real[v];
        in_cur_real[v] = 1;
        cur.push_back(v);
    }

    void undo_step(int last, int v, int eid) {
        cur.pop_back();
        in_cur_real[v] = 0;
        --sum_real[v];
        if (is_var_symbol(last)) --sum_var[var_index(last)];
        else --sum_real[last];
        if (eid >= 0) {
            edge_used[eid] = 0;
            --edges_covered;
        } else {
            ends_used.erase(norm_pair(last, v));
        }
    }
};

}  // namespace

void enumerate_patterns(const Graph& g, const std::vector<int>& v4, int lmax,
                        const std::function<bool(const Pattern&)>& cb) {
    if (v4.empty()) throw std::invalid_argument("enumerate_patterns: v4 is empty");
    if (lmax < 0) throw std::invalid_argument("enumerate_patterns: negative lmax");
    if (v4 != v4_of(g))
        throw std::invalid_argument("enumerate_patterns: v4 must be the degree->=4 set");

    Enumerator e(g);
    e.in_v4 = v4_mask(g, v4);
    e.in_nv4 = closed_neighborhood_mask(g, v4);
    for (int v = 0; v < g.n(); ++v)
        if (e.in_nv4[v]) e.symbols_real.push_back(v);

    for (int v : v4)
        for (int w : g.neighbors(v)) {
            auto key = std::minmax(v, w);
            if (!e.edge_id.count(key)) {
                int id = static_cast<int>(e.edge_id.size());
                e.edge_id.emplace(key, id);
            }
        }
    e.m4 = static_cast<int>(e.edge_id.size());
    e.edge_used.assign(e.m4, 0);

    int outside = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!e.in_nv4[v]) ++outside;
    int l_cap = std::min({lmax, 16 * high_of(g), outside});

    e.budget.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) e.budget[v] = g.degree(v);
    e.sum_real.assign(g.n(), 0);
    e.in_cur_real.assign(g.n(), 0);
    e.cb = &cb;

    for (int t = 1; t <= e.m4 && !e.stopped; ++t) {
        for (int l = 0; l <= l_cap && !e.stopped; ++l) {
            std::set<std::string> seen;
            e.seen = &seen;
            e.t_target = t;
            e.l_target = l;
            e.sum_var.assign(l, 0);
            e.in_cur_var.assign(l, 0);
            e.vars_used = 0;
            e.start_trace();
        }
    }
}

std::string pattern_to_json(const Graph& g, const Pattern& p) {
    nlohmann::json j;
    j["traces"] = nlohmann::json::array();
    for (const Trace& t : p.traces) {
        nlohmann::json tr = nlohmann::json::array();
        for (int s : t.symbols) {
            if (is_var_symbol(s)) tr.push_back("x" + std::to_string(var_index(s) + 1));
            else tr.push_back(g.token(s));
        }
        j["traces"].push_back(std::move(tr));
    }
    j["d"] = nlohmann::json::object();
    for (int i = 0; i < p.ell(); ++i) j["d"]["x" + std::to_string(i + 1)] = p.d[i];
    return j.dump();
}

}  // namespace pathnum
