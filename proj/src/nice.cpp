#include "pathnum/nice.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "pathnum/solver.hpp"
#include "pathnum/structure.hpp"

namespace pathnum {

namespace {

void ensure(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

std::vector<std::string> to_tokens(const Graph& g, const std::vector<int>& seq) {
    std::vector<std::string> out;
    out.reserve(seq.size());
    for (int v : seq) out.push_back(g.token(v));
    return out;
}

int min_vertex(const std::vector<int>& cycle) {
    return *std::min_element(cycle.begin(), cycle.end());
}

// Split a cyclic vertex sequence at three marker positions into the three arcs
// between consecutive markers; each arc includes both marker endpoints.
std::vector<std::vector<int>> split_cycle(const std::vector<int>& cycle,
                                          const std::vector<int>& markers) {
    int k = static_cast<int>(cycle.size());
    std::vector<int> pos;
    for (int i = 0; i < k; ++i)
        if (std::find(markers.begin(), markers.end(), cycle[i]) != markers.end())
            pos.push_back(i);
    ensure(pos.size() == 3, "bull cycle does not contain its three markers");
    std::vector<std::vector<int>> arcs;
    for (int a = 0; a < 3; ++a) {
        int from = pos[a], to = pos[(a + 1) % 3];
        std::vector<int> arc;
        for (int i = from; i != to; i = (i + 1) % k) arc.push_back(cycle[i]);
        arc.push_back(cycle[to]);
        arcs.push_back(std::move(arc));
    }
    return arcs;
}

std::vector<int> oriented(std::vector<int> arc, int from, int to) {
    if (arc.front() == from && arc.back() == to) return arc;
    std::reverse(arc.begin(), arc.end());
    ensure(arc.front() == from && arc.back() == to, "arc endpoints mismatch");
    return arc;
}

}  // namespace

NiceResult make_nice(const Graph& g) {
    if (is_subcubic(g)) throw std::invalid_argument("make_nice: graph is subcubic");
    if (components(g).size() != 1) throw std::invalid_argument("make_nice: graph is disconnected");

    NiceResult out{g, 0, {}};
    Graph& cur = out.nice_graph;

    // pan cycles first, ascending by smallest contained vertex
    for (;;) {
        auto pans = analyze(cur).pan_cycles;
        if (pans.empty()) break;
        std::sort(pans.begin(), pans.end(), [](const auto& a, const auto& b) {
            return std::make_pair(min_vertex(a), a) < std::make_pair(min_vertex(b), b);
        });
        const auto& c = pans.front();
        ReplayStep step;
        step.kind = ReplayStep::Kind::pan_removal;
        step.cycle = to_tokens(cur, c);
        out.log.push_back(std::move(step));
        ++out.pan_offset;

        std::vector<char> keep(cur.n(), 1);
        for (size_t i = 1; i < c.size(); ++i) keep[c[i]] = 0;
        cur = cur.induced(keep);
    }

    // then shorten every non-triangle bull cycle
    for (;;) {
        auto bulls = analyze(cur).bull_cycles;
        bulls.erase(std::remove_if(bulls.begin(), bulls.end(),
                                   [](const auto& c) { return c.size() == 3; }),
                    bulls.end());
        if (bulls.empty()) break;
        std::sort(bulls.begin(), bulls.end(), [](const auto& a, const auto& b) {
            return std::make_pair(min_vertex(a), a) < std::make_pair(min_vertex(b), b);
        });
        const auto& b = bulls.front();
        int u = b[0];
        int v = -1;
        for (size_t i = 1; i < b.size(); ++i)
            if (cur.degree(b[i]) == 3) {
                ensure(v < 0, "bull cycle with a third branch vertex");
                v = b[i];
            }
        ensure(v >= 0, "bull cycle without second branch vertex");
        int w = -1;
        for (int x : b)
            if (x != u && x != v && (w < 0 || x < w)) w = x;

        auto arcs = split_cycle(b, {u, v, w});
        // order arcs as uv, uw, wv and orient them accordingly
        std::vector<std::vector<int>> named(3);
        for (auto& arc : arcs) {
            bool has_u = arc.front() == u || arc.back() == u;
            bool has_v = arc.front() == v || arc.back() == v;
            if (has_u && has_v) named[0] = oriented(arc, u, v);
            else if (has_u) named[1] = oriented(arc, u, w);
            else named[2] = oriented(arc, w, v);
        }
        ReplayStep step;
        step.kind = ReplayStep::Kind::bull_shorten;
        for (const auto& arc : named) step.arcs.push_back(to_tokens(cur, arc));
        out.log.push_back(std::move(step));

        std::vector<char> keep(cur.n(), 1);
        for (int x : b)
            if (x != u && x != v && x != w) keep[x] = 0;
        std::string tu = cur.token(u), tv = cur.token(v), tw = cur.token(w);
        Graph shrunk = cur.induced(keep);
        int su = shrunk.index_of(tu), sv = shrunk.index_of(tv), sw = shrunk.index_of(tw);
        cur = shrunk.with_edges_added({{su, sv}, {su, sw}, {sw, sv}});
    }

    ensure(!is_subcubic(cur), "nice graph lost its high-degree vertex");
    ensure(components(cur).size() == 1, "nice graph disconnected");
    ensure(analyze(cur).pan_cycles.empty(), "nice graph still has a pan cycle");
    for (const auto& c : analyze(cur).bull_cycles)
        ensure(c.size() == 3, "nice graph still has a long bull cycle");
    ensure(high_of(cur) == high_of(g), "high changed under make_nice");
    return out;
}

namespace {

using TokenPath = std::vector<std::string>;

// Replace the unique occurrence of the edge (arc.front(), arc.back()) by the
// whole arc. A length-1 arc is the edge itself.
void splice_arc(std::vector<TokenPath>& paths, const std::vector<std::string>& arc) {
    if (arc.size() == 2) return;
    const std::string& a = arc.front();
    const std::string& b = arc.back();
    for (TokenPath& p : paths) {
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            bool fwd = p[i] == a && p[i + 1] == b;
            bool bwd = p[i] == b && p[i + 1] == a;
            if (!fwd && !bwd) continue;
            std::vector<std::string> mid(arc.begin() + 1, arc.end() - 1);
            if (bwd) std::reverse(mid.begin(), mid.end());
            p.insert(p.begin() + i + 1, mid.begin(), mid.end());
            return;
        }
    }
    throw std::logic_error("replay: shortened edge not covered by the partition");
}

}  // namespace

PathPartition replay_witness(const PathPartition& nice_partition, const NiceResult& result,
                             const Graph& original) {
    if (!verify_partition(result.nice_graph, nice_partition))
        throw std::invalid_argument("replay_witness: partition invalid for the nice graph");

    std::vector<TokenPath> paths;
    for (const Path& p : nice_partition.paths)
        paths.push_back(to_tokens(result.nice_graph, p.v));

    for (auto it = result.log.rbegin(); it != result.log.rend(); ++it) {
        if (it->kind == ReplayStep::Kind::bull_shorten) {
            for (const auto& arc : it->arcs) splice_arc(paths, arc);
            continue;
        }
        // pan cycle: extend the path ending at the attachment vertex along one
        // arc and add the other arc as a fresh path
        const auto& c = it->cycle;
        const std::string& x = c.front();
        TokenPath* host = nullptr;
        for (TokenPath& p : paths) {
            if (p.back() == x) host = &p;
            else if (p.front() == x) {
                std::reverse(p.begin(), p.end());
                host = &p;
            }
            if (host) break;
        }
        ensure(host != nullptr, "replay: pan attachment vertex is not a path endpoint");
        size_t t = 1;
        for (size_t i = 2; i < c.size(); ++i)
            if (c[i] < c[t]) t = i;
        host->insert(host->end(), c.begin() + 1, c.begin() + t + 1);
        TokenPath rest(c.begin() + t, c.end());
        rest.push_back(x);
        paths.push_back(std::move(rest));
    }

    PathPartition out;
    for (const TokenPath& p : paths) {
        Path path;
        for (const std::string& tok : p) path.v.push_back(original.index_of(tok));
        out.paths.push_back(std::move(path));
    }
    return out;
}

std::string replay_log_to_json(const std::vector<ReplayStep>& log) {
    nlohmann::json arr = nlohmann::json::array();
    for (const ReplayStep& s : log) {
        nlohmann::json item;
        if (s.kind == ReplayStep::Kind::pan_removal) {
            item["kind"] = "pan_removal";
            item["cycle"] = s.cycle;
        } else {
            item["kind"] = "bull_shorten";
            item["arcs"] = s.arcs;
        }
        arr.push_back(std::move(item));
    }
    return arr.dump();
}

std::vector<ReplayStep> replay_log_from_json(const std::string& text) {
    std::vector<ReplayStep> out;
    nlohmann::json arr;
    try {
        arr = nlohmann::json::parse(text);
        for (const auto& item : arr) {
            ReplayStep s;
            std::string kind = item.at("kind").get<std::string>();
            if (kind == "pan_removal") {
                s.kind = ReplayStep::Kind::pan_removal;
                s.cycle = item.at("cycle").get<std::vector<std::string>>();
            } else if (kind == "bull_shorten") {
                s.kind = ReplayStep::Kind::bull_shorten;
                s.arcs = item.at("arcs").get<std::vector<std::vector<std::string>>>();
            } else {
                throw std::runtime_error("replay log: unknown step kind " + kind);
            }
            out.push_back(std::move(s));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("replay log: ") + e.what());
    }
    return out;
}

}  // namespace pathnum
