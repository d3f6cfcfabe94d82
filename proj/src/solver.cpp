#include "pathnum/solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "pathnum/feasibility.hpp"
#include "pathnum/nice.hpp"
#include "pathnum/structure.hpp"
#include "pathnum/subcubic.hpp"

namespace pathnum {

namespace {

void ensure(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

Path* path_ending_at(std::vector<Path>& paths, int v) {
    Path* found = nullptr;
    for (Path& p : paths) {
        if (p.v.front() == v) std::reverse(p.v.begin(), p.v.end());
        if (p.v.back() == v) {
            ensure(found == nullptr, "vertex is an endpoint of two family paths");
            found = &p;
        }
    }
    return found;
}

bool family_bull_free(const Graph& g, const CoveringFamily& q) {
    for (const Path& p : q.paths) {
        int a = p.v.front(), b = p.v.back();
        if (g.degree(a) >= 4 || g.degree(b) >= 4) continue;
        if (is_bull_pair(g, a, b)) return false;
    }
    return true;
}

// positions of a value in a sequence, or -1
int position_of(const std::vector<int>& seq, int v) {
    auto it = std::find(seq.begin(), seq.end(), v);
    return it == seq.end() ? -1 : static_cast<int>(it - seq.begin());
}

std::vector<int> rotated_to(const std::vector<int>& seq, int v) {
    int p = position_of(seq, v);
    std::vector<int> out(seq.begin() + p, seq.end());
    out.insert(out.end(), seq.begin(), seq.begin() + p);
    return out;
}

void append_tail(Path& p, const std::vector<int>& seq) {
    p.v.insert(p.v.end(), seq.begin() + 1, seq.end());
}

// Kill one pan cycle of the residual by extending the path that ends on it.
void kill_pan_cycle(const Graph& g, CoveringFamily& q, const std::vector<int>& cycle) {
    int w = cycle[0];
    int v = -1;
    for (size_t i = 1; i < cycle.size(); ++i)
        if (g.degree(cycle[i]) == 3 && (v < 0 || cycle[i] < v)) v = cycle[i];
    ensure(v >= 0, "pan cycle in the residual with no covered vertex");
    Path* p = path_ending_at(q.paths, v);
    ensure(p != nullptr, "pan cycle vertex is not a family endpoint");
    int vprime = p->v.front();

    auto rot = rotated_to(cycle, v);  // v first, w somewhere inside
    int wp = position_of(rot, w);
    std::vector<int> fwd(rot.begin(), rot.begin() + wp + 1);  // v .. w one way
    std::vector<int> bwd{v};                                  // v .. w the other way
    for (int i = static_cast<int>(rot.size()) - 1; i >= wp; --i) bwd.push_back(rot[i]);

    bool vprime_on_fwd = position_of(fwd, vprime) > 0;
    bool vprime_on_bwd = position_of(bwd, vprime) > 0;
    ensure(!(vprime_on_fwd && vprime_on_bwd), "family endpoint on both pan arcs");
    const std::vector<int>& arc =
        vprime_on_fwd ? bwd : (vprime_on_bwd ? fwd : std::min(fwd, bwd));
    append_tail(*p, arc);
    ensure(is_simple_path(g, *p), "pan extension broke path simplicity");
}

// Kill one cycle component of the residual by absorbing it into two paths.
void kill_cycle_component(const Graph& g, CoveringFamily& q, const std::vector<int>& seq) {
    std::vector<int> w_list;
    for (int v : seq)
        if (g.degree(v) != 2) w_list.push_back(v);
    std::sort(w_list.begin(), w_list.end());
    ensure(w_list.size() >= 2, "cycle component attached at fewer than two vertices");

    int x = w_list[0];
    Path* px = path_ending_at(q.paths, x);
    ensure(px != nullptr, "cycle component vertex is not a family endpoint");
    int y = -1;
    Path* py = nullptr;
    for (size_t i = 1; i < w_list.size() && !py; ++i) {
        Path* cand = path_ending_at(q.paths, w_list[i]);
        ensure(cand != nullptr, "cycle component vertex is not a family endpoint");
        if (cand != px) {
            y = w_list[i];
            py = cand;
        }
    }
    ensure(py != nullptr, "no second family path on the cycle component");
    // path_ending_at may have reoriented paths; restore the ends we rely on
    if (px->v.back() != x) std::reverse(px->v.begin(), px->v.end());
    int xprime = px->v.front(), yprime = py->v.front();

    bool xp_on = position_of(seq, xprime) >= 0;
    bool yp_on = position_of(seq, yprime) >= 0;

    if (xp_on && yp_on) {
        // both far endpoints on the cycle: relabel within the pairs until the
        // four vertices read (X, X', Y, Y') or (X, Y, X', Y') around the cycle
        for (int swap_pair = 0; swap_pair < 2; ++swap_pair)
            for (int swap_x = 0; swap_x < 2; ++swap_x)
                for (int swap_y = 0; swap_y < 2; ++swap_y)
                    for (int dir = 0; dir < 2; ++dir) {
                        Path* pa = swap_pair ? py : px;
                        Path* pb = swap_pair ? px : py;
                        int X = pa->v.back(), Xp = pa->v.front();
                        if (swap_x) std::swap(X, Xp);
                        int Y = pb->v.back(), Yp = pb->v.front();
                        if (swap_y) std::swap(Y, Yp);
                        std::vector<int> s = seq;
                        if (dir) std::reverse(s.begin(), s.end());
                        s = rotated_to(s, X);
                        int a = position_of(s, Xp), b = position_of(s, Y),
                            c = position_of(s, Yp);
                        auto orient = [&](Path& p, int to) {
                            if (p.v.back() != to) std::reverse(p.v.begin(), p.v.end());
                        };
                        int k = static_cast<int>(s.size());
                        if (a < b && b < c) {
                            // order (X, X', Y, Y'): append the Y-arc to pa at
                            // X', the X-arc to pb at Y'
                            orient(*pa, Xp);
                            append_tail(*pa, std::vector<int>(s.begin() + a, s.begin() + c + 1));
                            orient(*pb, Yp);
                            std::vector<int> arc(s.begin() + c, s.end());
                            arc.push_back(s[0]);
                            for (int i = 1; i <= a; ++i) arc.push_back(s[i]);
                            append_tail(*pb, arc);
                        } else if (b < a && a < c) {
                            // order (X, Y, X', Y'): both paths grow on both ends
                            orient(*pa, Xp);  // X .. X'
                            std::vector<int> front(s.begin(), s.begin() + b + 1);
                            std::reverse(front.begin(), front.end());  // Y .. X
                            front.insert(front.end(), pa->v.begin() + 1, pa->v.end());
                            pa->v = std::move(front);                   // Y .. X .. X'
                            append_tail(*pa, std::vector<int>(s.begin() + a, s.begin() + c + 1));
                            orient(*pb, Yp);
                            std::vector<int> front2(s.begin() + b, s.begin() + a + 1);
                            std::reverse(front2.begin(), front2.end());  // X' .. Y
                            front2.insert(front2.end(), pb->v.begin() + 1, pb->v.end());
                            pb->v = std::move(front2);                   // X' .. Y .. Y'
                            std::vector<int> tail(s.begin() + c, s.end());
                            tail.push_back(s[0]);
                            append_tail(*pb, tail);
                        } else {
                            continue;
                        }
                        ensure(is_simple_path(g, *pa) && is_simple_path(g, *pb),
                               "cycle absorption broke path simplicity");
                        return;
                    }
        ensure(false, "no relabeling matches the cycle configurations");
    }

    if (yp_on && !xp_on) {
        std::swap(px, py);
        std::swap(x, y);
        std::swap(xprime, yprime);
        std::swap(xp_on, yp_on);
    }
    // now y' is off the cycle; split it into the two x-y arcs
    if (px->v.back() != x) std::reverse(px->v.begin(), px->v.end());
    if (py->v.back() != y) std::reverse(py->v.begin(), py->v.end());
    auto rot = rotated_to(seq, x);
    int pyy = position_of(rot, y);
    std::vector<int> arc1(rot.begin(), rot.begin() + pyy + 1);  // x .. y
    std::vector<int> arc2{x};                                   // x .. y the other way
    for (int i = static_cast<int>(rot.size()) - 1; i >= pyy; --i) arc2.push_back(rot[i]);

    const std::vector<int>* cx = nullptr;
    if (xp_on) {
        bool on1 = position_of(arc1, xprime) > 0;
        cx = on1 ? &arc2 : &arc1;
    } else {
        cx = &std::min(arc1, arc2);
    }
    const std::vector<int>& cy = (cx == &arc1) ? arc2 : arc1;
    append_tail(*px, *cx);  // x .. y
    std::vector<int> back(cy.rbegin(), cy.rend());  // y .. x
    append_tail(*py, back);
    ensure(is_simple_path(g, *px) && is_simple_path(g, *py),
           "cycle absorption broke path simplicity");
}

// Kill one subdivided-diamond component by absorbing an (x,z)-path of it.
void kill_diamond_component(const Graph& g, const Graph& comp, CoveringFamily& q) {
    int xc = -1, yc = -1;
    for (int v = 0; v < comp.n(); ++v) {
        if (comp.degree(v) != 3) continue;
        if (xc < 0) xc = v;
        else yc = v;
    }
    ensure(yc >= 0, "diamond component without two branch vertices");

    // the three x-y arcs, in g's indexing
    std::vector<std::vector<int>> arcs;
    for (int s : comp.neighbors(xc)) {
        std::vector<int> arc{xc};
        int prev = xc, cur = s;
        while (comp.degree(cur) == 2) {
            arc.push_back(cur);
            int nxt = comp.neighbors(cur)[0] == prev ? comp.neighbors(cur)[1]
                                                     : comp.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        arc.push_back(cur);
        std::vector<int> in_g;
        for (int v : arc) in_g.push_back(g.index_of(comp.token(v)));
        arcs.push_back(std::move(in_g));
    }
    ensure(arcs.size() == 3, "diamond component without three arcs");
    int x = arcs[0][0];
    int y = arcs[0].back();

    int z = -1;
    for (int v = 0; v < comp.n(); ++v) {
        int gv = g.index_of(comp.token(v));
        if (g.degree(gv) != comp.degree(v) && (z < 0 || gv < z)) z = gv;
    }
    ensure(z >= 0, "diamond component with no covered vertex");
    int zarc = -1;
    for (int i = 0; i < 3; ++i)
        if (position_of(arcs[i], z) > 0 && position_of(arcs[i], z) + 1 <
            static_cast<int>(arcs[i].size()))
            zarc = i;
    ensure(zarc >= 0, "covered diamond vertex is not interior to an arc");

    Path* pz = path_ending_at(q.paths, z);
    ensure(pz != nullptr, "diamond vertex is not a family endpoint");
    int zprime = pz->v.front();

    // choose the (end, other-arc) naming so that the absorbed (end, z)-path
    // avoids z'
    for (int flip = 0; flip < 2; ++flip) {
        for (int other = 0; other < 3; ++other) {
            if (other == zarc) continue;
            int X = flip ? y : x;
            int Y = flip ? x : y;
            // D = X --other arc-- Y --z's arc-- z
            std::vector<int> d = arcs[other];
            if (d.front() != X) std::reverse(d.begin(), d.end());
            std::vector<int> za = arcs[zarc];
            if (za.front() != Y) std::reverse(za.begin(), za.end());
            int pz_on_za = position_of(za, z);
            d.insert(d.end(), za.begin() + 1, za.begin() + pz_on_za + 1);
            if (position_of(d, zprime) >= 0) continue;
            // extend P_z backwards along d: from z to X
            std::reverse(d.begin(), d.end());
            append_tail(*pz, d);
            ensure(is_simple_path(g, *pz), "diamond absorption broke path simplicity");
            return;
        }
    }
    ensure(false, "no arc assignment avoids the far endpoint");
}

}  // namespace

bool verify_partition(const Graph& g, const PathPartition& partition) {
    std::set<std::pair<int, int>> covered;
    for (const Path& p : partition.paths) {
        if (p.v.size() < 2 || !is_simple_path(g, p)) return false;
        for (auto e : p.edge_set())
            if (!covered.insert(e).second) return false;
    }
    return static_cast<int>(covered.size()) == g.m();
}

CoveringFamily extend_for_witness(const Graph& g, const std::vector<int>& v4,
                                  const CoveringFamily& q) {
    if (!is_covering_family(g, v4, q))
        throw std::invalid_argument("extend_for_witness: not a covering family");
    if (!family_bull_free(g, q))
        throw std::invalid_argument("extend_for_witness: family is not bull-free");

    CoveringFamily out = q;
    int odd_before = odd_count(remove_paths(g, std::span<const Path>(out.paths)));

    // pan cycles
    for (;;) {
        Graph residual = remove_paths(g, std::span<const Path>(out.paths));
        auto pans = analyze(residual).pan_cycles;
        if (pans.empty()) break;
        std::sort(pans.begin(), pans.end(), [](const auto& a, const auto& b) {
            return std::make_pair(*std::min_element(a.begin(), a.end()), a) <
                   std::make_pair(*std::min_element(b.begin(), b.end()), b);
        });
        kill_pan_cycle(g, out, pans.front());
    }
    // cycle components
    for (;;) {
        Graph residual = remove_paths(g, std::span<const Path>(out.paths));
        bool found = false;
        for (const Graph& comp : components(strip_isolated(residual))) {
            if (classify_component(comp) != ComponentKind::cycle) continue;
            std::vector<int> seq;
            int prev = -1, cur = 0;
            do {
                seq.push_back(g.index_of(comp.token(cur)));
                int nxt = comp.neighbors(cur)[0] == prev ? comp.neighbors(cur)[1]
                                                         : comp.neighbors(cur)[0];
                prev = cur;
                cur = nxt;
            } while (cur != 0);
            kill_cycle_component(g, out, seq);
            found = true;
            break;
        }
        if (!found) break;
    }
    // subdivided-diamond components
    for (;;) {
        Graph residual = remove_paths(g, std::span<const Path>(out.paths));
        bool found = false;
        for (const Graph& comp : components(strip_isolated(residual))) {
            if (classify_component(comp) != ComponentKind::subdivided_diamond) continue;
            kill_diamond_component(g, comp, out);
            found = true;
            break;
        }
        if (!found) break;
    }

    Graph residual = remove_paths(g, std::span<const Path>(out.paths));
    ensure(analyze(residual).pan_cycles.empty(), "extension left a pan cycle");
    for (const Graph& comp : components(strip_isolated(residual))) {
        auto kind = classify_component(comp);
        ensure(kind != ComponentKind::cycle && kind != ComponentKind::subdivided_diamond,
               "extension left a cycle or diamond component");
    }
    ensure(odd_count(residual) == odd_before, "extension changed the odd count");
    ensure(out.size() == q.size(), "extension changed the family size");
    ensure(is_covering_family(g, v4, out), "extension broke the covering family");
    ensure(family_bull_free(g, out), "extension broke bull-freeness");
    return out;
}

namespace {

struct ComponentSolution {
    int value = INT_MAX;
    long index = -1;
    Pattern pattern;
    FeasibilityWitness witness;
};

ComponentSolution solve_nice(const Graph& g0, const std::vector<int>& v4,
                             const SolveOptions& opt) {
    int odd0 = odd_count(g0);
    int high = high_of(g0);
    auto in_nv4 = closed_neighborhood_mask(g0, v4);
    int outside = 0;
    for (int v = 0; v < g0.n(); ++v)
        if (!in_nv4[v]) ++outside;
    int lmax = std::min(opt.lmax.value_or(16 * high), 16 * high);
    int l_cap = std::min(lmax, outside);

    // elements that can ever lose oddity bound how negative odd_number can go
    int odd_capable = l_cap;
    for (int v = 0; v < g0.n(); ++v)
        if (in_nv4[v] && g0.degree(v) % 2 == 1) ++odd_capable;
    const int floor_value = odd0 / 2;

    int nthreads = opt.threads;
    if (nthreads <= 0) nthreads = std::max(1u, std::thread::hardware_concurrency());

    ComponentSolution best;
    std::mutex mtx;
    SolveStats local;

    struct Pending {
        long index;
        Pattern pattern;
        int value;
    };
    std::vector<Pending> pending;

    auto process_one = [&](Pending& item) {
        {
            std::lock_guard<std::mutex> lk(mtx);
            if (item.value >= best.value) {
                if (opt.observer) opt.observer(item.pattern, item.value, PatternStatus::skipped);
                return;
            }
        }
        auto witness = check_feasible(g0, v4, item.pattern);
        std::lock_guard<std::mutex> lk(mtx);
        ++local.patterns_checked;
        if (opt.observer)
            opt.observer(item.pattern, item.value,
                         witness ? PatternStatus::feasible : PatternStatus::infeasible);
        if (!witness) return;
        ++local.patterns_feasible;
        if (std::make_pair(item.value, item.index) <
            std::make_pair(best.value, best.index < 0 ? LONG_MAX : best.index)) {
            best.value = item.value;
            best.index = item.index;
            best.pattern = std::move(item.pattern);
            best.witness = std::move(*witness);
        }
    };

    auto flush = [&] {
        if (pending.empty()) return;
        if (nthreads == 1 || pending.size() == 1) {
            for (auto& item : pending) process_one(item);
        } else {
            std::atomic<size_t> next{0};
            int workers = std::min<size_t>(nthreads, pending.size());
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w)
                pool.emplace_back([&] {
                    for (;;) {
                        size_t i = next.fetch_add(1);
                        if (i >= pending.size()) return;
                        process_one(pending[i]);
                    }
                });
            for (auto& th : pool) th.join();
        }
        pending.clear();
    };

    long next_index = 0;
    int last_t = 0;
    enumerate_patterns(g0, v4, lmax, [&](const Pattern& p) {
        int t = static_cast<int>(p.traces.size());
        if (t != last_t) {
            flush();
            last_t = t;
            std::lock_guard<std::mutex> lk(mtx);
            if (best.value == floor_value) return false;
            int lb = (odd0 - std::min(2 * t, odd_capable)) / 2 + t;
            if (2 * t >= odd_capable && lb >= best.value) return false;
        }
        ++local.patterns_enumerated;
        long index = next_index++;
        int value = (odd0 + odd_number(g0, v4, p)) / 2 + t;
        {
            std::lock_guard<std::mutex> lk(mtx);
            if (value >= best.value) {
                if (opt.observer) opt.observer(p, value, PatternStatus::skipped);
                return true;
            }
        }
        pending.push_back({index, p, value});
        if (pending.size() >= 128) {
            flush();
            std::lock_guard<std::mutex> lk(mtx);
            if (best.value == floor_value) return false;
        }
        return true;
    });
    flush();

    ensure(best.index >= 0, "no feasible pattern found on a nice component");
    if (opt.stats) {
        opt.stats->patterns_enumerated += local.patterns_enumerated;
        opt.stats->patterns_checked += local.patterns_checked;
        opt.stats->patterns_feasible += local.patterns_feasible;
    }
    return best;
}

}  // namespace

int path_number(const Graph& g, const SolveOptions& options) {
    int total = 0;
    for (const Graph& comp : components(g)) {
        if (options.stats) ++options.stats->components;
        if (comp.m() == 0) continue;
        if (is_subcubic(comp)) {
            total += pn_subcubic(comp);
            continue;
        }
        NiceResult nr = make_nice(comp);
        ComponentSolution sol = solve_nice(nr.nice_graph, v4_of(nr.nice_graph), options);
        total += nr.pan_offset + sol.value;
    }
    return total;
}

PathPartition path_partition(const Graph& g, const SolveOptions& options) {
    PathPartition out;
    for (const Graph& comp : components(g)) {
        if (options.stats) ++options.stats->components;
        if (comp.m() == 0) continue;
        if (is_subcubic(comp)) {
            PathPartition part = partition_subcubic(comp);
            for (const Path& p : part.paths) out.paths.push_back(translate(p, comp, g));
            continue;
        }
        NiceResult nr = make_nice(comp);
        const Graph& nice = nr.nice_graph;
        auto v4 = v4_of(nice);
        ComponentSolution sol = solve_nice(nice, v4, options);

        CoveringFamily family = realize_family(nice, v4, sol.pattern, sol.witness);
        CoveringFamily extended = extend_for_witness(nice, v4, family);

        PathPartition nice_part;
        nice_part.paths = extended.paths;
        Graph rest = remove_paths(nice, std::span<const Path>(extended.paths));
        for (const Graph& sub : components(strip_isolated(rest))) {
            PathPartition part = partition_subcubic(sub);
            for (const Path& p : part.paths) nice_part.paths.push_back(translate(p, sub, nice));
        }
        ensure(nice_part.size() == sol.value, "nice witness size mismatch");
        ensure(verify_partition(nice, nice_part), "nice witness failed verification");

        PathPartition lifted = replay_witness(nice_part, nr, comp);
        ensure(lifted.size() == sol.value + nr.pan_offset, "replayed witness size mismatch");
        ensure(verify_partition(comp, lifted), "replayed witness failed verification");
        for (const Path& p : lifted.paths) out.paths.push_back(translate(p, comp, g));
    }
    ensure(verify_partition(g, out) || g.m() == 0, "assembled witness failed verification");
    return out;
}

}  // namespace pathnum
