#include "pathnum/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pathnum {

Graph::Graph(std::vector<std::string> tokens, const std::vector<std::pair<int, int>>& edges)
    : tokens_(std::move(tokens)) {
    const int n = static_cast<int>(tokens_.size());
    index_.reserve(tokens_.size());
    for (int i = 0; i < n; ++i) {
        if (!index_.emplace(tokens_[i], i).second)
            throw std::invalid_argument("duplicate vertex token: " + tokens_[i]);
    }
    adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + tokens_[u]);
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw std::invalid_argument("parallel edge " + tokens_[u] + " " + tokens_[v]);
    }
    for (auto [u, v] : seen) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    m_ = static_cast<int>(seen.size());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n()) throw std::invalid_argument("unknown vertex index");
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

const std::string& Graph::token(int v) const {
    check_vertex(v);
    return tokens_[v];
}

std::optional<int> Graph::find(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int Graph::index_of(const std::string& token) const {
    auto it = index_.find(token);
    if (it == index_.end()) throw std::invalid_argument("unknown vertex: " + token);
    return it->second;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::with_edges_removed(const std::vector<std::pair<int, int>>& remove) const {
    std::set<std::pair<int, int>> gone;
    for (auto [u, v] : remove) {
        check_vertex(u);
        check_vertex(v);
        if (!has_edge(u, v))
            throw std::invalid_argument("cannot remove missing edge " + tokens_[u] + " " + tokens_[v]);
        gone.insert(std::minmax(u, v));
    }
    std::vector<std::pair<int, int>> kept;
    for (auto e : edges())
        if (!gone.count(e)) kept.push_back(e);
    return Graph(tokens_, kept);
}

Graph Graph::with_edges_added(const std::vector<std::pair<int, int>>& add) const {
    auto all = edges();
    std::set<std::pair<int, int>> present(all.begin(), all.end());
    for (auto [u, v] : add) {
        check_vertex(u);
        check_vertex(v);
        auto key = std::minmax(u, v);
        if (present.insert(key).second) all.push_back(key);
    }
    return Graph(tokens_, all);
}

Graph Graph::induced(const std::vector<char>& keep) const {
    if (static_cast<int>(keep.size()) != n())
        throw std::invalid_argument("induced: mask size mismatch");
    std::vector<std::string> toks;
    std::vector<int> remap(n(), -1);
    for (int v = 0; v < n(); ++v) {
        if (keep[v]) {
            remap[v] = static_cast<int>(toks.size());
            toks.push_back(tokens_[v]);
        }
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges())
        if (keep[u] && keep[v]) es.emplace_back(remap[u], remap[v]);
    return Graph(std::move(toks), es);
}

bool Graph::operator==(const Graph& other) const {
    return tokens_ == other.tokens_ && adj_ == other.adj_;
}

std::vector<std::pair<int, int>> Path::edge_set() const {
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i + 1 < v.size(); ++i)
        out.push_back(std::minmax(v[i], v[i + 1]));
    return out;
}

namespace {

struct ParsedInput {
    std::vector<std::string> tokens;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;
    bool has_header = false;
    int header_n = 0, header_m = 0;

    int declare(const std::string& tok, bool allow_new, int line) {
        auto it = index.find(tok);
        if (it != index.end()) return it->second;
        if (!allow_new)
            throw std::runtime_error("line " + std::to_string(line) +
                                     ": vertex " + tok + " not declared by header");
        int id = static_cast<int>(tokens.size());
        tokens.push_back(tok);
        index.emplace(tok, id);
        return id;
    }
};

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    ParsedInput p;
    std::set<std::pair<int, int>> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (p.has_header) parse_fail(lineno, "duplicate header");
            if (!p.tokens.empty()) parse_fail(lineno, "header after edges");
            std::string kind;
            if (!(ss >> kind >> p.header_n >> p.header_m) || kind != "edge" || p.header_n < 0 ||
                p.header_m < 0)
                parse_fail(lineno, "malformed header");
            p.has_header = true;
            for (int i = 1; i <= p.header_n; ++i) p.declare(std::to_string(i), true, lineno);
            continue;
        }
        if (tag == "e") {
            std::string a, b, extra;
            if (!(ss >> a >> b) || (ss >> extra))
                parse_fail(lineno, "malformed edge line");
            int u = p.declare(a, !p.has_header, lineno);
            int v = p.declare(b, !p.has_header, lineno);
            if (u == v) parse_fail(lineno, "self-loop at " + a);
            if (!seen.insert(std::minmax(u, v)).second)
                parse_fail(lineno, "duplicate edge " + a + " " + b);
            p.edges.emplace_back(u, v);
            continue;
        }
        if (tag == "n") {
            std::string a, extra;
            if (!(ss >> a) || (ss >> extra)) parse_fail(lineno, "malformed vertex line");
            p.declare(a, !p.has_header, lineno);
            continue;
        }
        parse_fail(lineno, "unrecognized line");
    }
    if (p.has_header && static_cast<int>(p.edges.size()) != p.header_m)
        throw std::runtime_error("header declares " + std::to_string(p.header_m) +
                                 " edges, file has " + std::to_string(p.edges.size()));
    return Graph(std::move(p.tokens), p.edges);
}

Graph parse_graph(const std::string& text) {
    std::istringstream ss(text);
    return parse_graph(ss);
}

Graph parse_edgelist(std::istream& in) {
    ParsedInput p;
    std::set<std::pair<int, int>> seen;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        std::string a, b, extra;
        if (!(ss >> a)) continue;
        if (a[0] == '#') continue;
        if (!(ss >> b)) {
            p.declare(a, true, lineno);
            continue;
        }
        if (ss >> extra) parse_fail(lineno, "expected two tokens");
        int u = p.declare(a, true, lineno);
        int v = p.declare(b, true, lineno);
        if (u == v) parse_fail(lineno, "self-loop at " + a);
        if (!seen.insert(std::minmax(u, v)).second)
            parse_fail(lineno, "duplicate edge " + a + " " + b);
        p.edges.emplace_back(u, v);
    }
    return Graph(std::move(p.tokens), p.edges);
}

void serialize(const Graph& g, std::ostream& out) {
    bool canonical_tokens = true;
    for (int v = 0; v < g.n(); ++v)
        if (g.token(v) != std::to_string(v + 1)) {
            canonical_tokens = false;
            break;
        }
    if (canonical_tokens) {
        out << "p edge " << g.n() << ' ' << g.m() << '\n';
        for (auto [u, v] : g.edges())
            out << "e " << g.token(u) << ' ' << g.token(v) << '\n';
    } else {
        for (auto [u, v] : g.edges())
            out << "e " << g.token(u) << ' ' << g.token(v) << '\n';
        for (int v = 0; v < g.n(); ++v)
            if (g.degree(v) == 0) out << "n " << g.token(v) << '\n';
    }
}

std::string serialize(const Graph& g) {
    std::ostringstream ss;
    serialize(g, ss);
    return ss.str();
}

std::vector<Graph> components(const Graph& g) {
    std::vector<int> comp(g.n(), -1);
    int ncomp = 0;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> stack{s};
        comp[s] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<Graph> out;
    out.reserve(ncomp);
    for (int c = 0; c < ncomp; ++c) {
        std::vector<char> keep(g.n(), 0);
        for (int v = 0; v < g.n(); ++v) keep[v] = (comp[v] == c);
        out.push_back(g.induced(keep));
    }
    return out;
}

Graph remove_paths(const Graph& g, std::span<const Path> paths) {
    std::set<std::pair<int, int>> removed;
    for (const Path& p : paths) {
        if (!is_simple_path(g, p))
            throw std::invalid_argument("remove_paths: not a path of the graph");
        for (auto e : p.edge_set())
            if (!removed.insert(e).second)
                throw std::invalid_argument("remove_paths: paths share edge " + g.token(e.first) +
                                            " " + g.token(e.second));
    }
    std::vector<std::pair<int, int>> kept;
    for (auto e : g.edges())
        if (!removed.count(e)) kept.push_back(e);
    return Graph(g.tokens(), kept);
}

Graph remove_paths(const Graph& g, const PathPartition& partition) {
    return remove_paths(g, std::span<const Path>(partition.paths));
}

int odd_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) % 2 == 1) ++c;
    return c;
}

Graph strip_isolated(const Graph& g) {
    std::vector<char> keep(g.n());
    for (int v = 0; v < g.n(); ++v) keep[v] = g.degree(v) > 0;
    return g.induced(keep);
}

bool is_simple_path(const Graph& g, const Path& p) {
    if (p.v.empty()) return false;
    std::set<int> seen;
    for (int x : p.v) {
        if (x < 0 || x >= g.n()) return false;
        if (!seen.insert(x).second) return false;
    }
    for (size_t i = 0; i + 1 < p.v.size(); ++i)
        if (!g.has_edge(p.v[i], p.v[i + 1])) return false;
    return true;
}

Path translate(const Path& p, const Graph& from, const Graph& to) {
    Path out;
    out.v.reserve(p.v.size());
    for (int x : p.v) out.v.push_back(to.index_of(from.token(x)));
    return out;
}

PathPartition translate(const PathPartition& pp, const Graph& from, const Graph& to) {
    PathPartition out;
    out.paths.reserve(pp.paths.size());
    for (const Path& p : pp.paths) out.paths.push_back(translate(p, from, to));
    return out;
}

}  // namespace pathnum
