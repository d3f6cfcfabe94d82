#include "pathnum/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pathnum/graph.hpp"
#include "pathnum/nice.hpp"
#include "pathnum/oracle.hpp"
#include "pathnum/solver.hpp"
#include "pathnum/structure.hpp"
#include "pathnum/subcubic.hpp"

namespace pathnum {

namespace {

Graph load_graph(const std::string& file, const std::string& format, std::istream& in) {
    auto parse = [&](std::istream& s) {
        return format == "edgelist" ? parse_edgelist(s) : parse_graph(s);
    };
    if (file == "-") return parse(in);
    std::ifstream f(file);
    if (!f) throw std::runtime_error("cannot open " + file);
    return parse(f);
}

PathPartition load_partition(const Graph& g, std::istream& s) {
    PathPartition out;
    std::string line;
    while (std::getline(s, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ss(line);
        Path p;
        std::string tok;
        while (ss >> tok) p.v.push_back(g.index_of(tok));
        if (!p.v.empty()) out.paths.push_back(std::move(p));
    }
    return out;
}

nlohmann::json stats_json(const SolveStats& stats) {
    return {{"components", stats.components},
            {"patterns_enumerated", stats.patterns_enumerated},
            {"patterns_checked", stats.patterns_checked},
            {"patterns_feasible", stats.patterns_feasible}};
}

nlohmann::json paths_json(const Graph& g, const PathPartition& part) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Path& p : part.paths) {
        nlohmann::json one = nlohmann::json::array();
        for (int v : p.v) one.push_back(g.token(v));
        arr.push_back(std::move(one));
    }
    return arr;
}

int run_selftest(int nmax, int threads, std::ostream& out) {
    SolveOptions opt;
    opt.threads = threads;
    int failures = 0;
    auto check = [&](const Graph& g) {
        int expect = brute_pn(g);
        int got = path_number(g, opt);
        PathPartition part = path_partition(g, opt);
        bool ok = got == expect && part.size() == got && verify_partition(g, part) &&
                  2 * got >= odd_count(g);
        if (!ok) {
            ++failures;
            out << "MISMATCH (expected pn " << expect << ", got " << got << "):\n"
                << serialize(g);
        }
    };

    long subcubic_count = 0;
    for (int n = 1; n <= nmax; ++n)
        enumerate_graphs(n, 3, [&](const Graph& g) {
            if (components(g).size() == 1) {
                int expect = brute_pn(g);
                if (pn_subcubic(g) != expect) {
                    ++failures;
                    out << "SUBCUBIC MISMATCH:\n" << serialize(g);
                }
                check(g);
                ++subcubic_count;
            }
            return true;
        });
    out << "selftest: " << subcubic_count << " connected subcubic graphs up to n=" << nmax
        << "\n";

    long general_count = 0;
    int general_nmax = std::min(nmax, 6);
    for (int n = 1; n <= general_nmax; ++n)
        enumerate_graphs(n, -1, [&](const Graph& g) {
            if (components(g).size() == 1) {
                check(g);
                ++general_count;
            }
            return true;
        });
    out << "selftest: " << general_count << " connected graphs up to n=" << general_nmax
        << "\n";

    long random_count = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        GenParams p;
        p.n = 5 + static_cast<int>(seed % 4);
        p.extra = static_cast<int>(seed % 3);
        p.seed = seed;
        check(gen("random_near_subcubic", p));
        ++random_count;
    }
    out << "selftest: " << random_count << " seeded near-subcubic instances\n";

    if (failures) {
        out << "selftest FAILED (" << failures << " mismatches)\n";
        return 1;
    }
    out << "selftest passed\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"exact minimum edge-disjoint path partitions of simple graphs"};
    app.require_subcommand(1);

    std::string file, format = "dimacs", partition_src;
    int lmax = -1, threads = 0, cap = 20, nmax = 6;
    bool json = false, dump_patterns = false;
    GenParams gen_params;
    std::string family;

    auto add_graph_arg = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "graph file ('-' for stdin)")->required();
        cmd->add_option("--format", format, "input format: dimacs or edgelist")
            ->check(CLI::IsMember({"dimacs", "edgelist"}));
    };

    CLI::App* solve = app.add_subcommand("solve", "compute the path number");
    add_graph_arg(solve);
    solve->add_option("--lmax", lmax, "cap on pattern variables (default 16*high)");
    solve->add_option("--threads", threads, "worker threads (0 = all cores)");
    solve->add_flag("--json", json, "JSON output");
    solve->add_flag("--dump-patterns", dump_patterns, "stream enumerated patterns as JSON lines");

    CLI::App* witness = app.add_subcommand("witness", "compute an optimal path partition");
    add_graph_arg(witness);
    witness->add_option("--lmax", lmax, "cap on pattern variables (default 16*high)");
    witness->add_option("--threads", threads, "worker threads (0 = all cores)");
    witness->add_flag("--json", json, "JSON output");

    CLI::App* verify = app.add_subcommand("verify", "verify a partition against a graph");
    add_graph_arg(verify);
    verify->add_option("partition", partition_src, "partition file ('-' for stdin)")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "exact path number by brute force");
    add_graph_arg(oracle);
    oracle->add_option("--cap", cap, "edge-count cap for the exhaustive search");

    CLI::App* sen = app.add_subcommand("sen", "subcubic edge-deletion number by brute force");
    add_graph_arg(sen);
    sen->add_option("--cap", cap, "edge-count cap for the exhaustive search");

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a named instance");
    gen_cmd->add_option("family", family,
                        "random_gnm | random_near_subcubic | wheel | star | pan_gadget | "
                        "bull_gadget | complete")
        ->required();
    gen_cmd->add_option("--n", gen_params.n, "vertex count");
    gen_cmd->add_option("--m", gen_params.m, "edge count (random_gnm)");
    gen_cmd->add_option("--extra", gen_params.extra, "extra edges (random_near_subcubic)");
    gen_cmd->add_option("--count", gen_params.count, "gadget count (pan/bull gadgets)");
    gen_cmd->add_option("--seed", gen_params.seed, "random seed");

    CLI::App* selftest = app.add_subcommand("selftest", "run the differential test suite");
    selftest->add_option("--nmax", nmax, "exhaustive size bound");
    selftest->add_option("--threads", threads, "worker threads (0 = all cores)");

    std::vector<const char*> argv{"pathnum"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed() || witness->parsed()) {
            Graph g = load_graph(file, format, in);
            SolveOptions opt;
            if (lmax >= 0) opt.lmax = lmax;
            opt.threads = dump_patterns ? 1 : threads;
            SolveStats stats;
            opt.stats = &stats;
            if (dump_patterns) {
                const Graph* target = &g;
                opt.observer = [&](const Pattern& p, int value, PatternStatus status) {
                    nlohmann::json j = nlohmann::json::parse(pattern_to_json(*target, p));
                    j["value"] = value;
                    j["status"] = status == PatternStatus::feasible    ? "feasible"
                                  : status == PatternStatus::infeasible ? "infeasible"
                                                                        : "skipped";
                    out << j.dump() << "\n";
                };
                // note: the observer receives patterns of the nice transform of
                // each component, which shares tokens with the input
            }
            if (solve->parsed()) {
                int pn = path_number(g, opt);
                if (json) {
                    nlohmann::json j{{"pn", pn}, {"stats", stats_json(stats)}};
                    out << j.dump() << "\n";
                } else {
                    out << "pn " << pn << "\n";
                }
                return 0;
            }
            PathPartition part = path_partition(g, opt);
            if (json) {
                nlohmann::json j{{"pn", part.size()},
                                 {"paths", paths_json(g, part)},
                                 {"stats", stats_json(stats)}};
                out << j.dump() << "\n";
            } else {
                for (const Path& p : part.paths) {
                    for (size_t i = 0; i < p.v.size(); ++i)
                        out << (i ? " " : "") << g.token(p.v[i]);
                    out << "\n";
                }
            }
            return 0;
        }
        if (verify->parsed()) {
            Graph g = load_graph(file, format, in);
            PathPartition part;
            try {
                if (partition_src == "-") {
                    part = load_partition(g, in);
                } else {
                    std::ifstream f(partition_src);
                    if (!f) throw std::runtime_error("cannot open " + partition_src);
                    part = load_partition(g, f);
                }
            } catch (const std::exception& e) {
                err << "invalid partition: " << e.what() << "\n";
                return 1;
            }
            if (!verify_partition(g, part)) {
                err << "invalid partition\n";
                return 1;
            }
            out << "valid " << part.size() << " paths\n";
            return 0;
        }
        if (oracle->parsed()) {
            out << "pn " << brute_pn(load_graph(file, format, in), cap) << "\n";
            return 0;
        }
        if (sen->parsed()) {
            out << "sen " << sen_bruteforce(load_graph(file, format, in), cap) << "\n";
            return 0;
        }
        if (gen_cmd->parsed()) {
            serialize(gen(family, gen_params), out);
            return 0;
        }
        if (selftest->parsed()) return run_selftest(nmax, threads, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace pathnum
