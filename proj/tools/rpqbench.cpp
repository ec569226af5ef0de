// rpqbench: dataset/workload generation, engine-vs-baseline evaluation with
// three-part timing CSV, randomized equivalence sweeps, and reduction dumps.

#include <CLI11.hpp>

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rpq/engine.hpp"
#include "rpq/instance_gen.hpp"
#include "rpq/nfa.hpp"
#include "rpq/oracle.hpp"
#include "rpq/reduction.hpp"

using namespace rpq;
using Clock = std::chrono::steady_clock;

namespace {

double us_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
}

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw UsageError("cannot write " + path);
    return f;
}

// ---- gen -------------------------------------------------------------------

void write_graph(const LabeledGraph& g, std::ostream& out) {
    out << "# " << g.vertex_count() << " vertices, " << g.edge_count() << " edges, "
        << g.label_count() << " labels\n";
    for (const Edge& e : g.edges())
        out << e.src << '\t' << g.label_name(e.label) << '\t' << e.dst << '\n';
}

// One query set per closure body R: `queries` batch units Pre·R+·Post with
// single-label Pre and Post, sharing R within the set.
void write_workload(std::ostream& out, const std::vector<std::string>& labels,
                    const std::vector<unsigned>& r_lengths, unsigned per_length, unsigned queries,
                    std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&] { return labels[rng() % labels.size()]; };
    unsigned set_id = 0;
    for (unsigned len : r_lengths) {
        for (unsigned i = 0; i < per_length; ++i) {
            std::string r = pick();
            for (unsigned k = 1; k < len; ++k) r += "." + pick();
            out << "# set " << set_id++ << " r=" << r << '\n';
            for (unsigned q = 0; q < queries; ++q) {
                std::string body = len > 1 ? "(" + r + ")" : r;
                out << pick() << "." << body << "+." << pick() << '\n';
            }
        }
    }
}

int run_gen(unsigned scale, unsigned edge_factor, unsigned labels, std::uint64_t seed,
            const std::string& out_path, bool workload, const std::vector<unsigned>& r_lengths,
            unsigned per_length, unsigned queries) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        out = &file;
    }
    if (workload) {
        write_workload(*out, default_label_names(labels), r_lengths, per_length, queries, seed);
    } else {
        write_graph(generate_rmat(scale, edge_factor, labels, seed), *out);
    }
    return 0;
}

// ---- eval ------------------------------------------------------------------

std::vector<std::string> load_workload(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read " + path);
    std::vector<std::string> texts;
    std::string line;
    while (std::getline(f, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto last = line.find_last_not_of(" \t\r");
        texts.push_back(line.substr(first, last - first + 1));
    }
    return texts;
}

void write_csv_row(std::ostream& out, std::size_t query_id, const std::string& method,
                   std::size_t result_pairs, const EvalStats& st) {
    double remainder = st.t_total_us - st.t_shared_us - st.t_prejoin_us;
    out << query_id << ',' << method << ',' << result_pairs << ',' << st.shared_pairs << ','
        << st.t_shared_us << ',' << st.t_prejoin_us << ',' << remainder << ',' << st.t_total_us
        << ',' << st.rtc_computations << ',' << st.cache_hits << ',' << st.eq7_dup_skips << ','
        << st.eq8_dup_skips << '\n';
}

int run_eval(const std::string& graph_path, const std::string& workload_path,
             const std::string& methods_csv, const std::string& out_path, bool dump_shared,
             bool dump_results) {
    auto g = load_edge_list(graph_path);
    auto texts = load_workload(workload_path);
    std::vector<AstPtr> queries;
    for (const auto& t : texts) queries.push_back(parse_rpq(t));

    std::vector<std::string> methods;
    {
        std::stringstream ss(methods_csv);
        std::string m;
        while (std::getline(ss, m, ',')) {
            if (m != "rtc" && m != "full" && m != "no")
                throw UsageError("unknown method: " + m);
            methods.push_back(m);
        }
        if (methods.empty()) throw UsageError("no methods requested");
    }

    // method -> per-query (result, stats)
    std::vector<std::vector<PairRelation>> results(methods.size());
    std::vector<std::vector<EvalStats>> stats(methods.size());
    RtcCache cache;
    SharedClosures shared;
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
        const std::string& m = methods[mi];
        if (m == "rtc") {
            for (const AstPtr& q : queries) {
                EvalStats st;
                const auto t0 = Clock::now();
                results[mi].push_back(rtc_sharing(g, q, cache, &st));
                st.t_total_us = us_since(t0);
                stats[mi].push_back(st);
            }
        } else if (m == "full") {
            results[mi] = full_sharing(g, queries, shared, &stats[mi]);
        } else {
            results[mi] = no_sharing(g, queries, &stats[mi]);
        }
    }

    // correctness tripwire: all methods must agree per query
    for (std::size_t qi = 0; qi < queries.size(); ++qi) {
        for (std::size_t mi = 1; mi < methods.size(); ++mi) {
            if (results[mi][qi] == results[0][qi]) continue;
            std::cerr << "result mismatch on query " << qi << " (" << texts[qi] << "): "
                      << methods[0] << "=" << results[0][qi].size() << " pairs, " << methods[mi]
                      << "=" << results[mi][qi].size() << " pairs\n";
            std::size_t shown = 0;
            for (auto [s, e] : results[0][qi].pairs())
                if (!results[mi][qi].contains(s, e) && shown++ < 5)
                    std::cerr << "  only in " << methods[0] << ": (" << s << "," << e << ")\n";
            shown = 0;
            for (auto [s, e] : results[mi][qi].pairs())
                if (!results[0][qi].contains(s, e) && shown++ < 5)
                    std::cerr << "  only in " << methods[mi] << ": (" << s << "," << e << ")\n";
            return 2;
        }
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file = open_out(out_path);
        out = &file;
    }
    *out << "query_id,method,result_pairs,shared_pairs,t_shared_us,t_prejoin_us,t_remainder_us,"
            "t_total_us,rtc_computations,cache_hits,eq7_skips,eq8_skips\n";
    for (std::size_t qi = 0; qi < queries.size(); ++qi)
        for (std::size_t mi = 0; mi < methods.size(); ++mi)
            write_csv_row(*out, qi, methods[mi], results[mi][qi].size(), stats[mi][qi]);

    if (dump_shared) {
        for (const auto& [key, rel] : shared)
            *out << "# shared full closure " << key << ": " << rel->size() << " pairs\n";
        *out << "# shared rtc entries: " << cache.size() << "\n";
    }
    if (dump_results) {
        for (std::size_t qi = 0; qi < queries.size(); ++qi) {
            *out << "# results query " << qi << " (" << texts[qi] << ")\n";
            auto pairs = results[0][qi].pairs();
            std::sort(pairs.begin(), pairs.end());
            for (auto [s, e] : pairs) *out << "# (" << s << "," << e << ")\n";
        }
    }
    return 0;
}

// ---- oracle-check ----------------------------------------------------------

int run_oracle_check(unsigned instances, unsigned max_v, unsigned max_depth, std::uint64_t seed,
                     const std::string& counterexample_path) {
    InstanceParams p;
    p.max_scale = std::max(1u, static_cast<unsigned>(std::bit_width(std::max(2u, max_v)) - 1));
    (void)max_depth; // reserved for arbitrary-regex sweeps; batch units by default
    std::mt19937_64 rng(seed);
    unsigned ok = 0;
    for (unsigned i = 0; i < instances; ++i) {
        Instance inst = random_instance(rng, p);
        auto want = oracle_eval(inst.graph, inst.query);
        RtcCache cache;
        SharedClosures shared;
        bool same = rtc_sharing(inst.graph, inst.query, cache) == want &&
                    full_sharing(inst.graph, {inst.query}, shared)[0] == want &&
                    no_sharing(inst.graph, {inst.query})[0] == want;
        if (same) {
            ++ok;
            continue;
        }
        std::cerr << "mismatch at (seed=" << seed << ", index=" << i << "): " << inst.query_text
                  << "\n";
        auto f = open_out(counterexample_path);
        f << "# counterexample seed=" << seed << " index=" << i << "\n";
        f << "# query: " << inst.query_text << "\n";
        write_graph(inst.graph, f);
        std::cout << ok << "/" << instances << " ok before first mismatch\n";
        return 2;
    }
    std::cout << ok << "/" << instances << " ok\n";
    return 0;
}

// ---- dump-reduction --------------------------------------------------------

int run_dump_reduction(const std::string& graph_path, const std::string& r_text) {
    auto g = load_edge_list(graph_path);
    auto r = parse_rpq(r_text);
    auto r_g = eval_rpq_without_kc(g, r);
    auto gr = edge_level_reduce(r_g);
    auto cond = condense(gr);
    auto rtc = compute_rtc(cond);

    std::cout << "# reduced graph: " << gr.vertex_count() << " vertices, " << gr.edge_count()
              << " edges\n";
    for (auto [s, e] : gr.edges) std::cout << s << '\t' << e << '\n';
    std::cout << "# condensation: " << cond.scc_count << " sccs, " << cond.condensed_edges.size()
              << " edges\n";
    for (SccId s = 0; s < cond.scc_count; ++s) {
        std::cout << "# scc " << s << ":";
        for (VertexId v : cond.members[s]) std::cout << ' ' << v;
        std::cout << '\n';
    }
    for (auto [s, e] : cond.condensed_edges) std::cout << s << '\t' << e << '\n';
    std::cout << "# rtc: " << rtc.pairs.size() << " pairs\n";
    for (auto [s, e] : rtc.pairs) std::cout << s << '\t' << e << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RPQ evaluation benchmark: reduced-transitive-closure sharing vs baselines"};
    app.require_subcommand(1);

    // gen
    unsigned scale = 13, edge_factor = 3, labels = 4;
    std::uint64_t seed = 1;
    std::string out_path;
    bool workload = false;
    std::vector<unsigned> r_lengths{1, 2, 3};
    unsigned per_length = 2, queries = 4;
    auto* gen = app.add_subcommand("gen", "generate a graph or a workload file");
    gen->add_option("--scale", scale, "graph has 2^scale vertices");
    gen->add_option("--edge-factor", edge_factor, "2^(scale+edge_factor) edge draws");
    gen->add_option("--labels", labels, "alphabet size");
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--out", out_path, "output path (default stdout)");
    gen->add_flag("--workload", workload, "generate a workload instead of a graph");
    gen->add_option("--r-lengths", r_lengths, "closure-body lengths, one set group per length")
        ->delimiter(',');
    gen->add_option("--per-length", per_length, "closure bodies per length");
    gen->add_option("--queries", queries, "queries per closure body");

    // eval
    std::string graph_path, workload_path, methods = "rtc,full,no";
    bool dump_shared = false, dump_results = false;
    auto* eval = app.add_subcommand("eval", "run methods over a workload and emit CSV");
    eval->add_option("--graph", graph_path, "edge-list graph file")->required();
    eval->add_option("--workload", workload_path, "query file, one expression per line")
        ->required();
    eval->add_option("--methods", methods, "comma list from {rtc,full,no}");
    eval->add_option("--out", out_path, "CSV output path (default stdout)");
    eval->add_flag("--dump-shared", dump_shared, "append shared-structure sizes as comments");
    eval->add_flag("--dump-results", dump_results, "append result pairs as comments");

    // oracle-check
    unsigned instances = 100, max_v = 16, max_depth = 3;
    std::string counterexample = "oracle-counterexample.tsv";
    auto* oc = app.add_subcommand("oracle-check", "randomized equivalence sweep vs brute force");
    oc->add_option("--instances", instances, "number of random instances");
    oc->add_option("--max-v", max_v, "vertex-count bound (rounded down to a power of two)");
    oc->add_option("--max-depth", max_depth, "query shape bound");
    oc->add_option("--seed", seed, "rng seed");
    oc->add_option("--counterexample", counterexample, "file for the first failing instance");

    // dump-reduction
    std::string r_text;
    auto* dump = app.add_subcommand("dump-reduction", "print G_R, condensation, and RTC");
    dump->add_option("--graph", graph_path, "edge-list graph file")->required();
    dump->add_option("--r", r_text, "closure body expression")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return run_gen(scale, edge_factor, labels, seed, out_path, workload, r_lengths,
                           per_length, queries);
        if (eval->parsed())
            return run_eval(graph_path, workload_path, methods, out_path, dump_shared,
                            dump_results);
        if (oc->parsed())
            return run_oracle_check(instances, max_v, max_depth, seed, counterexample);
        return run_dump_reduction(graph_path, r_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
