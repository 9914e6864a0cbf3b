#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mcgs/mcgs.hpp"

namespace {

mcgs::Graph load_graph(const std::string& path, bool largest_component) {
    std::ifstream in(path);
    if (!in) throw mcgs::parse_error("cannot open graph file: " + path);
    return mcgs::parse_edge_list(in, {largest_component});
}

std::vector<std::vector<mcgs::NodeId>> load_partition(const std::string& path,
                                                      const mcgs::Graph& g) {
    std::map<std::string, mcgs::NodeId> by_label;
    for (mcgs::NodeId v = 0; v < g.node_count(); ++v) by_label[g.label(v)] = v;
    std::ifstream in(path);
    if (!in) throw mcgs::parse_error("cannot open partition file: " + path);
    std::vector<std::vector<mcgs::NodeId>> parts;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == '%') continue;
        std::istringstream row(line);
        std::vector<mcgs::NodeId> part;
        std::string token;
        while (row >> token) {
            auto it = by_label.find(token);
            if (it == by_label.end())
                throw mcgs::parse_error("partition references unknown node: " + token);
            part.push_back(it->second);
        }
        if (!part.empty()) parts.push_back(std::move(part));
    }
    return parts;
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minority-structure-preserving graph sampling toolkit"};
    app.require_subcommand(1);

    bool largest_component = false;
    app.add_flag("--largest-component", largest_component,
                 "Keep only the largest connected component of disconnected inputs");

    // ----- identify ------------------------------------------------------
    auto* identify = app.add_subcommand("identify", "Detect and rank minority structures");
    std::string id_graph, id_out;
    identify->add_option("graph", id_graph, "Edge-list file")->required();
    identify->add_option("-o,--output", id_out, "Output JSON path (default stdout)");

    // ----- sample --------------------------------------------------------
    auto* sample = app.add_subcommand("sample", "Draw a sample from a graph");
    std::string sm_graph, sm_algo = "mcgs", sm_out = "sample", sm_partition, sm_strategy = "random";
    double sm_rate = 0.3, sm_alpha = 1.0, sm_beta = 2.0;
    std::vector<double> sm_weights = {1.0, 0.0, 0.0};
    std::uint64_t sm_seed = 0;
    std::size_t sm_pool = 0;
    sample->add_option("graph", sm_graph, "Edge-list file")->required();
    sample->add_option("--algo", sm_algo, "mcgs or a baseline id (RN, RDN, RPN, RE, RNE, TIES, BF, DF, SB, FF, RW, RJ)");
    sample->add_option("--rate", sm_rate, "Sampling rate phi in (0, 1]")->required();
    sample->add_option("--alpha", sm_alpha, "Structure-selection divisor");
    sample->add_option("--beta", sm_beta, "Neighbor-quota divisor");
    sample->add_option("--weights", sm_weights, "Greedy loss weights w1 w2 w3")->expected(3);
    sample->add_option("--seed-strategy", sm_strategy,
                       "random | high_degree | high_betweenness | peripheral");
    sample->add_option("--rng-seed", sm_seed, "Base RNG seed");
    sample->add_option("--partition-file", sm_partition,
                       "One part per line, whitespace-separated node labels");
    sample->add_option("--greedy-pool", sm_pool,
                       "Candidates evaluated per greedy step (0 = all remaining)");
    sample->add_option("-o,--output", sm_out,
                       "Output basename; writes <name>.edges and <name>.json");

    // ----- evaluate ------------------------------------------------------
    auto* evaluate = app.add_subcommand("evaluate", "Score a sample against its parent graph");
    std::string ev_graph, ev_sample, ev_out;
    evaluate->add_option("graph", ev_graph, "Edge-list file")->required();
    evaluate->add_option("sample", ev_sample, "Sample sidecar JSON")->required();
    evaluate->add_option("-o,--output", ev_out, "Output JSON path (default stdout)");

    // ----- bench ---------------------------------------------------------
    auto* bench = app.add_subcommand("bench", "Run a trial plan");
    std::string bn_plan;
    bench->add_option("plan", bn_plan, "Trial plan JSON")->required();

    // ----- export --------------------------------------------------------
    auto* exp = app.add_subcommand("export", "Convert a graph to another format");
    std::string ex_graph, ex_format = "edges", ex_out;
    bool ex_structures = false;
    exp->add_option("graph", ex_graph, "Edge-list file")->required();
    exp->add_option("--format", ex_format, "edges | dot | graphml");
    exp->add_flag("--structures", ex_structures, "Annotate nodes with detected structures");
    exp->add_option("-o,--output", ex_out, "Output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*identify) {
            mcgs::Graph g = load_graph(id_graph, largest_component);
            auto ranked = mcgs::rank_all(mcgs::detect_structures(g), g);
            write_or_print(id_out, mcgs::catalog_to_json(ranked, g).dump(2) + "\n");
        } else if (*sample) {
            mcgs::Graph g = load_graph(sm_graph, largest_component);
            mcgs::SamplerConfig cfg;
            cfg.phi = sm_rate;
            cfg.alpha = sm_alpha;
            cfg.beta = sm_beta;
            cfg.weights = {sm_weights[0], sm_weights[1], sm_weights[2]};
            cfg.rng_seed = sm_seed;
            cfg.seed_strategy = mcgs::seed_strategy_from(sm_strategy);
            cfg.greedy_pool = sm_pool;

            std::vector<std::vector<mcgs::NodeId>> parts;
            if (!sm_partition.empty()) parts = load_partition(sm_partition, g);
            mcgs::Sample s =
                mcgs::run_sampler(sm_algo, g, cfg, parts.empty() ? nullptr : &parts);

            std::ostringstream edges;
            for (auto [u, v] : s.edges)
                edges << g.label(u) << ' ' << g.label(v) << '\n';
            write_or_print(sm_out + ".edges", edges.str());
            write_or_print(sm_out + ".json", mcgs::sample_sidecar(s, g).dump(2) + "\n");
            std::cerr << "sampled " << s.nodes.size() << " nodes, " << s.edges.size()
                      << " edges" << (s.overshoot ? " (minority overshoot)" : "") << '\n';
        } else if (*evaluate) {
            mcgs::Graph g = load_graph(ev_graph, largest_component);
            std::ifstream in(ev_sample);
            if (!in) throw mcgs::parse_error("cannot open sample file: " + ev_sample);
            nlohmann::json j;
            in >> j;
            mcgs::Sample s = mcgs::sample_from_sidecar(j, g);
            auto report = mcgs::evaluate_sample(g, s);
            report.graph_name = ev_graph;
            write_or_print(ev_out, mcgs::report_to_json(report).dump(2) + "\n");
        } else if (*bench) {
            std::ifstream in(bn_plan);
            if (!in) throw mcgs::parse_error("cannot open plan file: " + bn_plan);
            nlohmann::json j;
            in >> j;
            mcgs::TrialPlan plan = mcgs::plan_from_json(j);
            auto outcomes = mcgs::run_plan(plan);
            std::size_t failed = 0;
            for (const auto& o : outcomes)
                if (!o.ok) ++failed;
            std::cout << outcomes.size() << " trials, " << failed << " failed; reports in "
                      << plan.output_dir << '\n';
            return failed ? 1 : 0;
        } else if (*exp) {
            mcgs::Graph g = load_graph(ex_graph, largest_component);
            std::map<mcgs::NodeId, std::string> overlay;
            if (ex_structures) overlay = mcgs::structure_overlay(mcgs::detect_structures(g));
            const auto* attrs = ex_structures ? &overlay : nullptr;
            std::ostringstream out;
            if (ex_format == "edges") mcgs::export_edge_list(g, out);
            else if (ex_format == "dot") mcgs::export_dot(g, out, attrs);
            else if (ex_format == "graphml") mcgs::export_graphml(g, out, attrs);
            else throw mcgs::config_error("unknown export format: " + ex_format);
            write_or_print(ex_out, out.str());
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
