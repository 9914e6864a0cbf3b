#ifndef MCGS_HARNESS_HPP
#define MCGS_HARNESS_HPP

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcgs/baselines.hpp"
#include "mcgs/graph.hpp"
#include "mcgs/metrics.hpp"
#include "mcgs/sampling.hpp"

namespace mcgs {

/// Initial-seed selection for traversal-based samplers.
///   random           uniform node
///   high_degree      max-degree node, lowest id on tie
///   high_betweenness argmax betweenness, lowest id on tie
///   peripheral       far endpoint of a double BFS sweep
inline NodeId pick_seed(const Graph& g, SeedStrategy strategy, Rng& rng) {
    switch (strategy) {
        case SeedStrategy::Random:
            return static_cast<NodeId>(rng.uniform_index(g.node_count()));
        case SeedStrategy::HighDegree: {
            NodeId best = 0;
            for (NodeId v = 1; v < g.node_count(); ++v)
                if (g.degree(v) > g.degree(best)) best = v;
            return best;
        }
        case SeedStrategy::HighBetweenness: {
            auto bc = betweenness(g);
            NodeId best = 0;
            for (NodeId v = 1; v < g.node_count(); ++v)
                if (bc[v] > bc[best]) best = v;
            return best;
        }
        case SeedStrategy::Peripheral: {
            auto far_from = [&](NodeId s) {
                std::vector<std::int64_t> dist(g.node_count(), -1);
                std::vector<NodeId> queue{s};
                dist[s] = 0;
                NodeId last = s;
                for (std::size_t i = 0; i < queue.size(); ++i) {
                    NodeId u = queue[i];
                    for (NodeId w : g.neighbors(u))
                        if (dist[w] < 0) {
                            dist[w] = dist[u] + 1;
                            queue.push_back(w);
                            if (dist[w] > dist[last] || (dist[w] == dist[last] && w < last))
                                last = w;
                        }
                }
                return last;
            };
            return far_from(far_from(0));
        }
    }
    return 0;
}

/// Runs one sampler by name ("mcgs" or a baseline id), picking the seed node
/// per the configured strategy.
inline Sample run_sampler(const std::string& algorithm, const Graph& g,
                          const SamplerConfig& cfg,
                          const std::vector<std::vector<NodeId>>* partition = nullptr) {
    if (algorithm == "mcgs" || algorithm == "MCGS") return mcgs_sample(g, cfg, partition);
    Rng seed_rng(mix_seed(cfg.rng_seed, {0x5eedULL}));
    NodeId seed = pick_seed(g, cfg.seed_strategy, seed_rng);
    return baseline_sample(baseline_from(algorithm), g, cfg, seed);
}

// ---------------------------------------------------------------------------
// JSON serialization
// ---------------------------------------------------------------------------

inline nlohmann::json structure_to_json(const MinorityStructure& s, const Graph& g) {
    nlohmann::json j;
    j["kind"] = to_string(s.kind);
    for (NodeId v : s.key_nodes) j["key_nodes"].push_back(g.label(v));
    j["attached_nodes"] = nlohmann::json::array();
    for (NodeId v : s.attached_nodes) j["attached_nodes"].push_back(g.label(v));
    j["importance"] = s.importance;
    return j;
}

inline nlohmann::json catalog_to_json(const RankedSets& ranked, const Graph& g) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto* list : ranked.lists())
        for (const auto& s : *list) j.push_back(structure_to_json(s, g));
    return j;
}

inline nlohmann::json sample_sidecar(const Sample& s, const Graph& g) {
    nlohmann::json j;
    j["algorithm"] = s.algorithm;
    j["phi"] = s.config.phi;
    j["alpha"] = s.config.alpha;
    j["beta"] = s.config.beta;
    j["weights"] = s.config.weights;
    j["rng_seed"] = s.config.rng_seed;
    j["seed_strategy"] = to_string(s.config.seed_strategy);
    j["overshoot"] = s.overshoot;
    j["node_labels"] = nlohmann::json::array();
    for (NodeId v : s.nodes.sorted_items()) j["node_labels"].push_back(g.label(v));
    return j;
}

/// Rebuilds a Sample from its sidecar against the parent graph.
inline Sample sample_from_sidecar(const nlohmann::json& j, const Graph& g) {
    std::map<std::string, NodeId> by_label;
    for (NodeId v = 0; v < g.node_count(); ++v) by_label[g.label(v)] = v;
    Sample s;
    s.nodes = NodeSet(g.node_count());
    s.algorithm = j.value("algorithm", "unknown");
    s.config.phi = j.value("phi", 0.0);
    s.config.rng_seed = j.value("rng_seed", std::uint64_t{0});
    s.overshoot = j.value("overshoot", false);
    for (const auto& lbl : j.at("node_labels")) {
        auto it = by_label.find(lbl.get<std::string>());
        if (it == by_label.end())
            throw parse_error("sample references unknown node label: " + lbl.get<std::string>());
        s.nodes.insert(it->second);
    }
    induce_edges(g, s);
    return s;
}

namespace detail {

inline nlohmann::json kind_scores_to_json(const EvaluationReport::KindScores& ks) {
    nlohmann::json j;
    if (ks.mspr) j["mspr"] = *ks.mspr;
    else j["mspr"] = nullptr;
    j["msgr"] = ks.msgr;
    j["mip"] = ks.mip;
    j["orig_count"] = ks.orig_count;
    j["sampled_count"] = ks.sampled_count;
    return j;
}

} // namespace detail

inline nlohmann::json report_to_json(const EvaluationReport& r) {
    nlohmann::json j;
    j["graph"] = r.graph_name;
    j["algorithm"] = r.algorithm;
    j["phi"] = r.phi;
    j["rng_seed"] = r.rng_seed;
    j["super_pivot"] = detail::kind_scores_to_json(r.pivots);
    j["huge_star"] = detail::kind_scores_to_json(r.stars);
    j["rim"] = detail::kind_scores_to_json(r.rims);
    j["tie"] = detail::kind_scores_to_json(r.ties);
    j["ksd"] = r.ksd;
    j["sdd"] = r.sdd;
    j["rcc"] = r.rcc;
    j["ji"] = r.ji;
    return j;
}

// ---------------------------------------------------------------------------
// Export formats
// ---------------------------------------------------------------------------

inline void export_edge_list(const Graph& g, std::ostream& out) { serialize_edge_list(g, out); }

inline void export_dot(const Graph& g, std::ostream& out,
                       const std::map<NodeId, std::string>* node_attrs = nullptr) {
    out << "graph G {\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << "  \"" << g.label(v) << "\"";
        if (node_attrs) {
            auto it = node_attrs->find(v);
            if (it != node_attrs->end()) out << " [structure=\"" << it->second << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  \"" << g.label(u) << "\" -- \"" << g.label(v) << "\";\n";
    out << "}\n";
}

inline void export_graphml(const Graph& g, std::ostream& out,
                           const std::map<NodeId, std::string>* node_attrs = nullptr) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"d0\" for=\"node\" attr.name=\"structure\" attr.type=\"string\"/>\n"
        << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << "    <node id=\"" << g.label(v) << "\"";
        std::string attr;
        if (node_attrs) {
            auto it = node_attrs->find(v);
            if (it != node_attrs->end()) attr = it->second;
        }
        if (attr.empty()) out << "/>\n";
        else out << "><data key=\"d0\">" << attr << "</data></node>\n";
    }
    std::size_t eid = 0;
    for (auto [u, v] : g.edges())
        out << "    <edge id=\"e" << eid++ << "\" source=\"" << g.label(u) << "\" target=\""
            << g.label(v) << "\"/>\n";
    out << "  </graph>\n</graphml>\n";
}

/// Node id -> kind tag for overlaying detected structures on an export.
inline std::map<NodeId, std::string> structure_overlay(const StructureCatalog& c) {
    std::map<NodeId, std::string> attrs;
    auto tag = [&](const std::vector<MinorityStructure>& list) {
        for (const auto& s : list) {
            for (NodeId v : s.key_nodes) attrs[v] = to_string(s.kind);
            for (NodeId v : s.attached_nodes)
                if (!attrs.count(v)) attrs[v] = std::string(to_string(s.kind)) + "_leaf";
        }
    };
    tag(c.pivots);
    tag(c.stars);
    tag(c.rims);
    tag(c.ties);
    return attrs;
}

// ---------------------------------------------------------------------------
// Trial plans
// ---------------------------------------------------------------------------

struct TrialPlan {
    std::vector<std::string> graph_paths;
    std::vector<std::string> algorithms;
    std::vector<SeedStrategy> seed_strategies;
    std::vector<double> rates;
    std::size_t runs = 1;
    std::uint64_t base_seed = 0;
    double alpha = 1.0;
    double beta = 2.0;
    std::array<double, 3> weights = {1.0, 0.0, 0.0};
    std::size_t greedy_pool = 0;
    bool largest_component = false;
    std::string output_dir = "reports";

    void validate() const {
        if (runs < 1) throw config_error("plan: runs must be >= 1");
        if (graph_paths.empty()) throw config_error("plan: no graphs");
        if (algorithms.empty()) throw config_error("plan: no algorithms");
        if (seed_strategies.empty()) throw config_error("plan: no seed strategies");
        if (rates.empty()) throw config_error("plan: no rates");
        for (double r : rates)
            if (!(r > 0.0 && r <= 1.0)) throw config_error("plan: rates must lie in (0, 1]");
    }
};

inline TrialPlan plan_from_json(const nlohmann::json& j) {
    TrialPlan p;
    for (const auto& g : j.at("graphs")) p.graph_paths.push_back(g.get<std::string>());
    for (const auto& a : j.at("algorithms")) p.algorithms.push_back(a.get<std::string>());
    if (j.contains("seed_strategies"))
        for (const auto& s : j["seed_strategies"])
            p.seed_strategies.push_back(seed_strategy_from(s.get<std::string>()));
    else
        p.seed_strategies = {SeedStrategy::Random};
    for (const auto& r : j.at("rates")) p.rates.push_back(r.get<double>());
    p.runs = j.value("runs", std::size_t{1});
    p.base_seed = j.value("base_seed", std::uint64_t{0});
    p.alpha = j.value("alpha", 1.0);
    p.beta = j.value("beta", 2.0);
    if (j.contains("weights")) p.weights = j["weights"].get<std::array<double, 3>>();
    p.greedy_pool = j.value("greedy_pool", std::size_t{0});
    p.largest_component = j.value("largest_component", false);
    p.output_dir = j.value("output_dir", std::string("reports"));
    return p;
}

struct TrialOutcome {
    EvaluationReport report;
    bool ok = true;
    std::string error;
};

namespace detail {

inline double lower_median(std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[(xs.size() - 1) / 2];
}

inline double stddev(const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - mean) * (x - mean);
    return std::sqrt(var / static_cast<double>(xs.size()));
}

inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

} // namespace detail

/// Aggregates per-trial reports into a CSV table of lower medians and
/// standard deviations per algorithm x indicator (x kind).
inline std::string aggregate_csv(const std::vector<TrialOutcome>& outcomes) {
    // indicator rows in fixed order for byte-stable output
    const std::vector<std::string> kinds = {"super_pivot", "huge_star", "rim", "tie"};
    std::map<std::string, std::map<std::string, std::vector<double>>> by_algo;
    for (const auto& o : outcomes) {
        if (!o.ok) continue;
        auto& slot = by_algo[o.report.algorithm];
        auto put = [&](const std::string& name, double v) { slot[name].push_back(v); };
        const EvaluationReport& r = o.report;
        const EvaluationReport::KindScores* ks[] = {&r.pivots, &r.stars, &r.rims, &r.ties};
        for (std::size_t i = 0; i < 4; ++i) {
            if (ks[i]->mspr) put("mspr_" + kinds[i], *ks[i]->mspr);
            put("msgr_" + kinds[i], ks[i]->msgr);
            put("mip_" + kinds[i], ks[i]->mip);
        }
        put("ksd", r.ksd);
        put("sdd", r.sdd);
        put("rcc", r.rcc);
        put("ji", r.ji);
    }
    std::ostringstream out;
    out << "algorithm,indicator,median,stddev,trials\n";
    for (const auto& [algo, indicators] : by_algo)
        for (const auto& [name, values] : indicators)
            out << algo << ',' << name << ',' << detail::fmt(detail::lower_median(values)) << ','
                << detail::fmt(detail::stddev(values)) << ',' << values.size() << '\n';
    return out.str();
}

/// Runs every cell of the plan (graphs x seed strategies x rates x runs x
/// algorithms), writes one JSON report per trial plus aggregate.csv, and
/// returns all outcomes. Per-trial failures are recorded and the plan
/// continues.
inline std::vector<TrialOutcome> run_plan(const TrialPlan& plan) {
    plan.validate();
    namespace fs = std::filesystem;
    fs::create_directories(plan.output_dir);

    std::vector<TrialOutcome> outcomes;
    for (std::size_t gi = 0; gi < plan.graph_paths.size(); ++gi) {
        const std::string& path = plan.graph_paths[gi];
        std::ifstream in(path);
        if (!in) throw parse_error("cannot open graph file: " + path);
        Graph g = parse_edge_list(in, {plan.largest_component});
        std::string gname = fs::path(path).stem().string();

        for (std::size_t si = 0; si < plan.seed_strategies.size(); ++si)
            for (std::size_t ri = 0; ri < plan.rates.size(); ++ri)
                for (std::size_t run = 0; run < plan.runs; ++run)
                    for (std::size_t ai = 0; ai < plan.algorithms.size(); ++ai) {
                        SamplerConfig cfg;
                        cfg.phi = plan.rates[ri];
                        cfg.alpha = plan.alpha;
                        cfg.beta = plan.beta;
                        cfg.weights = plan.weights;
                        cfg.greedy_pool = plan.greedy_pool;
                        cfg.seed_strategy = plan.seed_strategies[si];
                        cfg.rng_seed = mix_seed(plan.base_seed, {gi, si, ri, run, ai});

                        TrialOutcome outcome;
                        try {
                            Sample s = run_sampler(plan.algorithms[ai], g, cfg);
                            outcome.report = evaluate_sample(g, s);
                            outcome.report.graph_name = gname;
                        } catch (const std::exception& e) {
                            outcome.ok = false;
                            outcome.error = e.what();
                        }

                        std::ostringstream name;
                        name << gname << '_' << plan.algorithms[ai] << "_s" << si << "_r" << ri
                             << "_run" << run << ".json";
                        std::ofstream rf(fs::path(plan.output_dir) / name.str());
                        if (outcome.ok) rf << report_to_json(outcome.report).dump(2) << '\n';
                        else rf << nlohmann::json{{"error", outcome.error}}.dump(2) << '\n';
                        outcomes.push_back(std::move(outcome));
                    }
    }
    std::ofstream agg(fs::path(plan.output_dir) / "aggregate.csv");
    agg << aggregate_csv(outcomes);
    return outcomes;
}

} // namespace mcgs

#endif
