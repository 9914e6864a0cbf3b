#ifndef MCGS_BASELINES_HPP
#define MCGS_BASELINES_HPP

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>
#include <vector>

#include "mcgs/graph.hpp"
#include "mcgs/rng.hpp"
#include "mcgs/sampling.hpp"

namespace mcgs {

enum class BaselineId { RN, RDN, RPN, RE, RNE, TIES, BF, DF, SB, FF, RW, RJ };

inline const char* to_string(BaselineId id) {
    switch (id) {
        case BaselineId::RN: return "RN";
        case BaselineId::RDN: return "RDN";
        case BaselineId::RPN: return "RPN";
        case BaselineId::RE: return "RE";
        case BaselineId::RNE: return "RNE";
        case BaselineId::TIES: return "TIES";
        case BaselineId::BF: return "BF";
        case BaselineId::DF: return "DF";
        case BaselineId::SB: return "SB";
        case BaselineId::FF: return "FF";
        case BaselineId::RW: return "RW";
        case BaselineId::RJ: return "RJ";
    }
    return "?";
}

inline BaselineId baseline_from(const std::string& name) {
    static const std::pair<const char*, BaselineId> table[] = {
        {"RN", BaselineId::RN},     {"RDN", BaselineId::RDN}, {"RPN", BaselineId::RPN},
        {"RE", BaselineId::RE},     {"RNE", BaselineId::RNE}, {"TIES", BaselineId::TIES},
        {"BF", BaselineId::BF},     {"DF", BaselineId::DF},   {"SB", BaselineId::SB},
        {"FF", BaselineId::FF},     {"RW", BaselineId::RW},   {"RJ", BaselineId::RJ}};
    for (auto [n, id] : table)
        if (name == n) return id;
    throw config_error("unknown baseline algorithm: " + name);
}

/// PageRank by power iteration, damping 0.85, L1 tolerance 1e-8.
inline std::vector<double> pagerank(const Graph& g, double damping = 0.85,
                                    double tol = 1e-8, std::size_t max_iter = 1000) {
    const std::size_t n = g.node_count();
    std::vector<double> rank(n, 1.0 / static_cast<double>(n)), next(n);
    for (std::size_t it = 0; it < max_iter; ++it) {
        double dangling = 0.0;
        for (NodeId v = 0; v < n; ++v)
            if (g.degree(v) == 0) dangling += rank[v];
        double base = (1.0 - damping + damping * dangling) / static_cast<double>(n);
        std::fill(next.begin(), next.end(), base);
        for (NodeId v = 0; v < n; ++v) {
            if (g.degree(v) == 0) continue;
            double share = damping * rank[v] / static_cast<double>(g.degree(v));
            for (NodeId w : g.neighbors(v)) next[w] += share;
        }
        double diff = 0.0;
        for (NodeId v = 0; v < n; ++v) diff += std::abs(next[v] - rank[v]);
        rank.swap(next);
        if (diff < tol) break;
    }
    return rank;
}

namespace detail {

// Weighted sampling without replacement by rejection over the full weights.
inline void weighted_fill(NodeSet& nodes, const std::vector<double>& weights,
                          std::size_t budget, Rng& rng) {
    std::vector<double> remaining = weights;
    double total = 0.0;
    for (double w : remaining) total += w;
    while (nodes.size() < budget) {
        double x = rng.uniform_real() * total;
        NodeId pick = 0;
        for (NodeId v = 0; v < remaining.size(); ++v) {
            x -= remaining[v];
            if (x < 0.0) {
                pick = v;
                break;
            }
            if (v + 1 == remaining.size()) pick = v;
        }
        if (nodes.insert(pick)) {
            total -= remaining[pick];
            remaining[pick] = 0.0;
        }
    }
}

inline NodeId random_unvisited(const NodeSet& nodes, const Graph& g, Rng& rng) {
    while (true) {
        NodeId v = static_cast<NodeId>(rng.uniform_index(g.node_count()));
        if (!nodes.contains(v)) return v;
    }
}

// Random edge picks (optionally via a random node first) until the node
// budget is met; a final edge never takes the set past the budget.
inline void edge_fill(NodeSet& nodes, const Graph& g, std::size_t budget, Rng& rng,
                      bool node_first) {
    auto edges = g.edges();
    while (nodes.size() < budget) {
        NodeId u, v;
        if (node_first) {
            u = static_cast<NodeId>(rng.uniform_index(g.node_count()));
            if (g.degree(u) == 0) continue;
            v = g.neighbors(u)[rng.uniform_index(g.degree(u))];
        } else {
            auto [a, b] = edges[rng.uniform_index(edges.size())];
            u = a;
            v = b;
        }
        nodes.insert(u);
        if (nodes.size() < budget) nodes.insert(v);
    }
}

// Shared traversal driver: BF/DF/SB differ only in frontier discipline and
// per-node branching cap.
inline void traversal_fill(NodeSet& nodes, const Graph& g, std::size_t budget,
                           NodeId seed, Rng& rng, bool breadth, std::size_t branch_cap) {
    std::deque<NodeId> frontier;
    NodeSet queued(g.node_count());
    auto enqueue = [&](NodeId v) {
        if (queued.insert(v)) frontier.push_back(v);
    };
    enqueue(seed);
    while (nodes.size() < budget) {
        if (frontier.empty()) enqueue(random_unvisited(nodes, g, rng));
        NodeId u;
        if (breadth) {
            u = frontier.front();
            frontier.pop_front();
        } else {
            u = frontier.back();
            frontier.pop_back();
        }
        nodes.insert(u);
        std::vector<NodeId> nbrs;
        for (NodeId w : g.neighbors(u))
            if (!queued.contains(w)) nbrs.push_back(w);
        if (branch_cap > 0 && nbrs.size() > branch_cap) {
            rng.partial_shuffle(nbrs, branch_cap);
            nbrs.resize(branch_cap);
            std::sort(nbrs.begin(), nbrs.end());
        }
        for (NodeId w : nbrs) enqueue(w);
    }
}

// Forest fire: burn a geometric number (forward probability p) of random
// unvisited neighbors from each burning node; rekindle from a random
// unvisited node when the fire dies out.
inline void forest_fire_fill(NodeSet& nodes, const Graph& g, std::size_t budget,
                             NodeId seed, Rng& rng, double p) {
    std::deque<NodeId> burning;
    auto ignite = [&](NodeId v) {
        if (nodes.size() < budget && nodes.insert(v)) burning.push_back(v);
    };
    ignite(seed);
    while (nodes.size() < budget) {
        if (burning.empty()) ignite(random_unvisited(nodes, g, rng));
        if (burning.empty()) continue;
        NodeId u = burning.front();
        burning.pop_front();
        std::size_t burn = 0;
        while (rng.bernoulli(p)) ++burn;
        std::vector<NodeId> nbrs;
        for (NodeId w : g.neighbors(u))
            if (!nodes.contains(w)) nbrs.push_back(w);
        if (burn > nbrs.size()) burn = nbrs.size();
        rng.partial_shuffle(nbrs, burn);
        std::sort(nbrs.begin(), nbrs.begin() + static_cast<std::ptrdiff_t>(burn));
        for (std::size_t i = 0; i < burn && nodes.size() < budget; ++i) ignite(nbrs[i]);
    }
}

// Random walk; with probability `jump_p` per step the walk teleports, either
// back to the seed (RW) or to a uniform random node (RJ). A stall guard
// teleports to an unvisited node if no progress is made for a long stretch.
inline void walk_fill(NodeSet& nodes, const Graph& g, std::size_t budget, NodeId seed,
                      Rng& rng, double jump_p, bool jump_to_seed) {
    const std::size_t stall_limit = 100 * g.node_count() + 100;
    NodeId cur = seed;
    nodes.insert(cur);
    std::size_t since_progress = 0;
    while (nodes.size() < budget) {
        if (since_progress > stall_limit) {
            cur = random_unvisited(nodes, g, rng);
        } else if (rng.bernoulli(jump_p)) {
            cur = jump_to_seed ? seed : static_cast<NodeId>(rng.uniform_index(g.node_count()));
        } else if (g.degree(cur) > 0) {
            cur = g.neighbors(cur)[rng.uniform_index(g.degree(cur))];
        }
        if (nodes.insert(cur)) since_progress = 0;
        else ++since_progress;
    }
}

} // namespace detail

/// Runs one reference sampler. Every baseline respects the node budget
/// floor(n * phi) exactly and finishes with induction over the node set.
inline Sample baseline_sample(BaselineId id, const Graph& g, const SamplerConfig& cfg,
                              NodeId seed_node) {
    cfg.validate(g.node_count());
    Rng rng(cfg.rng_seed);
    const std::size_t budget = cfg.budget(g.node_count());

    Sample s;
    s.nodes = NodeSet(g.node_count());
    s.algorithm = to_string(id);
    s.config = cfg;

    switch (id) {
        case BaselineId::RN: {
            std::vector<NodeId> all(g.node_count());
            for (NodeId v = 0; v < g.node_count(); ++v) all[v] = v;
            rng.partial_shuffle(all, budget);
            for (std::size_t i = 0; i < budget; ++i) s.nodes.insert(all[i]);
            break;
        }
        case BaselineId::RDN: {
            std::vector<double> w(g.node_count());
            for (NodeId v = 0; v < g.node_count(); ++v) w[v] = static_cast<double>(g.degree(v));
            detail::weighted_fill(s.nodes, w, budget, rng);
            break;
        }
        case BaselineId::RPN:
            detail::weighted_fill(s.nodes, pagerank(g), budget, rng);
            break;
        case BaselineId::RE:
        case BaselineId::TIES:
            detail::edge_fill(s.nodes, g, budget, rng, /*node_first=*/false);
            break;
        case BaselineId::RNE:
            detail::edge_fill(s.nodes, g, budget, rng, /*node_first=*/true);
            break;
        case BaselineId::BF:
            detail::traversal_fill(s.nodes, g, budget, seed_node, rng, /*breadth=*/true, 0);
            break;
        case BaselineId::DF:
            detail::traversal_fill(s.nodes, g, budget, seed_node, rng, /*breadth=*/false, 0);
            break;
        case BaselineId::SB:
            detail::traversal_fill(s.nodes, g, budget, seed_node, rng, /*breadth=*/true, 5);
            break;
        case BaselineId::FF:
            detail::forest_fire_fill(s.nodes, g, budget, seed_node, rng, 0.7);
            break;
        case BaselineId::RW:
            detail::walk_fill(s.nodes, g, budget, seed_node, rng, 0.15, /*jump_to_seed=*/true);
            break;
        case BaselineId::RJ:
            detail::walk_fill(s.nodes, g, budget, seed_node, rng, 0.15, /*jump_to_seed=*/false);
            break;
    }
    induce_edges(g, s);
    return s;
}

} // namespace mcgs

#endif
