#ifndef MCGS_SAMPLING_HPP
#define MCGS_SAMPLING_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcgs/graph.hpp"
#include "mcgs/ranking.hpp"
#include "mcgs/rng.hpp"
#include "mcgs/structure_detect.hpp"

namespace mcgs {

enum class SeedStrategy { Random, HighDegree, HighBetweenness, Peripheral };

inline const char* to_string(SeedStrategy s) {
    switch (s) {
        case SeedStrategy::Random: return "random";
        case SeedStrategy::HighDegree: return "high_degree";
        case SeedStrategy::HighBetweenness: return "high_betweenness";
        case SeedStrategy::Peripheral: return "peripheral";
    }
    return "?";
}

inline SeedStrategy seed_strategy_from(const std::string& name) {
    if (name == "random") return SeedStrategy::Random;
    if (name == "high_degree") return SeedStrategy::HighDegree;
    if (name == "high_betweenness") return SeedStrategy::HighBetweenness;
    if (name == "peripheral") return SeedStrategy::Peripheral;
    throw config_error("unknown seed strategy: " + name);
}

struct SamplerConfig {
    double phi = 0.3;          // sampling rate
    double alpha = 1.0;        // structure-selection divisor
    double beta = 2.0;         // neighbor-quota divisor
    std::array<double, 3> weights = {1.0, 0.0, 0.0};  // degree-MSE, NCC, JI
    std::uint64_t rng_seed = 0;
    SeedStrategy seed_strategy = SeedStrategy::Random;
    std::size_t greedy_pool = 0;  // 0 = evaluate every remaining node

    void validate(std::size_t node_count) const {
        if (!(phi > 0.0 && phi <= 1.0)) throw config_error("phi must be in (0, 1]");
        if (!(alpha > 0.0)) throw config_error("alpha must be positive");
        if (!(beta > 0.0)) throw config_error("beta must be positive");
        double sum = weights[0] + weights[1] + weights[2];
        if (std::abs(sum - 1.0) > 1e-9) throw config_error("loss weights must sum to 1");
        for (double w : weights)
            if (w < 0.0 || w > 1.0) throw config_error("loss weights must lie in [0, 1]");
        if (phi * static_cast<double>(node_count) < 1.0)
            throw config_error("phi * n must be at least 1");
    }

    std::size_t budget(std::size_t node_count) const {
        return static_cast<std::size_t>(std::floor(phi * static_cast<double>(node_count)));
    }
};

struct Sample {
    NodeSet nodes;
    std::vector<std::pair<NodeId, NodeId>> edges;  // induced, g ids, u < v
    std::string algorithm;
    SamplerConfig config;
    bool overshoot = false;
};

/// Replaces the sample's edges with every original edge among its nodes.
inline void induce_edges(const Graph& g, Sample& s) {
    s.edges.clear();
    for (NodeId u : s.nodes.sorted_items())
        for (NodeId v : g.neighbors(u))
            if (u < v && s.nodes.contains(v)) s.edges.emplace_back(u, v);
}

/// STEP 3: puts every key and attached node of the selected structures into
/// the set, then draws ceil(|remaining neighbors| * phi/beta) of each
/// structure's not-yet-included key-node neighbors uniformly at random.
/// Kinds are visited in P, S, R, T order, lists in rank order.
inline NodeSet sample_minority(const Graph& g, const RankedSets& selected,
                               const SamplerConfig& cfg, Rng& rng) {
    NodeSet out(g.node_count());
    for (const auto* list : selected.lists()) {
        for (const auto& s : *list) {
            for (NodeId v : s.key_nodes) out.insert(v);
            for (NodeId v : s.attached_nodes) out.insert(v);

            // ms nodes: the single center, or the two chain ends.
            std::vector<NodeId> ms;
            if (s.kind == StructureKind::ChainRim || s.kind == StructureKind::Tie) {
                ms.push_back(s.key_nodes.front());
                if (s.key_nodes.size() > 1) ms.push_back(s.key_nodes.back());
            } else {
                ms.push_back(s.key_nodes[0]);
            }

            NodeSet gamma(g.node_count());
            for (NodeId m : ms)
                for (NodeId x : g.neighbors(m))
                    if (!out.contains(x)) gamma.insert(x);
            std::vector<NodeId> pool = gamma.sorted_items();
            if (pool.empty()) continue;
            auto quota = static_cast<std::size_t>(
                std::ceil(static_cast<double>(pool.size()) * cfg.phi / cfg.beta));
            if (quota < 1) quota = 1;
            if (quota > pool.size()) quota = pool.size();
            rng.partial_shuffle(pool, quota);
            for (std::size_t i = 0; i < quota; ++i) out.insert(pool[i]);
        }
    }
    return out;
}

/// Raw values of the three greedy objectives for one hypothetical sample.
struct LossTerms {
    double mse = 0.0;  // mean squared degree deviation over sampled nodes
    double ncc = 0.0;  // induced connected-component count
    double ji = 0.0;   // mean per-node neighborhood Jaccard
};

/// Incremental bookkeeping for the greedy step. Holds the current node set
/// plus running aggregates so that evaluating a candidate touches only the
/// candidate and its sampled neighbors.
class GreedyState {
public:
    GreedyState(const Graph& g, const NodeSet& initial)
        : g_(g),
          nodes_(g.node_count()),
          sampled_degree_(g.node_count(), 0),
          ds_(g.node_count()) {
        for (NodeId v : initial.items()) commit(v);
    }

    const NodeSet& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    /// Terms for nodes() + {candidate} without mutating anything.
    LossTerms evaluate(NodeId c) const {
        std::size_t dc = 0;
        double dev_delta = 0.0;
        double ji_delta = 0.0;
        roots_scratch_.clear();
        for (NodeId u : g_.neighbors(c)) {
            if (!nodes_.contains(u)) continue;
            ++dc;
            double gap = static_cast<double>(g_.degree(u)) - static_cast<double>(sampled_degree_[u]);
            dev_delta += (gap - 1.0) * (gap - 1.0) - gap * gap;
            ji_delta += 1.0 / static_cast<double>(g_.degree(u));
            roots_scratch_.push_back(ds_.find(u));
        }
        std::sort(roots_scratch_.begin(), roots_scratch_.end());
        std::size_t distinct_roots = static_cast<std::size_t>(
            std::distance(roots_scratch_.begin(),
                          std::unique(roots_scratch_.begin(), roots_scratch_.end())));
        const double gap_c = static_cast<double>(g_.degree(c)) - static_cast<double>(dc);
        const double new_size = static_cast<double>(nodes_.size() + 1);
        LossTerms t;
        t.mse = (squared_dev_ + dev_delta + gap_c * gap_c) / new_size;
        t.ncc = static_cast<double>(live_components_ + 1 - distinct_roots);
        t.ji = (ji_sum_ + ji_delta +
                static_cast<double>(dc) / static_cast<double>(g_.degree(c))) /
               new_size;
        return t;
    }

    /// Adds the node and updates all aggregates.
    void commit(NodeId c) {
        std::size_t dc = 0;
        for (NodeId u : g_.neighbors(c)) {
            if (!nodes_.contains(u)) continue;
            ++dc;
            double gap = static_cast<double>(g_.degree(u)) - static_cast<double>(sampled_degree_[u]);
            squared_dev_ += (gap - 1.0) * (gap - 1.0) - gap * gap;
            ji_sum_ += 1.0 / static_cast<double>(g_.degree(u));
            ++sampled_degree_[u];
        }
        nodes_.insert(c);
        ++live_components_;
        for (NodeId u : g_.neighbors(c)) {
            if (nodes_.contains(u) && ds_.unite(c, u)) --live_components_;
        }
        sampled_degree_[c] = dc;
        double gap_c = static_cast<double>(g_.degree(c)) - static_cast<double>(dc);
        squared_dev_ += gap_c * gap_c;
        ji_sum_ += static_cast<double>(dc) / static_cast<double>(g_.degree(c));
    }

    /// Terms for the current set itself (no candidate).
    LossTerms current_terms() const {
        LossTerms t;
        double sz = static_cast<double>(nodes_.size());
        if (sz > 0) {
            t.mse = squared_dev_ / sz;
            t.ji = ji_sum_ / sz;
        }
        t.ncc = static_cast<double>(live_components_);
        return t;
    }

private:
    const Graph& g_;
    NodeSet nodes_;
    std::vector<std::size_t> sampled_degree_;
    DisjointSet ds_;
    std::size_t live_components_ = 0;
    double squared_dev_ = 0.0;
    double ji_sum_ = 0.0;
    mutable std::vector<NodeId> roots_scratch_;
};

/// Loss value the greedy step minimizes: weighted sum of min-max-scaled MSE
/// and NCC minus scaled JI, with the scaling taken across the candidate terms
/// of a single iteration.
inline std::vector<double> scaled_losses(const std::vector<LossTerms>& terms,
                                         const std::array<double, 3>& w) {
    auto scale = [&](auto getter) {
        double lo = terms[0].*getter, hi = terms[0].*getter;
        for (const auto& t : terms) {
            lo = std::min(lo, t.*getter);
            hi = std::max(hi, t.*getter);
        }
        std::vector<double> out(terms.size(), 0.0);
        if (hi > lo)
            for (std::size_t i = 0; i < terms.size(); ++i)
                out[i] = (terms[i].*getter - lo) / (hi - lo);
        return out;
    };
    auto s_mse = scale(&LossTerms::mse);
    auto s_ncc = scale(&LossTerms::ncc);
    auto s_ji = scale(&LossTerms::ji);
    std::vector<double> loss(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i)
        loss[i] = w[0] * s_mse[i] + w[1] * s_ncc[i] - w[2] * s_ji[i];
    return loss;
}

/// STEP 4: repeatedly adds the loss-minimizing remaining node until the
/// budget is reached. Ties break toward the lowest node id. With greedy_pool
/// set, each step evaluates that many randomly drawn candidates instead of
/// every remaining node.
inline NodeSet greedy_majority(const Graph& g, const NodeSet& partial,
                               const SamplerConfig& cfg, Rng& rng) {
    const std::size_t budget = cfg.budget(g.node_count());
    GreedyState state(g, partial);
    std::vector<NodeId> remaining;  // kept ascending
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (!partial.contains(v)) remaining.push_back(v);

    std::vector<LossTerms> terms;
    std::vector<NodeId> pool;
    while (state.size() < budget && !remaining.empty()) {
        if (cfg.greedy_pool > 0 && cfg.greedy_pool < remaining.size()) {
            pool.clear();
            while (pool.size() < cfg.greedy_pool) {
                NodeId pick = remaining[rng.uniform_index(remaining.size())];
                if (std::find(pool.begin(), pool.end(), pick) == pool.end())
                    pool.push_back(pick);
            }
            std::sort(pool.begin(), pool.end());
        } else {
            pool = remaining;
        }
        terms.clear();
        terms.reserve(pool.size());
        for (NodeId c : pool) terms.push_back(state.evaluate(c));
        auto loss = scaled_losses(terms, cfg.weights);
        std::size_t best = 0;
        for (std::size_t i = 1; i < loss.size(); ++i)
            if (loss[i] < loss[best]) best = i;
        NodeId chosen = pool[best];
        state.commit(chosen);
        remaining.erase(std::lower_bound(remaining.begin(), remaining.end(), chosen));
    }
    return state.nodes();
}

namespace detail {

inline Sample run_pipeline_on(const Graph& g, const SamplerConfig& cfg, Rng& rng) {
    Sample s;
    s.nodes = NodeSet(g.node_count());
    s.algorithm = "mcgs";
    s.config = cfg;
    const std::size_t budget = cfg.budget(g.node_count());

    auto catalog = detect_structures(g);
    auto selected = rank_and_select(catalog, g, cfg.phi, cfg.alpha);
    NodeSet minority = sample_minority(g, selected, cfg, rng);
    if (minority.size() > budget) {
        s.overshoot = true;
        s.nodes = std::move(minority);
    } else {
        s.nodes = greedy_majority(g, minority, cfg, rng);
    }
    return s;
}

} // namespace detail

/// The four-step MCGS pipeline: detect, rank and select, minority-neighbor
/// sampling, greedy majority fill, final induction. With a partition, the
/// pipeline runs per part under per-part budgets and the union is induced
/// over the whole graph once.
inline Sample mcgs_sample(const Graph& g, const SamplerConfig& cfg,
                          const std::vector<std::vector<NodeId>>* partition = nullptr) {
    cfg.validate(g.node_count());
    Rng rng(cfg.rng_seed);

    if (!partition || partition->empty()) {
        Sample s = detail::run_pipeline_on(g, cfg, rng);
        induce_edges(g, s);
        return s;
    }

    Sample s;
    s.nodes = NodeSet(g.node_count());
    s.algorithm = "mcgs";
    s.config = cfg;
    for (const auto& part : *partition) {
        if (part.empty()) continue;
        NodeSet members(g.node_count());
        for (NodeId v : part) members.insert(v);
        std::vector<NodeId> to_parent;
        Graph sub = induced_subgraph(g, members, &to_parent);
        if (cfg.phi * static_cast<double>(sub.node_count()) < 1.0) continue;
        Sample part_sample = detail::run_pipeline_on(sub, cfg, rng);
        s.overshoot = s.overshoot || part_sample.overshoot;
        for (NodeId v : part_sample.nodes.items()) s.nodes.insert(to_parent[v]);
    }
    induce_edges(g, s);
    return s;
}

} // namespace mcgs

#endif
