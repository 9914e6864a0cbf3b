#ifndef MCGS_METRICS_HPP
#define MCGS_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcgs/graph.hpp"
#include "mcgs/ranking.hpp"
#include "mcgs/sampling.hpp"
#include "mcgs/structure_detect.hpp"

namespace mcgs {

/// Canonical identity of a structure: kind plus the center/anchor id, or the
/// sorted key-node tuple for chains. Two structures are the same iff their
/// keys are equal.
struct MatchKey {
    StructureKind kind;
    std::vector<NodeId> key;

    bool operator==(const MatchKey&) const = default;
    bool operator<(const MatchKey& o) const {
        if (kind != o.kind) return kind < o.kind;
        return key < o.key;
    }
};

inline MatchKey match_key(const MinorityStructure& s) {
    MatchKey k{s.kind, {}};
    switch (s.kind) {
        case StructureKind::SuperPivot:
        case StructureKind::HugeStar:
        case StructureKind::ParachuteRim:
            k.key = {s.key_nodes[0]};
            break;
        case StructureKind::ChainRim:
        case StructureKind::Tie:
            k.key = s.key_nodes;
            std::sort(k.key.begin(), k.key.end());
            break;
    }
    return k;
}

/// Preservation rate divided by the sampling rate. Absent (nullopt) when the
/// original set is empty.
inline std::optional<double> mspr(const std::set<MatchKey>& orig,
                                  const std::set<MatchKey>& sampled, double phi) {
    if (!(phi > 0.0 && phi <= 1.0)) throw config_error("mspr: phi must be in (0, 1]");
    if (orig.empty()) return std::nullopt;
    std::size_t preserved = 0;
    for (const auto& k : sampled)
        if (orig.count(k)) ++preserved;
    return (static_cast<double>(preserved) / static_cast<double>(orig.size())) / phi;
}

/// Fraction of the sample's structures that do not exist in the original;
/// 0 when the sample has none.
inline double msgr(const std::set<MatchKey>& orig, const std::set<MatchKey>& sampled) {
    if (sampled.empty()) return 0.0;
    std::size_t fresh = 0;
    for (const auto& k : sampled)
        if (!orig.count(k)) ++fresh;
    return static_cast<double>(fresh) / static_cast<double>(sampled.size());
}

/// Mean preservation precision of the top-K ranked structures: the average
/// over i = 1..K of |Top_i(orig) ∩ Top_i(sampled)| / i. Lists shorter than K
/// contribute only their partial intersections.
inline double mip(const std::vector<MatchKey>& orig_ranked,
                  const std::vector<MatchKey>& sampled_ranked, std::size_t K) {
    if (K < 1) throw config_error("mip: K must be at least 1");
    double total = 0.0;
    for (std::size_t i = 1; i <= K; ++i) {
        std::set<MatchKey> top_o(orig_ranked.begin(),
                                 orig_ranked.begin() +
                                     static_cast<std::ptrdiff_t>(std::min(i, orig_ranked.size())));
        std::size_t inter = 0;
        for (std::size_t j = 0; j < std::min(i, sampled_ranked.size()); ++j)
            if (top_o.count(sampled_ranked[j])) ++inter;
        total += static_cast<double>(inter) / static_cast<double>(i);
    }
    return total / static_cast<double>(K);
}

namespace detail {

inline std::map<std::size_t, double> degree_distribution(const std::vector<std::size_t>& degs) {
    std::map<std::size_t, double> dist;
    for (std::size_t d : degs) dist[d] += 1.0;
    for (auto& [d, p] : dist) p /= static_cast<double>(degs.size());
    return dist;
}

} // namespace detail

/// Kolmogorov-Smirnov distance and skew divergence (skew 0.99) between the
/// normalized degree distributions of the graph and the induced sample.
inline std::pair<double, double> degree_metrics(const Graph& g, const Sample& s) {
    if (s.nodes.empty()) throw std::invalid_argument("degree_metrics: empty sample");
    std::vector<std::size_t> gd, sd;
    for (NodeId v = 0; v < g.node_count(); ++v) gd.push_back(g.degree(v));
    std::vector<std::size_t> sampled_degree(g.node_count(), 0);
    for (auto [u, v] : s.edges) {
        ++sampled_degree[u];
        ++sampled_degree[v];
    }
    for (NodeId v : s.nodes.sorted_items()) sd.push_back(sampled_degree[v]);

    auto pg = detail::degree_distribution(gd);
    auto ps = detail::degree_distribution(sd);

    std::set<std::size_t> support;
    for (const auto& [d, _] : pg) support.insert(d);
    for (const auto& [d, _] : ps) support.insert(d);

    double ksd = 0.0, cg = 0.0, cs = 0.0, sdd = 0.0;
    const double skew = 0.99;
    for (std::size_t d : support) {
        double p_g = pg.count(d) ? pg[d] : 0.0;
        double p_s = ps.count(d) ? ps[d] : 0.0;
        cg += p_g;
        cs += p_s;
        ksd = std::max(ksd, std::abs(cg - cs));
        if (p_s > 0.0) sdd += p_s * std::log(p_s / (skew * p_g + (1.0 - skew) * p_s));
    }
    return {ksd, sdd};
}

/// RCC = 1 / number of connected components of the sample; JI = mean over
/// sampled nodes of the neighborhood Jaccard between graph and sample.
inline std::pair<double, double> connectivity_similarity(const Graph& g, const Sample& s) {
    if (s.nodes.empty()) throw std::invalid_argument("connectivity_similarity: empty sample");
    double rcc = 1.0 / static_cast<double>(connected_component_count(g, s.nodes));

    std::vector<std::size_t> sampled_degree(g.node_count(), 0);
    for (auto [u, v] : s.edges) {
        ++sampled_degree[u];
        ++sampled_degree[v];
    }
    // The sample is induced, so its neighborhoods are subsets of the
    // original ones: intersection = sampled degree, union = original degree.
    double ji = 0.0;
    for (NodeId v : s.nodes.items()) {
        if (g.degree(v) == 0) continue;
        ji += static_cast<double>(sampled_degree[v]) / static_cast<double>(g.degree(v));
    }
    return {rcc, ji / static_cast<double>(s.nodes.size())};
}

/// Per-kind minority indicators plus majority metrics for one (graph, sample)
/// pair.
struct EvaluationReport {
    struct KindScores {
        std::optional<double> mspr;  // absent when the graph has none of this kind
        double msgr = 0.0;
        double mip = 0.0;
        std::size_t orig_count = 0;
        std::size_t sampled_count = 0;
    };
    KindScores pivots, stars, rims, ties;
    double ksd = 0.0, sdd = 0.0, rcc = 0.0, ji = 0.0;
    std::string algorithm;
    double phi = 0.0;
    std::uint64_t rng_seed = 0;
    std::string graph_name;

    const KindScores& of(StructureKind k) const {
        switch (k) {
            case StructureKind::SuperPivot: return pivots;
            case StructureKind::HugeStar: return stars;
            case StructureKind::ParachuteRim:
            case StructureKind::ChainRim: return rims;
            case StructureKind::Tie: return ties;
        }
        return pivots;
    }
};

namespace detail {

inline std::vector<MatchKey> ranked_keys(const std::vector<MinorityStructure>& list) {
    std::vector<MatchKey> out;
    out.reserve(list.size());
    for (const auto& s : list) out.push_back(match_key(s));
    return out;
}

inline std::vector<MatchKey> remap_keys(std::vector<MatchKey> keys,
                                        const std::vector<NodeId>& to_parent) {
    for (auto& k : keys) {
        for (auto& v : k.key) v = to_parent[v];
        std::sort(k.key.begin(), k.key.end());
    }
    return keys;
}

inline EvaluationReport::KindScores score_kind(const std::vector<MatchKey>& orig_ranked,
                                               const std::vector<MatchKey>& samp_ranked,
                                               double phi, std::size_t K) {
    EvaluationReport::KindScores ks;
    std::set<MatchKey> orig(orig_ranked.begin(), orig_ranked.end());
    std::set<MatchKey> samp(samp_ranked.begin(), samp_ranked.end());
    ks.orig_count = orig.size();
    ks.sampled_count = samp.size();
    ks.mspr = mspr(orig, samp, phi);
    ks.msgr = msgr(orig, samp);
    ks.mip = mip(orig_ranked, samp_ranked, K);
    return ks;
}

} // namespace detail

/// Runs the detectors on both the graph and the sample (as its own graph,
/// with its own thresholds) and computes every indicator. Structure keys from
/// the sample are mapped back to the parent graph's ids before matching.
inline EvaluationReport evaluate_sample(const Graph& g, const Sample& s, std::size_t K = 5) {
    if (s.nodes.empty()) throw std::invalid_argument("evaluate_sample: empty sample");
    EvaluationReport r;
    r.algorithm = s.algorithm;
    r.phi = s.config.phi;
    r.rng_seed = s.config.rng_seed;

    RankedSets orig = rank_all(detect_structures(g), g);

    std::vector<NodeId> to_parent;
    Graph sg = induced_subgraph(g, s.nodes, &to_parent);
    RankedSets samp = rank_all(detect_structures(sg), sg);

    auto score = [&](const std::vector<MinorityStructure>& o,
                     const std::vector<MinorityStructure>& sl) {
        return detail::score_kind(detail::ranked_keys(o),
                                  detail::remap_keys(detail::ranked_keys(sl), to_parent),
                                  s.config.phi, K);
    };
    r.pivots = score(orig.pivots, samp.pivots);
    r.stars = score(orig.stars, samp.stars);
    r.rims = score(orig.rims, samp.rims);
    r.ties = score(orig.ties, samp.ties);

    std::tie(r.ksd, r.sdd) = degree_metrics(g, s);
    std::tie(r.rcc, r.ji) = connectivity_similarity(g, s);
    return r;
}

} // namespace mcgs

#endif
