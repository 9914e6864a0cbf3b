#ifndef MCGS_RANKING_HPP
#define MCGS_RANKING_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "mcgs/graph.hpp"
#include "mcgs/structure_detect.hpp"

namespace mcgs {

/// Importance score of a structure on its host graph.
///   pivot / star      -> degree of the center
///   parachute rim     -> number of degree-1 leaves
///   chain rim         -> chain length
///   tie               -> chain length lexicographically over the number of
///                        neighbors attaching to the two chain ends
inline double importance(const MinorityStructure& s, const Graph& g) {
    switch (s.kind) {
        case StructureKind::SuperPivot:
        case StructureKind::HugeStar:
            return static_cast<double>(g.degree(s.key_nodes[0]));
        case StructureKind::ParachuteRim:
            return static_cast<double>(s.attached_nodes.size());
        case StructureKind::ChainRim:
            return static_cast<double>(s.key_nodes.size());
        case StructureKind::Tie: {
            NodeSet in_chain(g.node_count());
            for (NodeId v : s.key_nodes) in_chain.insert(v);
            std::size_t end_neighbors = 0;
            for (NodeId e : {s.key_nodes.front(), s.key_nodes.back()}) {
                for (NodeId x : g.neighbors(e))
                    if (!in_chain.contains(x)) ++end_neighbors;
                if (s.key_nodes.size() == 1) break;
            }
            // Length dominates; the multiplier exceeds any end-neighbor count.
            const double big = 2.0 * static_cast<double>(g.node_count()) + 1.0;
            return static_cast<double>(s.key_nodes.size()) * big +
                   static_cast<double>(end_neighbors);
        }
    }
    return 0.0;
}

/// Per-kind lists in descending importance (lowest key id breaks ties).
struct RankedSets {
    std::vector<MinorityStructure> pivots;
    std::vector<MinorityStructure> stars;
    std::vector<MinorityStructure> rims;
    std::vector<MinorityStructure> ties;

    std::vector<const std::vector<MinorityStructure>*> lists() const {
        return {&pivots, &stars, &rims, &ties};
    }
    std::size_t total() const {
        return pivots.size() + stars.size() + rims.size() + ties.size();
    }
};

namespace detail {

inline std::vector<MinorityStructure> rank_one(std::vector<MinorityStructure> list,
                                               const Graph& g, double phi, double alpha) {
    for (auto& s : list) s.importance = importance(s, g);
    std::stable_sort(list.begin(), list.end(),
                     [](const MinorityStructure& a, const MinorityStructure& b) {
                         if (a.importance != b.importance) return a.importance > b.importance;
                         return a.min_key() < b.min_key();
                     });
    auto keep = static_cast<std::size_t>(
        std::ceil(static_cast<double>(list.size()) * (phi / alpha)));
    if (keep < list.size()) list.resize(keep);
    return list;
}

} // namespace detail

/// Ranks each kind by importance and keeps the top ceil(|list| * phi/alpha).
inline RankedSets rank_and_select(const StructureCatalog& catalog, const Graph& g,
                                  double phi, double alpha) {
    if (!(alpha > 0.0)) throw config_error("rank_and_select: alpha must be positive");
    if (!(phi > 0.0 && phi <= 1.0)) throw config_error("rank_and_select: phi must be in (0, 1]");
    RankedSets out;
    out.pivots = detail::rank_one(catalog.pivots, g, phi, alpha);
    out.stars = detail::rank_one(catalog.stars, g, phi, alpha);
    out.rims = detail::rank_one(catalog.rims, g, phi, alpha);
    out.ties = detail::rank_one(catalog.ties, g, phi, alpha);
    return out;
}

/// Full ranked lists (no truncation), used when reporting importance orders.
inline RankedSets rank_all(const StructureCatalog& catalog, const Graph& g) {
    return rank_and_select(catalog, g, 1.0, 1.0);
}

} // namespace mcgs

#endif
