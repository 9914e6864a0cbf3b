#ifndef MCGS_STRUCTURE_DETECT_HPP
#define MCGS_STRUCTURE_DETECT_HPP

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mcgs/graph.hpp"

namespace mcgs {

enum class StructureKind { SuperPivot, HugeStar, ParachuteRim, ChainRim, Tie };

inline const char* to_string(StructureKind k) {
    switch (k) {
        case StructureKind::SuperPivot: return "super_pivot";
        case StructureKind::HugeStar: return "huge_star";
        case StructureKind::ParachuteRim: return "parachute_rim";
        case StructureKind::ChainRim: return "chain_rim";
        case StructureKind::Tie: return "tie";
    }
    return "?";
}

struct MinorityStructure {
    StructureKind kind;
    // Single center/anchor for pivots, stars and parachute rims; the ordered
    // chain for chain rims and ties.
    std::vector<NodeId> key_nodes;
    // Degree-1 leaves of a parachute rim; the terminal leaf of a chain rim.
    std::vector<NodeId> attached_nodes;
    double importance = 0.0;

    NodeId min_key() const { return *std::min_element(key_nodes.begin(), key_nodes.end()); }
};

/// Degree cutoffs for high-degree structures: mu admits the global top 5%
/// (ties at the threshold degree included), epsilon is the global mean degree.
struct DegreeThresholds {
    std::size_t mu = 1;
    double epsilon = 1.0;
};

inline DegreeThresholds degree_thresholds(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("degree_thresholds: empty graph");
    std::vector<std::size_t> degs(n);
    for (NodeId v = 0; v < n; ++v) degs[v] = g.degree(v);
    std::sort(degs.begin(), degs.end(), std::greater<>());
    std::size_t k = static_cast<std::size_t>(std::ceil(0.05 * static_cast<double>(n)));
    if (k == 0) k = 1;
    DegreeThresholds t;
    t.mu = degs[k - 1];
    t.epsilon = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
    return t;
}

struct PivotStarResult {
    std::vector<MinorityStructure> pivots;
    std::vector<MinorityStructure> stars;
};

/// Triangle-based super-pivot / huge-star detection. A DF traversal marks
/// every node seen forming a triangle with its predecessor and the node
/// before it; unmarked high-degree nodes are star candidates and get an exact
/// neighbor-interconnection check before being emitted as stars. High-degree
/// nodes that are not verified stars are pivots.
inline PivotStarResult detect_pivots_stars(const Graph& g, const DegreeThresholds& t) {
    const std::size_t n = g.node_count();
    std::vector<std::uint8_t> marked(n, 0), visited(n, 0);

    struct Frame {
        NodeId node;
        NodeId parent;
        std::size_t next = 0;
    };
    for (NodeId root = 0; root < n; ++root) {
        if (visited[root]) continue;
        std::vector<Frame> stack;
        stack.push_back({root, root});
        visited[root] = 1;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < g.neighbors(f.node).size()) {
                NodeId w = g.neighbors(f.node)[f.next++];
                if (visited[w]) continue;
                visited[w] = 1;
                if (f.node != f.parent && g.has_edge(w, f.parent)) {
                    marked[w] = marked[f.node] = marked[f.parent] = 1;
                }
                stack.push_back({w, f.node});
            } else {
                stack.pop_back();
            }
        }
    }

    auto neighbors_interconnect = [&](NodeId v) {
        // Exact check: is there any edge inside Gamma(v)?
        std::vector<std::uint8_t> in_nbr(n, 0);
        for (NodeId x : g.neighbors(v)) in_nbr[x] = 1;
        for (NodeId x : g.neighbors(v))
            for (NodeId y : g.neighbors(x))
                if (in_nbr[y]) return true;
        return false;
    };

    PivotStarResult out;
    for (NodeId v = 0; v < n; ++v) {
        const double d = static_cast<double>(g.degree(v));
        const bool pivot_degree = g.degree(v) >= t.mu;
        const bool star_degree = d >= t.epsilon;
        if (!pivot_degree && !star_degree) continue;
        bool is_pivot = marked[v] ? true : neighbors_interconnect(v);
        if (is_pivot && pivot_degree) {
            out.pivots.push_back({StructureKind::SuperPivot, {v}, {}, 0.0});
        } else if (!is_pivot && star_degree) {
            out.stars.push_back({StructureKind::HugeStar, {v}, {}, 0.0});
        }
    }
    return out;
}

inline PivotStarResult detect_pivots_stars(const Graph& g) {
    return detect_pivots_stars(g, degree_thresholds(g));
}

struct RimTieResult {
    std::vector<MinorityStructure> rims;
    std::vector<MinorityStructure> ties;
};

namespace detail {

inline std::vector<NodeId> degree_one_neighbors(const Graph& g, NodeId v) {
    std::vector<NodeId> out;
    for (NodeId x : g.neighbors(v))
        if (g.degree(x) == 1) out.push_back(x);
    return out;
}

inline MinorityStructure make_parachute(const Graph& g, NodeId anchor) {
    return {StructureKind::ParachuteRim, {anchor}, degree_one_neighbors(g, anchor), 0.0};
}

/// Classifies an ordered chain of cut points as a chain rim (an end with
/// exactly one degree-1 neighbor, which becomes the attached leaf) or a tie.
inline MinorityStructure classify_chain(const Graph& g, std::vector<NodeId> chain) {
    NodeId front = chain.front(), back = chain.back();
    auto front_leaves = degree_one_neighbors(g, front);
    auto back_leaves = degree_one_neighbors(g, back);
    bool front_ok = front_leaves.size() == 1;
    bool back_ok = back_leaves.size() == 1;
    if (front_ok || back_ok) {
        // Both ends qualifying still yields a single rim; the lower-id end wins.
        NodeId leaf;
        if (front_ok && back_ok) leaf = front < back ? front_leaves[0] : back_leaves[0];
        else leaf = front_ok ? front_leaves[0] : back_leaves[0];
        return {StructureKind::ChainRim, std::move(chain), {leaf}, 0.0};
    }
    return {StructureKind::Tie, std::move(chain), {}, 0.0};
}

} // namespace detail

/// Cut-point-based rim / tie detection: components of the cut-point-induced
/// subgraph become hyper nodes. Singletons are parachute rims; path-shaped
/// components are chains classified as rims or ties. Branching components are
/// split at branch nodes (cut-subgraph degree >= 3) into maximal pieces, each
/// classified on its own; cycles fall back to ties with a fixed ordering.
inline RimTieResult detect_rims_ties(const Graph& g) {
    const std::size_t n = g.node_count();
    NodeSet cps = cut_points(g);
    std::vector<std::uint8_t> is_cut(n, 0);
    for (NodeId v : cps.items()) is_cut[v] = 1;

    auto cut_neighbors = [&](NodeId v) {
        std::vector<NodeId> out;
        for (NodeId x : g.neighbors(v))
            if (is_cut[x]) out.push_back(x);
        return out;
    };

    RimTieResult out;
    std::vector<std::uint8_t> seen(n, 0);
    for (NodeId s : cps.sorted_items()) {
        if (seen[s]) continue;
        // Collect this hyper component.
        std::vector<NodeId> comp;
        std::vector<NodeId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (NodeId w : cut_neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (comp.size() == 1) {
            out.rims.push_back(detail::make_parachute(g, comp[0]));
            continue;
        }

        std::sort(comp.begin(), comp.end());
        std::vector<std::uint8_t> branch(n, 0), in_piece(n, 0);
        for (NodeId v : comp) {
            if (cut_neighbors(v).size() >= 3) branch[v] = 1;
            else in_piece[v] = 1;
        }

        // Pieces are the components of comp minus branch nodes.
        std::vector<std::uint8_t> piece_seen(n, 0);
        for (NodeId ps : comp) {
            if (!in_piece[ps] || piece_seen[ps]) continue;
            std::vector<NodeId> piece;
            std::vector<NodeId> pstack{ps};
            piece_seen[ps] = 1;
            while (!pstack.empty()) {
                NodeId u = pstack.back();
                pstack.pop_back();
                piece.push_back(u);
                for (NodeId w : cut_neighbors(u))
                    if (in_piece[w] && !piece_seen[w]) {
                        piece_seen[w] = 1;
                        pstack.push_back(w);
                    }
            }
            if (piece.size() == 1) {
                out.rims.push_back(detail::make_parachute(g, piece[0]));
                continue;
            }
            std::sort(piece.begin(), piece.end());
            std::vector<std::uint8_t> in_this(n, 0);
            for (NodeId v : piece) in_this[v] = 1;
            auto piece_nbrs = [&](NodeId v) {
                std::vector<NodeId> r;
                for (NodeId x : cut_neighbors(v))
                    if (in_this[x]) r.push_back(x);
                return r;
            };

            // Find a path endpoint; none means the piece is a cycle.
            NodeId start = piece[0];
            bool has_endpoint = false;
            for (NodeId v : piece)
                if (piece_nbrs(v).size() == 1) {
                    start = v;
                    has_endpoint = true;
                    break;
                }

            // Walk the chain in order.
            std::vector<NodeId> chain;
            std::vector<std::uint8_t> walked(n, 0);
            NodeId cur = start;
            while (true) {
                chain.push_back(cur);
                walked[cur] = 1;
                NodeId next = n;
                for (NodeId x : piece_nbrs(cur))
                    if (!walked[x]) {
                        next = x;
                        break;
                    }
                if (next == static_cast<NodeId>(n)) break;
                cur = next;
            }
            if (!has_endpoint) {
                out.ties.push_back({StructureKind::Tie, std::move(chain), {}, 0.0});
            } else {
                auto s2 = detail::classify_chain(g, std::move(chain));
                (s2.kind == StructureKind::ChainRim ? out.rims : out.ties).push_back(std::move(s2));
            }
        }
    }

    auto by_min_key = [](const MinorityStructure& a, const MinorityStructure& b) {
        return a.min_key() < b.min_key();
    };
    std::sort(out.rims.begin(), out.rims.end(), by_min_key);
    std::sort(out.ties.begin(), out.ties.end(), by_min_key);
    return out;
}

/// All four detector outputs for one graph.
struct StructureCatalog {
    std::vector<MinorityStructure> pivots;
    std::vector<MinorityStructure> stars;
    std::vector<MinorityStructure> rims;
    std::vector<MinorityStructure> ties;

    const std::vector<MinorityStructure>& of(StructureKind k) const {
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

inline StructureCatalog detect_structures(const Graph& g) {
    StructureCatalog c;
    auto ps = detect_pivots_stars(g);
    auto rt = detect_rims_ties(g);
    c.pivots = std::move(ps.pivots);
    c.stars = std::move(ps.stars);
    c.rims = std::move(rt.rims);
    c.ties = std::move(rt.ties);
    return c;
}

} // namespace mcgs

#endif
