// Test-only fixtures, random graph generators, and independent brute-force
// oracles. Nothing here may call into the fast detector implementations it is
// used to check.
#ifndef MCGS_TESTS_SUPPORT_HPP
#define MCGS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "mcgs/graph.hpp"
#include "mcgs/rng.hpp"
#include "mcgs/structure_detect.hpp"

namespace testsupport {

using mcgs::Graph;
using mcgs::NodeId;
using mcgs::NodeSet;

using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

inline Graph make(std::size_t n, EdgeList edges) { return Graph::from_edges(n, edges); }

// center 0, leaves 1..5
inline Graph star5() { return make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}); }

inline Graph path4() { return make(4, {{0, 1}, {1, 2}, {2, 3}}); }

inline Graph triangle() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }

// triangle 0,1,2 with leaves 3,4,5 on node 2
inline Graph parachute() {
    return make(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 4}, {2, 5}});
}

// triangle 0,1,2; chain 2-3; leaf 4 on 3
inline Graph chainrim() { return make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}}); }

// triangles {0,1,2} and {5,6,7} joined by path 2-3-4-5
inline Graph barbell() {
    return make(8, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
}

// hub 0 joined to the 5-cycle 1..5
inline Graph wheel6() {
    return make(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                    {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}});
}

/// Toy two-community graph carrying all four minority structure kinds:
///   super pivot 1 (degree 6, interconnected neighborhood, also a parachute
///   anchor), huge star 17 (hub on community B, leaves 18..22), parachute
///   rims at 1 and 17, chain rim {6, 15} with leaf 16, and the tie chain
///   4 - 10 - 11 - 9, the only connection between the two communities.
inline Graph toy_communities() {
    EdgeList e = {
        // community A: 5-cycle 0..4 with chords
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3}, {0, 3},
        // community B: 5-cycle 5..9 with chords
        {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}, {5, 7}, {6, 8}, {5, 8},
        // tie between the communities
        {4, 10}, {10, 11}, {11, 9},
        // parachute leaves on node 1
        {1, 12}, {1, 13}, {1, 14},
        // chain rim hanging off community B
        {6, 15}, {15, 16},
        // star hub 17 on community B, leaves 18..22
        {17, 8}, {17, 18}, {17, 19}, {17, 20}, {17, 21}, {17, 22}};
    return make(23, e);
}

/// Desk-scale fixture (50 nodes): three clique communities carrying all four
/// structure kinds. Cliques keep their sampled subsets 2-connected, so the
/// cut structure of a sample mirrors the original.
///   A = clique 0..11 and R = clique 12..24 (minus the 12-13 edge); tie chain
///   2 - 25 - 26 - 14 is the only connection between them; huge star hub 27
///   (leaves 28..35) is anchored on the non-adjacent pair 12 and 13, so the
///   hub doubles as a parachute rim and neither anchor is ever a cut point.
///   Every R node clears the pivot threshold, which keeps the anchors inside
///   the guaranteed minority at sampling rates down to one half.
inline Graph desk_communities() {
    EdgeList e;
    auto clique = [&](NodeId lo, NodeId hi) {
        for (NodeId u = lo; u < hi; ++u)
            for (NodeId v = static_cast<NodeId>(u + 1); v <= hi; ++v)
                if (!(u == 12 && v == 13)) e.push_back({u, v});
    };
    clique(0, 11);
    clique(12, 24);
    e.insert(e.end(), {{2, 25}, {25, 26}, {26, 14}});  // tie
    e.insert(e.end(), {{27, 12}, {27, 13}});           // star hub anchors
    for (NodeId t = 28; t <= 35; ++t) e.push_back({27, t});
    return make(36, e);
}

/// Connected random graph: random spanning tree plus extra random edges.
inline Graph random_connected(std::size_t n, std::size_t extra_edges, mcgs::Rng& rng) {
    EdgeList e;
    for (NodeId v = 1; v < n; ++v)
        e.push_back({static_cast<NodeId>(rng.uniform_index(v)), v});
    for (std::size_t i = 0; i < extra_edges; ++i) {
        NodeId u = static_cast<NodeId>(rng.uniform_index(n));
        NodeId v = static_cast<NodeId>(rng.uniform_index(n));
        if (u != v) e.push_back({std::min(u, v), std::max(u, v)});
    }
    return make(n, e);
}

/// Preferential-attachment graph (scale-free-ish): each new node attaches to
/// `m` targets drawn from the degree-weighted endpoint pool.
inline Graph preferential_attachment(std::size_t n, std::size_t m, mcgs::Rng& rng) {
    EdgeList e;
    std::vector<NodeId> endpoint_pool;
    for (NodeId v = 0; v + 1 < m + 1; ++v) {
        e.push_back({v, static_cast<NodeId>(v + 1)});
        endpoint_pool.push_back(v);
        endpoint_pool.push_back(static_cast<NodeId>(v + 1));
    }
    for (NodeId v = static_cast<NodeId>(m + 1); v < n; ++v) {
        std::set<NodeId> targets;
        while (targets.size() < m)
            targets.insert(endpoint_pool[rng.uniform_index(endpoint_pool.size())]);
        for (NodeId t : targets) {
            e.push_back({t, v});
            endpoint_pool.push_back(t);
            endpoint_pool.push_back(v);
        }
    }
    return make(n, e);
}

// ---------------------------------------------------------------------------
// Brute-force oracles
// ---------------------------------------------------------------------------

inline std::size_t oracle_component_count(const Graph& g, const std::set<NodeId>& nodes) {
    std::set<NodeId> seen;
    std::size_t comps = 0;
    for (NodeId s : nodes) {
        if (seen.count(s)) continue;
        ++comps;
        std::vector<NodeId> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(u))
                if (nodes.count(w) && !seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

/// Articulation points by node removal and recount within the node's own
/// component.
inline std::set<NodeId> oracle_cut_points(const Graph& g) {
    std::set<NodeId> all;
    for (NodeId v = 0; v < g.node_count(); ++v) all.insert(v);
    std::set<NodeId> cuts;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        // component of v
        std::set<NodeId> comp;
        std::vector<NodeId> stack{v};
        comp.insert(v);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(u))
                if (!comp.count(w)) {
                    comp.insert(w);
                    stack.push_back(w);
                }
        }
        comp.erase(v);
        if (comp.empty()) continue;
        if (oracle_component_count(g, comp) > 1) cuts.insert(v);
    }
    return cuts;
}

struct OraclePivotsStars {
    std::set<NodeId> pivots;
    std::set<NodeId> stars;
};

/// Definitional super-pivot / huge-star classification: degree thresholds
/// from a degree sort, neighbor interconnection by pairwise edge lookups.
inline OraclePivotsStars oracle_pivots_stars(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::size_t> degs;
    for (NodeId v = 0; v < n; ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end(), std::greater<>());
    std::size_t k = static_cast<std::size_t>(std::ceil(0.05 * static_cast<double>(n)));
    if (k == 0) k = 1;
    const std::size_t mu = degs[k - 1];
    const double epsilon = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);

    OraclePivotsStars out;
    for (NodeId v = 0; v < n; ++v) {
        bool interconnect = false;
        const auto& nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size() && !interconnect; ++i)
            for (std::size_t j = i + 1; j < nbrs.size() && !interconnect; ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) interconnect = true;
        if (interconnect && g.degree(v) >= mu) out.pivots.insert(v);
        if (!interconnect && static_cast<double>(g.degree(v)) >= epsilon) out.stars.insert(v);
    }
    return out;
}

struct OracleRimTie {
    // parachute anchors, chain-rim key sets and tie key sets
    std::set<NodeId> parachute_anchors;
    std::set<std::set<NodeId>> chain_rims;
    std::set<std::set<NodeId>> ties;
};

/// Hyper-node classification over the removal-oracle cut points, written
/// against adjacency lookups only.
inline OracleRimTie oracle_rims_ties(const Graph& g) {
    auto cuts = oracle_cut_points(g);
    OracleRimTie out;

    auto cut_deg = [&](NodeId v) {
        std::size_t d = 0;
        for (NodeId w : g.neighbors(v))
            if (cuts.count(w)) ++d;
        return d;
    };
    auto leaf_count = [&](NodeId v) {
        std::size_t c = 0;
        for (NodeId w : g.neighbors(v))
            if (g.degree(w) == 1) ++c;
        return c;
    };

    std::set<NodeId> seen;
    for (NodeId s : cuts) {
        if (seen.count(s)) continue;
        std::set<NodeId> comp;
        std::vector<NodeId> stack{s};
        comp.insert(s);
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId w : g.neighbors(u))
                if (cuts.count(w) && !comp.count(w)) {
                    comp.insert(w);
                    stack.push_back(w);
                }
        }
        seen.insert(comp.begin(), comp.end());

        if (comp.size() == 1) {
            out.parachute_anchors.insert(*comp.begin());
            continue;
        }
        // split at branch nodes (cut-subgraph degree >= 3)
        std::set<NodeId> rest;
        for (NodeId v : comp)
            if (cut_deg(v) < 3) rest.insert(v);
        std::set<NodeId> pseen;
        for (NodeId ps : rest) {
            if (pseen.count(ps)) continue;
            std::set<NodeId> piece;
            std::vector<NodeId> pstack{ps};
            piece.insert(ps);
            while (!pstack.empty()) {
                NodeId u = pstack.back();
                pstack.pop_back();
                for (NodeId w : g.neighbors(u))
                    if (rest.count(w) && !piece.count(w)) {
                        piece.insert(w);
                        pstack.push_back(w);
                    }
            }
            pseen.insert(piece.begin(), piece.end());
            if (piece.size() == 1) {
                out.parachute_anchors.insert(*piece.begin());
                continue;
            }
            // endpoints within the piece
            std::vector<NodeId> ends;
            for (NodeId v : piece) {
                std::size_t d = 0;
                for (NodeId w : g.neighbors(v))
                    if (piece.count(w)) ++d;
                if (d == 1) ends.push_back(v);
            }
            bool is_rim = false;
            for (NodeId e : ends)
                if (leaf_count(e) == 1) is_rim = true;
            if (ends.empty()) {
                out.ties.insert(piece);  // cycle component
            } else if (is_rim) {
                out.chain_rims.insert(piece);
            } else {
                out.ties.insert(piece);
            }
        }
    }
    return out;
}

/// Exact induced edge set by pairwise lookup.
inline std::set<std::pair<NodeId, NodeId>> oracle_induced_edges(const Graph& g,
                                                                const std::vector<NodeId>& nodes) {
    std::set<std::pair<NodeId, NodeId>> out;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            NodeId u = std::min(nodes[i], nodes[j]), v = std::max(nodes[i], nodes[j]);
            if (g.has_edge(u, v)) out.insert({u, v});
        }
    return out;
}

/// All-pairs shortest-path betweenness via per-source BFS path counting.
inline std::vector<double> oracle_betweenness(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<std::int64_t>> dist(n, std::vector<std::int64_t>(n, -1));
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    for (NodeId s = 0; s < n; ++s) {
        dist[s][s] = 0;
        sigma[s][s] = 1.0;
        std::vector<NodeId> queue{s};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            NodeId u = queue[i];
            for (NodeId w : g.neighbors(u)) {
                if (dist[s][w] < 0) {
                    dist[s][w] = dist[s][u] + 1;
                    queue.push_back(w);
                }
                if (dist[s][w] == dist[s][u] + 1) sigma[s][w] += sigma[s][u];
            }
        }
    }
    std::vector<double> bc(n, 0.0);
    for (NodeId s = 0; s < n; ++s)
        for (NodeId t = s + 1; t < n; ++t) {
            if (dist[s][t] < 0) continue;
            for (NodeId v = 0; v < n; ++v) {
                if (v == s || v == t) continue;
                if (dist[s][v] >= 0 && dist[v][t] >= 0 && dist[s][v] + dist[v][t] == dist[s][t])
                    bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
            }
        }
    return bc;
}

} // namespace testsupport

#endif
