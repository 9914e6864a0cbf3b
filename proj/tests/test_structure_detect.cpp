#include <doctest.h>

#include <chrono>
#include <set>

#include "mcgs/structure_detect.hpp"
#include "support.hpp"

using namespace mcgs;
namespace ts = testsupport;

namespace {

std::set<NodeId> centers(const std::vector<MinorityStructure>& list) {
    std::set<NodeId> out;
    for (const auto& s : list) out.insert(s.key_nodes[0]);
    return out;
}

std::set<std::set<NodeId>> key_sets(const std::vector<MinorityStructure>& list,
                                    StructureKind kind) {
    std::set<std::set<NodeId>> out;
    for (const auto& s : list)
        if (s.kind == kind) out.insert({s.key_nodes.begin(), s.key_nodes.end()});
    return out;
}

Graph circulant_4regular(std::size_t n) {
    ts::EdgeList e;
    for (NodeId v = 0; v < n; ++v) {
        e.push_back({v, static_cast<NodeId>((v + 1) % n)});
        e.push_back({v, static_cast<NodeId>((v + 2) % n)});
    }
    return Graph::from_edges(n, e);
}

} // namespace

TEST_CASE("degree_thresholds") {
    auto t1 = degree_thresholds(ts::star5());
    CHECK(t1.mu == 5);
    CHECK(t1.epsilon == doctest::Approx(5.0 / 3.0));

    auto t2 = degree_thresholds(circulant_4regular(100));
    CHECK(t2.mu == 4);
    CHECK(t2.epsilon == doctest::Approx(4.0));

    auto t3 = degree_thresholds(ts::barbell());
    CHECK(t3.mu == 3);
    CHECK(t3.epsilon == doctest::Approx(2.25));
}

TEST_CASE("detect_pivots_stars on fixtures") {
    auto star = detect_pivots_stars(ts::star5());
    CHECK(star.pivots.empty());
    CHECK(centers(star.stars) == std::set<NodeId>{0});

    // Every triangle node sits at the threshold degree and has
    // interconnected neighbors, so all three are super pivots.
    auto tri = detect_pivots_stars(ts::triangle());
    CHECK(centers(tri.pivots) == std::set<NodeId>{0, 1, 2});
    CHECK(tri.stars.empty());

    auto wheel = detect_pivots_stars(ts::wheel6());
    CHECK(centers(wheel.pivots) == std::set<NodeId>{0});
    CHECK(wheel.stars.empty());
}

TEST_CASE("detect_pivots_stars matches definitional oracle on random graphs") {
    Rng rng(1234);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 4 + rng.uniform_index(37);
        Graph g = ts::random_connected(n, rng.uniform_index(2 * n), rng);
        auto fast = detect_pivots_stars(g);
        auto oracle = ts::oracle_pivots_stars(g);
        CHECK(centers(fast.pivots) == oracle.pivots);
        CHECK(centers(fast.stars) == oracle.stars);
    }
}

TEST_CASE("emitted stars have no internal neighborhood edges") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = ts::random_connected(30, rng.uniform_index(25), rng);
        for (const auto& s : detect_pivots_stars(g).stars) {
            const auto& nbrs = g.neighbors(s.key_nodes[0]);
            for (std::size_t i = 0; i < nbrs.size(); ++i)
                for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                    CHECK(!g.has_edge(nbrs[i], nbrs[j]));
        }
    }
}

TEST_CASE("detect_rims_ties on fixtures") {
    auto para = detect_rims_ties(ts::parachute());
    REQUIRE(para.rims.size() == 1);
    CHECK(para.rims[0].kind == StructureKind::ParachuteRim);
    CHECK(para.rims[0].key_nodes == std::vector<NodeId>{2});
    CHECK(std::set<NodeId>(para.rims[0].attached_nodes.begin(),
                           para.rims[0].attached_nodes.end()) == std::set<NodeId>{3, 4, 5});
    CHECK(para.ties.empty());

    auto chain = detect_rims_ties(ts::chainrim());
    REQUIRE(chain.rims.size() == 1);
    CHECK(chain.rims[0].kind == StructureKind::ChainRim);
    CHECK(std::set<NodeId>(chain.rims[0].key_nodes.begin(), chain.rims[0].key_nodes.end()) ==
          std::set<NodeId>{2, 3});
    CHECK(chain.rims[0].attached_nodes == std::vector<NodeId>{4});
    CHECK(chain.ties.empty());

    auto bar = detect_rims_ties(ts::barbell());
    CHECK(bar.rims.empty());
    REQUIRE(bar.ties.size() == 1);
    CHECK(std::set<NodeId>(bar.ties[0].key_nodes.begin(), bar.ties[0].key_nodes.end()) ==
          std::set<NodeId>{2, 3, 4, 5});
}

TEST_CASE("detect_rims_ties matches hyper-node oracle on random graphs") {
    Rng rng(4321);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = 4 + rng.uniform_index(37);
        Graph g = ts::random_connected(n, rng.uniform_index(n), rng);
        auto fast = detect_rims_ties(g);
        auto oracle = ts::oracle_rims_ties(g);

        std::set<NodeId> anchors;
        for (const auto& r : fast.rims)
            if (r.kind == StructureKind::ParachuteRim) anchors.insert(r.key_nodes[0]);
        CHECK(anchors == oracle.parachute_anchors);
        CHECK(key_sets(fast.rims, StructureKind::ChainRim) == oracle.chain_rims);
        CHECK(key_sets(fast.ties, StructureKind::Tie) == oracle.ties);
    }
}

TEST_CASE("rim and tie key nodes are cut points") {
    Rng rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = ts::random_connected(35, rng.uniform_index(20), rng);
        auto cps = cut_points(g);
        auto rt = detect_rims_ties(g);
        for (const auto* list : {&rt.rims, &rt.ties})
            for (const auto& s : *list)
                for (NodeId v : s.key_nodes) CHECK(cps.contains(v));
    }
}

TEST_CASE("interior tie nodes of a plain bridge chain have degree 2") {
    auto bar = detect_rims_ties(ts::barbell());
    REQUIRE(bar.ties.size() == 1);
    const auto& key = bar.ties[0].key_nodes;
    Graph g = ts::barbell();
    for (std::size_t i = 1; i + 1 < key.size(); ++i) CHECK(g.degree(key[i]) == 2);
}

TEST_CASE("toy community graph yields all four kinds") {
    Graph g = ts::toy_communities();
    auto ps = detect_pivots_stars(g);
    auto rt = detect_rims_ties(g);
    CHECK(centers(ps.pivots) == std::set<NodeId>{1});
    CHECK(centers(ps.stars) == std::set<NodeId>{17});

    std::set<NodeId> anchors;
    for (const auto& r : rt.rims)
        if (r.kind == StructureKind::ParachuteRim) anchors.insert(r.key_nodes[0]);
    // node 17 is both a huge star and a (large) parachute rim
    CHECK(anchors == std::set<NodeId>{1, 17});
    CHECK(key_sets(rt.rims, StructureKind::ChainRim) == std::set<std::set<NodeId>>{{6, 15}});
    CHECK(key_sets(rt.ties, StructureKind::Tie) == std::set<std::set<NodeId>>{{4, 9, 10, 11}});
}

TEST_CASE("detector runtime grows near-linearly with edge count") {
    Rng rng(2024);
    Graph small = ts::random_connected(4000, 8000, rng);
    Graph big = ts::random_connected(8000, 16000, rng);
    auto time_detect = [](const Graph& g) {
        auto t0 = std::chrono::steady_clock::now();
        detect_pivots_stars(g);
        detect_rims_ties(g);
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    };
    time_detect(small);  // warm up
    double t_small = time_detect(small);
    double t_big = time_detect(big);
    // generous bound; this guards against accidental quadratic behavior only
    CHECK(t_big < 8.0 * t_small + 0.05);
}
