#ifndef MCGS_GRAPH_HPP
#define MCGS_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <queue>
#include <span>
#include <sstream>
#include <stack>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mcgs {

using NodeId = std::uint32_t;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Membership set over dense node ids with O(1) contains and insertion-order iteration.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::size_t universe) : in_(universe, 0) {}

    bool contains(NodeId v) const { return v < in_.size() && in_[v]; }

    // Returns false if v was already present.
    bool insert(NodeId v) {
        if (v >= in_.size()) throw std::out_of_range("NodeSet: id outside universe");
        if (in_[v]) return false;
        in_[v] = 1;
        items_.push_back(v);
        return true;
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    std::size_t universe() const { return in_.size(); }

    /// Members in insertion order.
    const std::vector<NodeId>& items() const { return items_; }

    std::vector<NodeId> sorted_items() const {
        std::vector<NodeId> out = items_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::vector<std::uint8_t> in_;
    std::vector<NodeId> items_;
};

/// Union-find with union by rank and path halving; tracks the live set count.
class DisjointSet {
public:
    explicit DisjointSet(std::size_t n) : parent_(n), rank_(n, 0), count_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<NodeId>(i);
    }

    NodeId find(NodeId v) const {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    // Returns true if the two sets were merged.
    bool unite(NodeId a, NodeId b) {
        NodeId ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        --count_;
        return true;
    }

    std::size_t set_count() const { return count_; }

private:
    mutable std::vector<NodeId> parent_;
    std::vector<std::uint8_t> rank_;
    std::size_t count_;
};

/// Simple undirected graph over dense 0-based ids. Adjacency lists are sorted;
/// original input labels are kept for reporting and serialization.
class Graph {
public:
    Graph() = default;

    /// Builds from an edge list, dropping self-loops and duplicates.
    /// Labels default to the decimal id when not supplied.
    static Graph from_edges(std::size_t n, std::span<const std::pair<NodeId, NodeId>> edges,
                            std::vector<std::string> labels = {}) {
        Graph g;
        g.adj_.assign(n, {});
        for (auto [u, v] : edges) {
            if (u >= n || v >= n) throw std::out_of_range("Graph: edge endpoint out of range");
            if (u == v) continue;
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nbrs : g.adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
        std::size_t total = 0;
        for (const auto& nbrs : g.adj_) total += nbrs.size();
        g.edge_count_ = total / 2;
        if (labels.empty()) {
            g.labels_.reserve(n);
            for (std::size_t i = 0; i < n; ++i) g.labels_.push_back(std::to_string(i));
        } else {
            if (labels.size() != n) throw std::invalid_argument("Graph: label count mismatch");
            g.labels_ = std::move(labels);
        }
        return g;
    }

    std::size_t node_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
    std::size_t degree(NodeId v) const { return adj_[v].size(); }

    bool has_edge(NodeId u, NodeId v) const {
        const auto& nu = adj_[u];
        const auto& nv = adj_[v];
        const auto& smaller = nu.size() <= nv.size() ? nu : nv;
        NodeId other = nu.size() <= nv.size() ? v : u;
        return std::binary_search(smaller.begin(), smaller.end(), other);
    }

    const std::string& label(NodeId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::vector<std::pair<NodeId, NodeId>> edges() const {
        std::vector<std::pair<NodeId, NodeId>> out;
        out.reserve(edge_count_);
        for (NodeId u = 0; u < adj_.size(); ++u)
            for (NodeId v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool is_connected() const {
        if (adj_.empty()) return false;
        std::vector<std::uint8_t> seen(adj_.size(), 0);
        std::vector<NodeId> stack{0};
        seen[0] = 1;
        std::size_t visited = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            for (NodeId w : adj_[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++visited;
                    stack.push_back(w);
                }
        }
        return visited == adj_.size();
    }

private:
    std::vector<std::vector<NodeId>> adj_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
};

struct ParseOptions {
    // Keep only the largest connected component instead of rejecting
    // disconnected inputs.
    bool largest_component = false;
};

namespace detail {

inline std::vector<std::vector<NodeId>> component_node_lists(const Graph& g) {
    std::vector<std::vector<NodeId>> comps;
    std::vector<std::uint8_t> seen(g.node_count(), 0);
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        std::vector<NodeId> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            NodeId u = stack.back();
            stack.pop_back();
            comps.back().push_back(u);
            for (NodeId w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

} // namespace detail

/// Subgraph of g induced by `nodes`. Ids are remapped densely in ascending
/// order of the parent ids; labels carry over. `to_parent`, when given,
/// receives the child-id -> parent-id mapping.
inline Graph induced_subgraph(const Graph& g, const NodeSet& nodes,
                              std::vector<NodeId>* to_parent = nullptr) {
    if (nodes.empty()) throw std::invalid_argument("induced_subgraph: empty node set");
    std::vector<NodeId> members = nodes.sorted_items();
    std::vector<NodeId> to_child(g.node_count(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) to_child[members[i]] = static_cast<NodeId>(i);

    std::vector<std::pair<NodeId, NodeId>> edges;
    std::vector<std::string> labels;
    labels.reserve(members.size());
    for (NodeId u : members) {
        labels.push_back(g.label(u));
        for (NodeId v : g.neighbors(u))
            if (u < v && nodes.contains(v)) edges.emplace_back(to_child[u], to_child[v]);
    }
    if (to_parent) *to_parent = members;
    return Graph::from_edges(members.size(), edges, std::move(labels));
}

/// Number of connected components of the subgraph induced by `nodes`,
/// built incrementally on a DisjointSet. Empty set -> 0.
inline std::size_t connected_component_count(const Graph& g, const NodeSet& nodes) {
    if (nodes.empty()) return 0;
    const auto& members = nodes.items();
    std::vector<NodeId> to_local(g.node_count(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) to_local[members[i]] = static_cast<NodeId>(i);
    DisjointSet ds(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
        NodeId u = members[i];
        for (NodeId v : g.neighbors(u))
            if (nodes.contains(v)) ds.unite(static_cast<NodeId>(i), to_local[v]);
    }
    return ds.set_count();
}

/// Articulation points of g (all components), via one iterative low-link DFS.
inline NodeSet cut_points(const Graph& g) {
    const std::size_t n = g.node_count();
    if (n == 0) throw std::invalid_argument("cut_points: empty graph");
    NodeSet cuts(n);
    std::vector<std::uint32_t> disc(n, 0), low(n, 0);
    std::vector<NodeId> parent(n, n);
    std::uint32_t timer = 1;

    struct Frame {
        NodeId node;
        std::size_t next_child = 0;
        std::size_t dfs_children = 0;
    };

    for (NodeId root = 0; root < n; ++root) {
        if (disc[root]) continue;
        std::vector<Frame> stack;
        stack.push_back({root});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            NodeId u = f.node;
            if (f.next_child < g.neighbors(u).size()) {
                NodeId w = g.neighbors(u)[f.next_child++];
                if (!disc[w]) {
                    parent[w] = u;
                    ++f.dfs_children;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w});
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    NodeId p = stack.back().node;
                    low[p] = std::min(low[p], low[u]);
                    if (p != root && low[u] >= disc[p]) cuts.insert(p);
                }
                if (u == root && f.dfs_children >= 2) cuts.insert(root);
            }
        }
    }
    return cuts;
}

/// Exact unnormalized betweenness centrality (Brandes). Each unordered pair
/// is counted once.
inline std::vector<double> betweenness(const Graph& g) {
    const std::size_t n = g.node_count();
    std::vector<double> bc(n, 0.0);
    std::vector<std::int64_t> dist(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::vector<NodeId>> preds(n);
    std::vector<NodeId> order;
    order.reserve(n);

    for (NodeId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        order.clear();

        dist[s] = 0;
        sigma[s] = 1.0;
        std::queue<NodeId> q;
        q.push(s);
        while (!q.empty()) {
            NodeId u = q.front();
            q.pop();
            order.push_back(u);
            for (NodeId w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    q.push(w);
                }
                if (dist[w] == dist[u] + 1) {
                    sigma[w] += sigma[u];
                    preds[w].push_back(u);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            NodeId w = *it;
            for (NodeId u : preds[w]) delta[u] += sigma[u] / sigma[w] * (1.0 + delta[w]);
            if (w != s) bc[w] += delta[w];
        }
    }
    for (double& b : bc) b /= 2.0;
    return bc;
}

/// Parses "u v" edge lines. '#' and '%' lines are comments; labels are
/// arbitrary tokens remapped to dense ids in first-appearance order.
/// Self-loops and duplicate edges are dropped.
inline Graph parse_edge_list(std::istream& in, const ParseOptions& opts = {}) {
    std::unordered_map<std::string, NodeId> id_of;
    std::vector<std::string> labels;
    std::vector<std::pair<NodeId, NodeId>> edges;
    std::string line;
    std::size_t line_no = 0;

    auto intern = [&](const std::string& tok) {
        auto [it, fresh] = id_of.try_emplace(tok, static_cast<NodeId>(labels.size()));
        if (fresh) labels.push_back(tok);
        return it->second;
    };

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#' || line[start] == '%') continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra)) {
            throw parse_error("line " + std::to_string(line_no) + ": expected two tokens");
        }
        NodeId ua = intern(a);
        NodeId ub = intern(b);
        edges.emplace_back(ua, ub);
    }
    if (labels.empty()) throw parse_error("empty graph");

    const std::size_t n = labels.size();
    Graph g = Graph::from_edges(n, edges, std::move(labels));
    if (!g.is_connected()) {
        if (!opts.largest_component)
            throw parse_error("graph is disconnected (use largest-component extraction to proceed)");
        auto comps = detail::component_node_lists(g);
        auto largest = std::max_element(comps.begin(), comps.end(),
                                        [](const auto& a, const auto& b) { return a.size() < b.size(); });
        NodeSet keep(g.node_count());
        for (NodeId v : *largest) keep.insert(v);
        g = induced_subgraph(g, keep);
    }
    return g;
}

inline Graph parse_edge_list(const std::string& text, const ParseOptions& opts = {}) {
    std::istringstream in(text);
    return parse_edge_list(in, opts);
}

/// Writes "label label" lines, canonically ordered by the label pair so the
/// output depends only on the labeled graph, not on internal ids.
inline void serialize_edge_list(const Graph& g, std::ostream& out) {
    std::vector<std::pair<std::string, std::string>> lines;
    lines.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        std::string a = g.label(u), b = g.label(v);
        if (b < a) std::swap(a, b);
        lines.emplace_back(std::move(a), std::move(b));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& [a, b] : lines) out << a << ' ' << b << '\n';
}

} // namespace mcgs

#endif
