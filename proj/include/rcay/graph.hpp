#pragma once

#include <utility>
#include <vector>

namespace rcay {

struct Edge {
    int u = 0;
    int v = 0;
    int label = 0;

    bool operator==(const Edge&) const = default;
};

inline constexpr int kUnreachable = -1;

/// Simple undirected graph with an integer label per edge.
/// Edges are normalized to u < v and stored sorted by (u, v);
/// at most one edge per vertex pair.
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    /// (neighbor, edge index) pairs of u.
    const std::vector<std::pair<int, int>>& incident(int u) const {
        return adj_[static_cast<std::size_t>(u)];
    }

    /// Index of the edge between u and v, or -1.
    int edge_index(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

/// Unweighted shortest-path distances; kUnreachable marks unreachable vertices.
std::vector<int> bfs_distances(const LabeledGraph& g, int source);

bool is_connected(const LabeledGraph& g);

/// Max pairwise distance; throws if g is disconnected. single_source trusts
/// vertex-transitivity (valid for Cayley graphs) and uses source 0 only.
int diameter(const LabeledGraph& g, bool single_source = false);

}  // namespace rcay
