#include "rcay/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rcay {

LabeledGraph::LabeledGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 0) {
        throw std::invalid_argument("negative vertex count");
    }
    for (auto& e : edges_) {
        if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loops are not allowed");
        }
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.u, a.v, a.label) < std::tie(b.u, b.v, b.label);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
            throw std::invalid_argument("duplicate edge");
        }
    }
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        adj_[e.u].emplace_back(e.v, static_cast<int>(i));
        adj_[e.v].emplace_back(e.u, static_cast<int>(i));
    }
}

int LabeledGraph::edge_index(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return -1;
    for (const auto& [w, e] : adj_[static_cast<std::size_t>(u)]) {
        if (w == v) return e;
    }
    return -1;
}

std::vector<int> bfs_distances(const LabeledGraph& g, int source) {
    if (source < 0 || source >= g.num_vertices()) {
        throw std::invalid_argument("bfs source out of range");
    }
    std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), kUnreachable);
    std::vector<int> queue;
    queue.push_back(source);
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int x = queue[head];
        for (const auto& [y, e] : g.incident(x)) {
            (void)e;
            if (dist[static_cast<std::size_t>(y)] == kUnreachable) {
                dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

bool is_connected(const LabeledGraph& g) {
    if (g.num_vertices() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

int diameter(const LabeledGraph& g, bool single_source) {
    if (g.num_vertices() == 0) {
        throw std::invalid_argument("diameter of the empty graph");
    }
    int best = 0;
    const int last_source = single_source ? 0 : g.num_vertices() - 1;
    for (int s = 0; s <= last_source; ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d == kUnreachable) {
                throw std::runtime_error("diameter requires a connected graph");
            }
            best = std::max(best, d);
        }
    }
    return best;
}

}  // namespace rcay
