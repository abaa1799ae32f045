#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "jfish/bitset.hpp"

namespace jfish {

// Simple undirected graph on vertices 0..n-1. No loops, no multi-edges;
// adjacency kept symmetric by construction.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n) : n_(checked_order(n)), adj_(static_cast<std::size_t>(n_)) {}

    int n() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("loop edge rejected");
        adj_[u].set(v);
        adj_[v].set(u);
    }
    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[u].reset(v);
        adj_[v].reset(u);
    }
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const VertexSet& adj(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
                e.emplace_back(u, v);
        return e;
    }

    VertexSet vertices() const { return VertexSet::full(n_); }

    bool is_complete() const {
        for (int v = 0; v < n_; ++v)
            if (degree(v) != n_ - 1) return false;
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    static int checked_order(int n) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("graph order out of range");
        return n;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

} // namespace jfish
