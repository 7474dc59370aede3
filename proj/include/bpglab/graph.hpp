#ifndef BPGLAB_GRAPH_HPP
#define BPGLAB_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bpglab {

/// Simple undirected graph on vertices 1..n. No loops, no multi-edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("graph: negative vertex count");
        adj_.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
        deg_.assign(n + 1, 0);
    }
    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[idx(u, v)] != 0;
    }

    void add_edge(int u, int v) { set_edge(u, v, true); }

    void set_edge(int u, int v, bool present) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("graph: loop edge");
        bool cur = adj_[idx(u, v)] != 0;
        if (cur == present) return;
        adj_[idx(u, v)] = adj_[idx(v, u)] = present ? 1 : 0;
        int d = present ? 1 : -1;
        deg_[u] += d;
        deg_[v] += d;
        m_ += d;
    }

    void toggle_edge(int u, int v) { set_edge(u, v, !has_edge(u, v)); }

    int degree(int v) const {
        check_vertex(v);
        return deg_[v];
    }

    std::vector<int> neighbours(int v) const {
        check_vertex(v);
        std::vector<int> out;
        out.reserve(deg_[v]);
        for (int u = 1; u <= n_; ++u)
            if (adj_[idx(v, u)]) out.push_back(u);
        return out;
    }

    /// Edges as pairs u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (adj_[idx(u, v)]) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * (n_ + 1) + v;
    }
    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw std::invalid_argument("graph: vertex out of range");
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<char> adj_;
    std::vector<int> deg_;
};

/// Disjoint union; vertex labels of the i-th graph are offset by the sizes of
/// the graphs before it.
Graph disjoint_union(std::span<const Graph> gs);
inline Graph disjoint_union(std::initializer_list<Graph> gs) {
    return disjoint_union(std::span<const Graph>(gs.begin(), gs.size()));
}

/// Subgraph induced by the vertex set s; relabeling is order-preserving
/// (the i-th smallest vertex of s becomes vertex i).
Graph induced_subgraph(const Graph& g, std::vector<int> s);

Graph remove_vertex(const Graph& g, int v);

}  // namespace bpglab

#endif
