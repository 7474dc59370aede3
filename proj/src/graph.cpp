#include "bpglab/graph.hpp"

#include <algorithm>

namespace bpglab {

Graph disjoint_union(std::span<const Graph> gs) {
    int total = 0;
    for (const Graph& g : gs) total += g.vertex_count();
    Graph out(total);
    int base = 0;
    for (const Graph& g : gs) {
        for (auto [u, v] : g.edges()) out.add_edge(base + u, base + v);
        base += g.vertex_count();
    }
    return out;
}

Graph induced_subgraph(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("induced_subgraph: duplicate vertex");
    for (int v : s)
        if (v < 1 || v > g.vertex_count())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
    Graph out(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) out.add_edge(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return out;
}

Graph remove_vertex(const Graph& g, int v) {
    std::vector<int> keep;
    keep.reserve(g.vertex_count() - 1);
    for (int u = 1; u <= g.vertex_count(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

}  // namespace bpglab
