#include "bpglab/transform.hpp"

#include <stdexcept>

namespace bpglab {

Graph local_complement(const Graph& g, int v) {
    auto nb = g.neighbours(v);  // range-checks v
    Graph out = g;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) out.toggle_edge(nb[i], nb[j]);
    return out;
}

Graph pivot(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("pivot: uv is not an edge");
    return local_complement(local_complement(local_complement(g, u), v), u);
}

}  // namespace bpglab
