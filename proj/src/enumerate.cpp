#include "bpglab/enumerate.hpp"

#include <algorithm>
#include <map>

#include "bpglab/graph_io.hpp"
#include "bpglab/iso.hpp"

namespace bpglab {

std::vector<Graph> enumerate_graphs(int n, bool allow_large) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: negative n");
    int cap = allow_large ? kEnumerateHardCap : kEnumerateDefaultCap;
    if (n > cap) throw UnsupportedError("enumerate_graphs: n exceeds cap");
    std::vector<Graph> level{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::map<CanonicalCode, Graph> next;
        for (const Graph& base : level) {
            for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
                Graph g(k);
                for (auto [u, v] : base.edges()) g.add_edge(u, v);
                for (int v = 1; v < k; ++v)
                    if (mask >> (v - 1) & 1) g.add_edge(v, k);
                next.emplace(canonical_code(g), std::move(g));
            }
        }
        level.clear();
        level.reserve(next.size());
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    return level;
}

}  // namespace bpglab
