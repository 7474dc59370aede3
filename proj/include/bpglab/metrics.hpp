#ifndef BPGLAB_METRICS_HPP
#define BPGLAB_METRICS_HPP

#include <optional>
#include <vector>

#include "bpglab/graph.hpp"

namespace bpglab {

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

/// BFS distances from src; -1 for vertices in other components.
std::vector<int> bfs_distances(const Graph& g, int src);

int distance(const Graph& g, int u, int v);  // -1 if disconnected

/// Two-colouring check; when bipartite and side != nullptr, side[v] is 0/1.
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);

/// Maximum independent set size, exact branch and bound per component.
int independence_number(const Graph& g);

/// Number of edges of a longest (not necessarily induced) path, computed per
/// component by dynamic programming over vertex subsets. Components above the
/// size cap are rejected.
constexpr int kPathNumberComponentCap = 20;
int path_number(const Graph& g);

struct GraphMetrics {
    std::vector<std::vector<int>> components;
    std::vector<std::vector<int>> distances;  // 1-based, [u][v], -1 across components
    int independence_number = 0;
    std::optional<int> path_number;  // absent when a component exceeds the cap
};

GraphMetrics graph_metrics(const Graph& g);

}  // namespace bpglab

#endif
