#include "bpglab/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace bpglab {

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n + 1, 0);
    std::vector<std::vector<int>> out;
    for (int s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::deque<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            comp.push_back(v);
            for (int u : g.neighbours(v))
                if (!seen[u]) {
                    seen[u] = 1;
                    q.push_back(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count() + 1, -1);
    dist[src] = 0;
    std::deque<int> q{src};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int u : g.neighbours(v))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    return dist;
}

int distance(const Graph& g, int u, int v) { return bfs_distances(g, u)[v]; }

bool is_bipartite(const Graph& g, std::vector<int>* side) {
    int n = g.vertex_count();
    std::vector<int> col(n + 1, -1);
    for (int s = 1; s <= n; ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int u : g.neighbours(v)) {
                if (col[u] < 0) {
                    col[u] = 1 - col[v];
                    q.push_back(u);
                } else if (col[u] == col[v]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = std::move(col);
    return true;
}

namespace {

int mis_component(const Graph& g, const std::vector<int>& verts) {
    // Branch on a max-degree vertex: either exclude it or take it and drop
    // its closed neighbourhood.
    struct Solver {
        const Graph& g;
        int best = 0;
        explicit Solver(const Graph& gg) : g(gg) {}
        void run(std::vector<int> live, int have) {
            while (true) {
                if (have + static_cast<int>(live.size()) <= best) return;
                if (live.empty()) {
                    best = std::max(best, have);
                    return;
                }
                auto deg_in = [&](int v) {
                    int d = 0;
                    for (int u : live)
                        if (u != v && g.has_edge(u, v)) ++d;
                    return d;
                };
                int pick = live[0], dmax = -1;
                for (int v : live) {
                    int d = deg_in(v);
                    if (d > dmax) {
                        dmax = d;
                        pick = v;
                    }
                }
                if (dmax <= 1) {
                    // Paths/isolated pieces remain: greedy is exact on
                    // unions of K_1 and K_2... components here have max
                    // degree 1, so count edges and singletons.
                    int edges = 0;
                    for (std::size_t i = 0; i < live.size(); ++i)
                        for (std::size_t j = i + 1; j < live.size(); ++j)
                            if (g.has_edge(live[i], live[j])) ++edges;
                    best = std::max(best, have + static_cast<int>(live.size()) - edges);
                    return;
                }
                std::vector<int> without;
                for (int v : live)
                    if (v != pick) without.push_back(v);
                std::vector<int> take;
                for (int v : without)
                    if (!g.has_edge(v, pick)) take.push_back(v);
                run(std::move(take), have + 1);
                live = std::move(without);
            }
        }
    } solver(g);
    solver.run(verts, 0);
    return solver.best;
}

int longest_path_edges(const Graph& g, const std::vector<int>& verts) {
    int c = static_cast<int>(verts.size());
    if (c > kPathNumberComponentCap)
        throw std::invalid_argument("path_number: component too large");
    if (c == 1) return 0;
    std::vector<std::uint32_t> adj(c, 0);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j)
            if (i != j && g.has_edge(verts[i], verts[j])) adj[i] |= std::uint32_t{1} << j;
    // reach[mask] = set of possible path endpoints using exactly mask.
    std::vector<std::uint32_t> reach(std::size_t{1} << c, 0);
    for (int i = 0; i < c; ++i) reach[std::uint32_t{1} << i] = std::uint32_t{1} << i;
    int best = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << c); ++mask) {
        std::uint32_t ends = reach[mask];
        if (!ends) continue;
        best = std::max(best, __builtin_popcount(mask) - 1);
        for (int v = 0; v < c; ++v) {
            if (!(ends >> v & 1)) continue;
            std::uint32_t ext = adj[v] & ~mask;
            while (ext) {
                int u = __builtin_ctz(ext);
                ext &= ext - 1;
                reach[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
            }
        }
    }
    return best;
}

}  // namespace

int independence_number(const Graph& g) {
    int total = 0;
    for (const auto& comp : components(g)) total += mis_component(g, comp);
    return total;
}

int path_number(const Graph& g) {
    int best = 0;
    for (const auto& comp : components(g)) best = std::max(best, longest_path_edges(g, comp));
    return best;
}

GraphMetrics graph_metrics(const Graph& g) {
    GraphMetrics m;
    m.components = components(g);
    int n = g.vertex_count();
    m.distances.assign(n + 1, {});
    for (int v = 1; v <= n; ++v) m.distances[v] = bfs_distances(g, v);
    m.independence_number = independence_number(g);
    bool path_ok = true;
    for (const auto& comp : m.components)
        if (static_cast<int>(comp.size()) > kPathNumberComponentCap) path_ok = false;
    if (path_ok) m.path_number = path_number(g);
    return m;
}

}  // namespace bpglab
