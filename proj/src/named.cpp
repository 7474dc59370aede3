#include "bpglab/named.hpp"

#include <stdexcept>

namespace bpglab {

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1 required");
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
    Graph g = path(n);
    g.add_edge(n, 1);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("complete_bipartite: parts must be non-empty");
    Graph g(p + q);
    for (int u = 1; u <= p; ++u)
        for (int v = p + 1; v <= p + q; ++v) g.add_edge(u, v);
    return g;
}

Graph star(int m) {
    if (m < 0) throw std::invalid_argument("star: m >= 0 required");
    Graph g(m + 1);
    for (int v = 2; v <= m + 1; ++v) g.add_edge(1, v);
    return g;
}

Graph spider(int i, int j, int k) {
    if (i < 1 || j < 1 || k < 1) throw std::invalid_argument("spider: legs must have >= 1 edge");
    Graph g(i + j + k + 1);
    auto leg = [&g](int len, int first) {
        g.add_edge(1, first);
        for (int t = 1; t < len; ++t) g.add_edge(first + t - 1, first + t);
    };
    leg(i, 2);
    leg(j, i + 2);
    leg(k, i + j + 2);
    return g;
}

Graph sun3() {
    return Graph(7, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {3, 6}, {4, 7}});
}

Graph phi() {
    return Graph(7, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {1, 4}, {2, 5}, {3, 6}, {5, 7}});
}

Graph hgraph(int k) {
    if (k < 1) throw std::invalid_argument("hgraph: k >= 1 required");
    // hgraph(1) degenerates to K_{1,4}: all four pendants share vertex 1.
    Graph g(k + 4);
    for (int i = 1; i < k; ++i) g.add_edge(i, i + 1);
    g.add_edge(1, k + 1);
    g.add_edge(1, k + 2);
    g.add_edge(k, k + 3);
    g.add_edge(k, k + 4);
    return g;
}

Graph matching(int m) {
    if (m < 1) throw std::invalid_argument("matching: m >= 1 required");
    Graph g(2 * m);
    for (int i = 1; i <= m; ++i) g.add_edge(2 * i - 1, 2 * i);
    return g;
}

Graph make_named(const NamedFamily& family) {
    const auto& p = family.params;
    auto need = [&](std::size_t k) {
        if (p.size() != k)
            throw std::invalid_argument("family '" + family.tag + "': wrong number of parameters");
    };
    if (family.tag == "path") { need(1); return path(p[0]); }
    if (family.tag == "cycle") { need(1); return cycle(p[0]); }
    if (family.tag == "complete") { need(1); return complete(p[0]); }
    if (family.tag == "complete-bipartite") { need(2); return complete_bipartite(p[0], p[1]); }
    if (family.tag == "star") { need(1); return star(p[0]); }
    if (family.tag == "spider") { need(3); return spider(p[0], p[1], p[2]); }
    if (family.tag == "sun3") { need(0); return sun3(); }
    if (family.tag == "phi") { need(0); return phi(); }
    if (family.tag == "hgraph") { need(1); return hgraph(p[0]); }
    if (family.tag == "matching") { need(1); return matching(p[0]); }
    throw std::invalid_argument("unknown family '" + family.tag + "'");
}

}  // namespace bpglab
