#include "bpglab/parameters.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "bpglab/graph_io.hpp"

namespace bpglab {

namespace {

bool similar(const Graph& g, int x, int y) {
    for (int z = 1; z <= g.vertex_count(); ++z) {
        if (z == x || z == y) continue;
        if (g.has_edge(z, x) != g.has_edge(z, y)) return false;
    }
    return true;
}

}  // namespace

int neighbourhood_diversity(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> cls(n + 1, -1);
    int classes = 0;
    for (int v = 1; v <= n; ++v) {
        if (cls[v] >= 0) continue;
        cls[v] = classes++;
        for (int u = v + 1; u <= n; ++u)
            if (cls[u] < 0 && similar(g, v, u)) cls[u] = cls[v];
    }
    // Similarity must be an equivalence for the class count to mean anything.
    for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y)
            if ((cls[x] == cls[y]) != similar(g, x, y))
                throw std::logic_error("neighbourhood_diversity: similarity not transitive");
    return classes;
}

int distinguishing_number(const Graph& g) {
    int n = g.vertex_count();
    if (n > kDistinguishingCap)
        throw UnsupportedError("distinguishing_number: n <= 16 required");
    if (n == 0) return 0;
    int best = 0;
    for (unsigned u_mask = 0; u_mask < (1u << n); ++u_mask) {
        std::map<unsigned, int> class_size;
        for (int v = 1; v <= n; ++v) {
            if (u_mask >> (v - 1) & 1) continue;
            unsigned nb = 0;
            for (int w = 1; w <= n; ++w)
                if ((u_mask >> (w - 1) & 1) && g.has_edge(v, w)) nb |= 1u << (w - 1);
            ++class_size[nb];
        }
        std::vector<int> sizes;
        sizes.reserve(class_size.size());
        for (auto& [nb, sz] : class_size) sizes.push_back(sz);
        std::sort(sizes.rbegin(), sizes.rend());
        for (int k = 1; k <= static_cast<int>(sizes.size()); ++k)
            if (sizes[k - 1] >= k) best = std::max(best, k);
    }
    return best;
}

void KGraph::add(int i, int j) {
    if (i < 1 || j < 1 || i > k || j > k) throw std::invalid_argument("kgraph: vertex out of range");
    edges.emplace(std::min(i, j), std::max(i, j));
}

bool KGraph::has(int i, int j) const {
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
}

void KGraph::validate() const {
    if (k < 0) throw std::invalid_argument("kgraph: negative order");
    for (auto [i, j] : edges)
        if (i < 1 || j < 1 || i > k || j > k || i > j)
            throw std::invalid_argument("kgraph: edge out of range");
}

void WordSource::validate() const {
    if (period.empty()) throw std::invalid_argument("word source: empty period");
    int a = static_cast<int>(alphabet.size());
    for (int l : prefix)
        if (l < 0 || l >= a) throw std::invalid_argument("word source: prefix letter out of range");
    for (int l : period)
        if (l < 0 || l >= a) throw std::invalid_argument("word source: period letter out of range");
}

int WordSource::letter_at(int pos) const {
    if (pos < static_cast<int>(prefix.size())) return prefix[pos];
    return period[(pos - static_cast<int>(prefix.size())) % period.size()];
}

Graph build_UFK(const Graph& f, const KGraph& kg, int copies) {
    kg.validate();
    if (f.vertex_count() != kg.k)
        throw std::invalid_argument("build_UFK: F and K must share the vertex set {1..k}");
    if (copies < 1) throw std::invalid_argument("build_UFK: copies >= 1 required");
    int k = kg.k;
    Graph g(copies * k);
    auto label = [k](int copy, int i) { return copy * k + i; };  // copy 0-based
    for (int c1 = 0; c1 < copies; ++c1)
        for (int c2 = c1; c2 < copies; ++c2)
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= k; ++j) {
                    if (c1 == c2 && j <= i) continue;
                    bool base = c1 == c2 && f.has_edge(i, j);  // copies of F are disjoint
                    bool flip = kg.has(i, j);
                    if (base != flip) g.add_edge(label(c1, i), label(c2, j));
                }
    return g;
}

Graph build_UwK(const WordSource& src, const KGraph& kg, int N) {
    src.validate();
    kg.validate();
    if (static_cast<int>(src.alphabet.size()) > kg.k)
        throw std::invalid_argument("build_UwK: alphabet larger than K");
    if (N < 1) throw std::invalid_argument("build_UwK: N >= 1 required");
    Graph g(N);
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            int a = src.letter_at(i) + 1, b = src.letter_at(j) + 1;
            bool in_k = kg.has(a, b);
            bool edge = (j - i == 1) ? !in_k : in_k;
            if (edge) g.add_edge(i + 1, j + 1);
        }
    return g;
}

}  // namespace bpglab
