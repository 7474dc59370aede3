#include "bpglab/iso.hpp"

#include <algorithm>
#include <stdexcept>

namespace bpglab {
namespace {

struct Canonizer {
    int n;
    std::vector<std::uint64_t> rows;  // rows[v] bit u set iff v~u (0-based)
    CanonicalCode best;
    bool have_best = false;

    // code[k] = adjacency pattern of the vertex placed at position k toward
    // positions 0..k-1, with position 0 at the highest bit so integer order
    // equals lexicographic order of the bit string.
    std::vector<std::uint64_t> cur;
    std::vector<int> placed;
    std::uint64_t used = 0;

    explicit Canonizer(const Graph& g) : n(g.vertex_count()), rows(n, 0) {
        for (auto [u, v] : g.edges()) {
            rows[u - 1] |= std::uint64_t{1} << (v - 1);
            rows[v - 1] |= std::uint64_t{1} << (u - 1);
        }
        cur.reserve(n);
        placed.reserve(n);
    }

    std::uint64_t pattern_of(int v) const {
        std::uint64_t p = 0;
        int k = static_cast<int>(placed.size());
        for (int i = 0; i < k; ++i)
            if (rows[v] >> placed[i] & 1) p |= std::uint64_t{1} << (k - 1 - i);
        return p;
    }

    void dfs() {
        int k = static_cast<int>(placed.size());
        if (k == n) {
            if (!have_best || cur > best) {
                best = cur;
                have_best = true;
            }
            return;
        }
        std::uint64_t maxpat = 0;
        std::vector<int> cands;
        for (int v = 0; v < n; ++v) {
            if (used >> v & 1) continue;
            std::uint64_t p = pattern_of(v);
            if (cands.empty() || p > maxpat) {
                maxpat = p;
                cands.assign(1, v);
            } else if (p == maxpat) {
                cands.push_back(v);
            }
        }
        // Prefix pruning against the best complete code.
        if (have_best && k < static_cast<int>(best.size())) {
            if (maxpat < best[k]) return;
            if (maxpat > best[k]) have_best = false;
        }
        // Vertices that are twins (same row outside {u,v}) lead to identical
        // subtrees; keep one representative.
        std::vector<int> uniq;
        for (int v : cands) {
            bool dup = false;
            for (int u : uniq) {
                std::uint64_t mask = ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
                if ((rows[u] & mask) == (rows[v] & mask)) {
                    dup = true;
                    break;
                }
            }
            if (!dup) uniq.push_back(v);
        }
        for (int v : uniq) {
            placed.push_back(v);
            used |= std::uint64_t{1} << v;
            cur.push_back(maxpat);
            dfs();
            cur.pop_back();
            used &= ~(std::uint64_t{1} << v);
            placed.pop_back();
            if (have_best && k < static_cast<int>(best.size()) && maxpat < best[k]) return;
        }
    }
};

}  // namespace

CanonicalCode canonical_code(const Graph& g) {
    if (g.vertex_count() > 64)
        throw std::invalid_argument("canonical_code: more than 64 vertices");
    if (g.vertex_count() == 0) return {};
    Canonizer c(g);
    c.dfs();
    return c.best;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    auto degs = [](const Graph& x) {
        std::vector<int> d;
        d.reserve(x.vertex_count());
        for (int v = 1; v <= x.vertex_count(); ++v) d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g) != degs(h)) return false;
    return canonical_code(g) == canonical_code(h);
}

}  // namespace bpglab
