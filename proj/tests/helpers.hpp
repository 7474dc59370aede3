#ifndef BPGLAB_TEST_HELPERS_HPP
#define BPGLAB_TEST_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "bpglab/graph.hpp"

namespace bpglab::testing {

// Brute-force automorphism count; independent of the canonical-code path.
inline long long automorphism_count(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    long long count = 0;
    do {
        bool ok = true;
        for (int u = 1; u <= n && ok; ++u)
            for (int v = u + 1; v <= n && ok; ++v)
                if (g.has_edge(u, v) != g.has_edge(perm[u - 1], perm[v - 1])) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// Brute-force isomorphism over all bijections; oracle for the canonical code.
inline bool isomorphic_bruteforce(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (int u = 1; u <= n && ok; ++u)
            for (int v = u + 1; v <= n && ok; ++v)
                if (g.has_edge(u, v) != h.has_edge(perm[u - 1], perm[v - 1])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace bpglab::testing

#endif
