#ifndef BPGLAB_NAMED_HPP
#define BPGLAB_NAMED_HPP

#include <string>
#include <vector>

#include "bpglab/graph.hpp"

namespace bpglab {

/// Deterministic generators for the named graph families. Vertex labelings
/// are fixed and documented per family so output files are reproducible.

Graph path(int n);                         // P_n: 1-2-...-n
Graph cycle(int n);                        // C_n, n >= 3: path plus edge {n,1}
Graph complete(int n);                     // K_n
Graph complete_bipartite(int p, int q);    // parts {1..p} and {p+1..p+q}
Graph star(int m);                         // S_m = K_{1,m}: centre 1, leaves 2..m+1
Graph spider(int i, int j, int k);         // S_{i,j,k}: legs of i, j, k edges from centre 1
Graph sun3();                              // 4-cycle 1-2-3-4 with pendants 5 at 1, 6 at 3, 7 at 4
Graph phi();                               // 2x3 grid 1,2,3 / 4,5,6 with pendant 7 at 5
Graph hgraph(int k);                       // path 1..k, pendants k+1,k+2 at 1 and k+3,k+4 at k
Graph matching(int m);                     // mK_2: edges {2i-1, 2i}

/// A named family plus parameters, as accepted on the command line.
struct NamedFamily {
    std::string tag;
    std::vector<int> params;
};

Graph make_named(const NamedFamily& family);

}  // namespace bpglab

#endif
