#ifndef BPGLAB_EMBEDDING_HPP
#define BPGLAB_EMBEDDING_HPP

#include <vector>

#include "bpglab/graph.hpp"

namespace bpglab {

/// An injective map witnessing that `source` is an induced subgraph of
/// `target`: map[v] is the image of source vertex v (index 0 unused).
struct Embedding {
    Graph source;
    Graph target;
    std::vector<int> map;

    /// Injective, in range, and adjacency-preserving in both directions.
    bool valid() const;
};

}  // namespace bpglab

#endif
