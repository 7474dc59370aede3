#ifndef BPGLAB_ISO_HPP
#define BPGLAB_ISO_HPP

#include <cstdint>
#include <vector>

#include "bpglab/graph.hpp"

namespace bpglab {

/// Canonical form of a graph: the lexicographically greatest lower-triangular
/// adjacency bit string over all vertex orderings, found by prefix-pruned
/// backtracking with twin elimination. Exact; intended for desk-scale graphs
/// (hard limit n <= 64).
using CanonicalCode = std::vector<std::uint64_t>;

CanonicalCode canonical_code(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace bpglab

#endif
