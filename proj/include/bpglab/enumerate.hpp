#ifndef BPGLAB_ENUMERATE_HPP
#define BPGLAB_ENUMERATE_HPP

#include <vector>

#include "bpglab/graph.hpp"

namespace bpglab {

/// All graphs on n vertices, exactly one representative per isomorphism
/// class, in a deterministic order. Built level by level: every class on n
/// vertices arises from a class on n-1 vertices by attaching one vertex.
/// Capped at n <= 7 unless allow_large (then n <= 8).
constexpr int kEnumerateDefaultCap = 7;
constexpr int kEnumerateHardCap = 8;

std::vector<Graph> enumerate_graphs(int n, bool allow_large = false);

}  // namespace bpglab

#endif
