#ifndef BPGLAB_TRANSFORM_HPP
#define BPGLAB_TRANSFORM_HPP

#include "bpglab/graph.hpp"

namespace bpglab {

/// Complement the subgraph induced by the neighbourhood of v.
Graph local_complement(const Graph& g, int v);

/// Pivot on the edge uv, defined as the composite of local complementations
/// at u, v, u. On bipartite graphs the net effect is to complement the edges
/// between N(u)\{v} and N(v)\{u} with the labels of u and v exchanged.
Graph pivot(const Graph& g, int u, int v);

}  // namespace bpglab

#endif
