#ifndef BPGLAB_UNIVERSAL_HPP
#define BPGLAB_UNIVERSAL_HPP

#include <optional>
#include <vector>

#include "bpglab/graph.hpp"
#include "bpglab/letters.hpp"
#include "bpglab/recognition.hpp"

namespace bpglab {

/// The n-row, n-column layered graph that contains every n-vertex bipartite
/// permutation graph. Defined by its word form: n copies of a1..an under the
/// path decoder. Vertex (row r, copy c) sits at position (c-1)*n + r; rows
/// r and r+1 are adjacent across copies c <= c'.
struct UniversalBpg {
    Graph graph;
    LetterSystem word;
    int n = 0;

    int vertex_at(int row, int copy) const;  // 1-based coordinates
};

UniversalBpg universal_bpg(int n);

/// Z_n: letter graph of (ab)^n with decoder {(a,b)}; contains every n-vertex
/// chain graph. a_k is vertex 2k-1, b_k vertex 2k.
Graph universal_chain(int n);

/// Star forest S_{floor(n/1)} + ... + S_{floor(n/n)}; contains every
/// n-vertex star forest. Sum of (floor(n/i)+1) vertices.
Graph universal_star_forest(int n);

/// (k-1)S_n + nS_{k-1}: contains every n-vertex kS_k-free star forest.
Graph universal_star_forest_bounded(int k, int n);

/// A long zigzag induced path laced to a short column path; the distance
/// between the column's endpoints x and y is pinned at t+2 by construction.
struct RigidWitness {
    Graph graph;
    std::vector<int> zigzag;  // induced path on 3t+7 vertices
    std::vector<int> column;  // induced path on t+3 vertices, y=c_1 .. x=c_{t+3}
    std::vector<int> X;       // twin set replacing x ({x} when not inflated)
    std::vector<int> Y;       // twin set replacing y
};

RigidWitness rigid_witness(int t);

/// Endpoints x and y replaced by independent twin sets of size
/// floor((n - 4t - 8)/2); at most n vertices in total.
RigidWitness rigid_witness_inflated(int n, int t);

/// Generalisation inflating the column at c_1 and at c_{j+3} for each j in
/// marks; the vertex budget n - |Q| + (#sets) is split evenly across the
/// inflated sets with the remainder on the first.
struct RigidWitnessMulti {
    Graph graph;
    std::vector<std::vector<int>> sets;  // inflated twin sets, c_1 first
};

RigidWitnessMulti rigid_witness_multi(int n, const std::vector<int>& marks);

/// All n-vertex members of the class up to isomorphism. Partition-based
/// generators for star/linear forests and matchings, {a,b}-words for chain
/// graphs, word enumeration for bipartite permutation graphs and their
/// subclasses, a filter over enumerate_graphs otherwise.
std::vector<Graph> enumerate_class(const ClassId& c, int n, bool allow_large = false);

struct UniversalityReport {
    bool pass = true;
    int checked = 0;
    std::optional<Graph> first_failure;
};

/// Try to embed every n-vertex member of the class into u.
UniversalityReport verify_universal(const ClassId& c, int n, const Graph& u, int jobs = 1);

}  // namespace bpglab

#endif
