#ifndef BPGLAB_PARAMETERS_HPP
#define BPGLAB_PARAMETERS_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bpglab/graph.hpp"

namespace bpglab {

/// Number of similarity classes: x and y are similar when no third vertex is
/// adjacent to exactly one of them. The relation's transitivity is checked,
/// not assumed.
int neighbourhood_diversity(const Graph& g);

/// Largest k such that some U subseteq V yields at least k classes of
/// V setminus U, grouped by exact neighbourhood inside U, each of size at
/// least k. Exhaustive over U; capped at n <= 16.
constexpr int kDistinguishingCap = 16;
int distinguishing_number(const Graph& g);

/// Graph on {1..k} with loops allowed; used as the complementation pattern.
struct KGraph {
    int k = 0;
    std::set<std::pair<int, int>> edges;  // stored with i <= j; loops as (i,i)

    void add(int i, int j);
    bool has(int i, int j) const;
    void validate() const;
};

/// Finite truncation of the word u * v^infinity over an alphabet.
struct WordSource {
    std::vector<std::string> alphabet;
    std::vector<int> prefix;  // indices into alphabet
    std::vector<int> period;  // non-empty

    void validate() const;
    int letter_at(int pos) const;  // 0-based
};

/// `copies` copies of f, with edges between the i-th and j-th track flipped
/// wherever K has the edge ij; a loop at i turns track i into a clique.
/// Copy c of vertex i is labelled (c-1)*k + i.
Graph build_UFK(const Graph& f, const KGraph& k, int copies);

/// N-vertex prefix of the folded-word graph: consecutive positions adjacent
/// unless their letters form a K-edge, distant positions adjacent when they do.
Graph build_UwK(const WordSource& src, const KGraph& k, int N);

}  // namespace bpglab

#endif
