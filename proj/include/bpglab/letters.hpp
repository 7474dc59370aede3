#ifndef BPGLAB_LETTERS_HPP
#define BPGLAB_LETTERS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpglab/graph.hpp"

namespace bpglab {

/// A word over an alphabet together with a decoder: positions i < j are
/// adjacent in the decoded graph iff the ordered pair (w_i, w_j) is in the
/// decoder. Letters are stored as indices into `alphabet`. vertex_map, when
/// non-empty, records which original vertex each position stands for.
struct LetterSystem {
    std::vector<std::string> alphabet;
    std::vector<std::pair<int, int>> decoder;
    std::vector<int> word;
    std::vector<int> vertex_map;

    int letters_used() const;
    void validate() const;  // throws std::invalid_argument when malformed
};

/// The decoder {(a_i, a_{i+1})} over r letters named a1..ar.
std::vector<std::pair<int, int>> path_decoder(int r);
std::vector<std::string> path_alphabet(int r);

/// A system over {a, b} with decoder {(a, b)} and the given word.
LetterSystem chain_system(const std::string& word);

Graph letter_graph(const LetterSystem& sys);

/// Letter graph over an ordered alphabet with the successor-pair decoder.
Graph parikh_graph(const std::vector<std::string>& ordered_alphabet,
                   const std::vector<std::string>& word);

/// One side-labelling of a connected chain graph, as a word over {a, b}
/// plus the vertex standing at each position.
struct ChainWord {
    std::string letters;
    std::vector<int> vertex_of_pos;  // 0-based positions
};

/// The two encodings of a connected chain graph (>= 2 vertices); they are
/// reverse-complements of each other. The first uses the side of vertex 1
/// as the a-side.
struct ChainWordPair {
    ChainWord w1, w2;
};

ChainWordPair encode_chain(const Graph& g);

/// Expresses a bipartite permutation graph as a path-decoder letter system
/// over at most floor(n/2)+1 letters; empty when g is not one. Initial
/// expressions come from BFS layerings (falling back to a complete layering
/// search on components of at most 22 vertices), then index-sum-decreasing
/// rewrites run to a fixpoint and component words are concatenated with
/// shared boundary letters. Bipartite non-members whose components are both
/// larger than the fallback cap and missed by every BFS layering raise
/// UnsupportedError rather than guessing.
std::optional<LetterSystem> encode_bpg(const Graph& g);

/// Minimum alphabet size over all decoders and words, for k <= kmax.
/// Exhaustive with letter-permutation symmetry breaking; capped at
/// n <= 8, kmax <= 3.
std::optional<int> lettericity_exact(const Graph& g, int kmax);

/// Smallest alphabet over path decoders specifically, by exhaustive word
/// search (n <= 8). Both this and lettericity_exact are reported by the CLI
/// since the two notions differ already on 2K_2.
std::optional<int> path_decoder_alphabet_exact(const Graph& g, int rmax);

/// Subsequence test, greedy leftmost.
bool subword_embed(const std::string& needle, const std::string& haystack);

/// All n-vertex bipartite permutation graphs up to isomorphism, from
/// decoding every word of length n over floor(n/2)+1 letters. n <= 8.
/// The word space splits by first letter across workers; output order does
/// not depend on the worker count.
std::vector<Graph> enumerate_bpg(int n, int jobs = 1);

}  // namespace bpglab

#endif
