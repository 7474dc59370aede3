#ifndef BPGLAB_ISI_HPP
#define BPGLAB_ISI_HPP

#include <optional>
#include <string>
#include <vector>

#include "bpglab/embedding.hpp"
#include "bpglab/graph.hpp"
#include "bpglab/letters.hpp"

namespace bpglab {

/// Component-length histogram of a linear forest: alpha[i-1] components
/// isomorphic to P_i.
using ForestProfile = std::vector<int>;

ForestProfile profile_of(const Graph& g);  // throws when g is not a linear forest

int profile_vertices(const ForestProfile& p);

/// All profiles of induced subgraphs of P_i, the empty profile included.
/// A profile fits iff the pieces plus one gap each fit: sum gamma_j*(j+1) <= i+1.
std::vector<ForestProfile> columns_A(int i);

/// The feasibility system deciding containment of linear forest `pattern`
/// (profile alpha) in `host` (profile beta): one column per induced-subgraph
/// profile of each P_i, demands alpha, per-block capacities beta.
struct IlpSystem {
    int rows = 0;
    std::vector<std::vector<ForestProfile>> blocks;  // blocks[i-1] = columns of A_i
    ForestProfile demand;                            // alpha, padded to rows
    ForestProfile capacity;                          // beta, padded to rows
};

IlpSystem build_cover_system(const Graph& host, const Graph& pattern, bool include_empty = true);

/// One chosen column with its multiplicity, for certificates.
struct CoverTerm {
    int block = 0;  // 1-based: column lives in A_block
    ForestProfile column;
    int count = 0;
};

/// Integer feasibility by branch and bound over blocks, columns bounded by
/// the block capacity, residual demands pruned against what later blocks can
/// still cover.
bool solve_cover_system(const IlpSystem& sys, std::vector<CoverTerm>* solution = nullptr);

bool isi_linear_forest(const Graph& g, const Graph& h, std::vector<CoverTerm>* solution = nullptr);

/// Independence number of a connected chain component from its word: best
/// split into a b-prefix and an a-suffix.
int chain_word_independence(const std::string& w);

/// Largest number of extra independent, unattached vertices left in the
/// chain component encoded by wG after embedding the component encoded by
/// hPair; nullopt when it does not embed at all. Scans all (a, b) position
/// pairs of wG as the embedding's first/last positions.
std::optional<int> component_weight(const std::string& wG, const ChainWordPair& hPair);

enum class MatchingRule {
    padded,   // unmatched host components may still hold isolated vertices
    literal,  // they may not (kept for comparison; fails on 2K_2 vs K_2+K_1)
};

/// Square weight matrix of the assignment reduction: rows are the host's
/// non-trivial components, columns the pattern's non-trivial components
/// followed by dummies. Finite entries count absorbable isolated vertices
/// (>= 0); non-embeddings carry the sentinel; dummy entries hold the row
/// component's independence number (zero under the literal rule).
struct WeightMatrix {
    long long sentinel = 0;
    int real_columns = 0;
    std::vector<std::vector<long long>> w;
};

/// Throws UnsupportedError unless every component of g and h is a chain
/// graph; empty matrix when the pattern has more non-trivial components
/// than the host.
WeightMatrix build_weight_matrix(const Graph& g, const Graph& h,
                                 MatchingRule rule = MatchingRule::padded);

/// Assignment-based containment test for graphs whose components are all
/// chain graphs. Throws UnsupportedError when the precondition fails.
bool isi_p5free(const Graph& g, const Graph& h, MatchingRule rule = MatchingRule::padded,
                std::optional<Embedding>* witness = nullptr);

/// Ground-truth exhaustive search (shared with find_induced).
std::optional<Embedding> isi_bruteforce(const Graph& g, const Graph& h);

/// Dispatch: linear-forest pairs to the cover system, chain-component pairs
/// to the matching reduction, otherwise brute force within size caps.
constexpr int kBruteforcePatternCap = 12;
constexpr int kBruteforceHostCap = 40;
bool isi_auto(const Graph& g, const Graph& h);

}  // namespace bpglab

#endif
