#ifndef BPGLAB_RECOGNITION_HPP
#define BPGLAB_RECOGNITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "bpglab/embedding.hpp"
#include "bpglab/graph.hpp"

namespace bpglab {

/// Exhaustive induced-subgraph search: an embedding of `pattern` into `g`,
/// or nothing. Sound and complete; backtracking with degree and adjacency
/// pruning plus symmetry breaking over repeated pattern components.
std::optional<Embedding> find_induced(const Graph& g, const Graph& pattern);

/// Induced kS_m: k disjoint stars K_{1,m} with no edges between them.
/// Specialized search over centre sets and private leaf sets; exact.
std::optional<Embedding> find_star_forest_pattern(const Graph& g, int k, int m);

/// An induced chordless cycle of length >= minlen, as a vertex sequence,
/// or nothing. DFS over induced paths with chord pruning; exponential in the
/// worst case, fine at desk scale (intended for n up to ~20, more when sparse).
std::optional<std::vector<int>> find_long_hole(const Graph& g, int minlen = 5);

/// Hereditary classes recognised by the library. Parameterized tags are
/// written class_Xi(i) and kSk_free(k) on the command line.
struct ClassId {
    enum Tag {
        bipartite,
        bpg,
        chain,
        degree_le1,
        linear_forest,
        star_forest,
        caterpillar_forest,
        p5free_bipartite,
        boundary_L,
        class_Xi,
        kSk_free,
    };
    Tag tag;
    int param = 0;

    static ClassId parse(const std::string& text);
    std::string name() const;
    static std::vector<std::string> known_tags();
};

/// Optional evidence attached to a membership answer: a forbidden induced
/// pattern found in g (verified before being returned) or a short structural
/// note. Exactly one of the two is meaningful.
struct MembershipCertificate {
    std::string note;
    std::optional<Embedding> forbidden;
    std::string forbidden_name;
};

bool is_member(const ClassId& c, const Graph& g);
bool is_member(const ClassId& c, const Graph& g, MembershipCertificate& cert);

/// The two independent bipartite-permutation recognisers: forbidden-pattern
/// mode and constructive mode (path-decoder encoding succeeds). is_member
/// uses the forbidden-pattern mode.
bool is_bpg_forbidden(const Graph& g);
bool is_bpg_constructive(const Graph& g);

bool is_chain_graph(const Graph& g);

}  // namespace bpglab

#endif
