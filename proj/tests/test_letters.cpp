#include <algorithm>
#include <set>

#include "bpglab/enumerate.hpp"
#include "bpglab/graph_io.hpp"
#include "bpglab/iso.hpp"
#include "bpglab/letters.hpp"
#include "bpglab/metrics.hpp"
#include "bpglab/named.hpp"
#include "bpglab/recognition.hpp"
#include "bpglab/universal.hpp"
#include "doctest.h"

using namespace bpglab;

namespace {

LetterSystem path_system(int r, std::vector<int> word) {
    LetterSystem sys;
    sys.alphabet = path_alphabet(r);
    sys.decoder = path_decoder(r);
    sys.word = std::move(word);
    return sys;
}

std::string revcomp(const std::string& w) {
    std::string out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out += *it == 'a' ? 'b' : 'a';
    return out;
}

bool connected(const Graph& g) { return components(g).size() == 1; }

}  // namespace

TEST_CASE("letter graphs decode by ordered pairs") {
    CHECK(is_isomorphic(letter_graph(chain_system("ababababab")), universal_chain(5)));
    CHECK(is_isomorphic(letter_graph(chain_system("abab")), path(4)));

    LetterSystem two_k2;
    two_k2.alphabet = {"a", "b"};
    two_k2.decoder = {{0, 0}, {1, 1}};
    two_k2.word = {0, 0, 1, 1};  // aabb
    CHECK(is_isomorphic(letter_graph(two_k2), matching(2)));

    LetterSystem bad;
    bad.alphabet = {"a"};
    bad.word = {1};
    CHECK_THROWS_AS(letter_graph(bad), std::invalid_argument);
}

TEST_CASE("parikh graphs are successor-decoder letter graphs") {
    CHECK(is_isomorphic(parikh_graph({"a", "b"}, {"a", "b", "a", "b", "a", "b", "a", "b", "a", "b"}),
                        universal_chain(5)));
    CHECK(is_isomorphic(parikh_graph({"a", "b", "c"}, {"a", "b", "c"}), path(3)));
    CHECK(parikh_graph({"a"}, {"a", "a", "a"}).edge_count() == 0);
    CHECK_THROWS_AS(parikh_graph({"a"}, {"x"}), std::invalid_argument);

    // identical to letter_graph with the successor decoder, all 3-letter words over {x,y,z}
    std::vector<std::string> alpha = {"x", "y", "z"};
    for (int w = 0; w < 27; ++w) {
        std::vector<std::string> word = {alpha[w % 3], alpha[w / 3 % 3], alpha[w / 9 % 3]};
        LetterSystem sys;
        sys.alphabet = alpha;
        sys.decoder = path_decoder(3);
        for (const auto& l : word)
            sys.word.push_back(static_cast<int>(std::find(alpha.begin(), alpha.end(), l) -
                                                alpha.begin()));
        CHECK(parikh_graph(alpha, word) == letter_graph(sys));
    }
}

TEST_CASE("chain graph encoding") {
    auto c4 = encode_chain(cycle(4));
    CHECK(c4.w1.letters == "aabb");
    CHECK(c4.w2.letters == "aabb");
    auto k12 = encode_chain(star(2));  // centre is vertex 1, on the a-side
    CHECK(k12.w1.letters == "abb");
    CHECK(k12.w2.letters == "aab");
    auto p4 = encode_chain(path(4));
    CHECK(p4.w1.letters == "abab");
    CHECK(p4.w2.letters == "abab");

    CHECK_THROWS_AS(encode_chain(matching(2)), std::invalid_argument);  // disconnected
    CHECK_THROWS_AS(encode_chain(path(5)), std::invalid_argument);      // not chain
    CHECK_THROWS_AS(encode_chain(path(1)), std::invalid_argument);

    // round trip + reverse-complement duality on every connected chain graph, n <= 8
    for (int n = 2; n <= 8; ++n)
        for (const Graph& g : enumerate_class({ClassId::chain, 0}, n)) {
            if (!connected(g)) continue;
            auto pair = encode_chain(g);
            CHECK(pair.w1.letters.front() == 'a');
            CHECK(pair.w1.letters.back() == 'b');
            CHECK(pair.w2.letters == revcomp(pair.w1.letters));
            CHECK(is_isomorphic(letter_graph(chain_system(pair.w1.letters)), g));
            CHECK(is_isomorphic(letter_graph(chain_system(pair.w2.letters)), g));
        }
}

TEST_CASE("every two-letter word with the (a,b) decoder is a chain graph") {
    for (int n = 1; n <= 10; ++n)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::string w;
            for (int i = 0; i < n; ++i) w += (mask >> i & 1) ? 'b' : 'a';
            CHECK(is_chain_graph(letter_graph(chain_system(w))));
        }
}

TEST_CASE("bipartite permutation encoder: basics") {
    auto p2 = encode_bpg(path(2));
    REQUIRE(p2.has_value());
    CHECK(p2->word == std::vector<int>{0, 1});  // a1 a2
    CHECK(p2->alphabet.size() == 2);

    auto three_k2 = encode_bpg(matching(3));
    REQUIRE(three_k2.has_value());
    CHECK(three_k2->letters_used() <= 4);
    CHECK(is_isomorphic(letter_graph(*three_k2), matching(3)));

    CHECK_FALSE(encode_bpg(sun3()).has_value());
    CHECK_FALSE(encode_bpg(phi()).has_value());
    CHECK_FALSE(encode_bpg(spider(2, 2, 2)).has_value());
    CHECK_FALSE(encode_bpg(cycle(6)).has_value());
    CHECK_FALSE(encode_bpg(complete(3)).has_value());
}

TEST_CASE("bipartite permutation encoder: exhaustive round trip, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate_bpg(n)) {
            auto sys = encode_bpg(g);
            REQUIRE(sys.has_value());
            CHECK(sys->letters_used() <= n / 2 + 1);
            CHECK(is_isomorphic(letter_graph(*sys), g));

            if (connected(g) && n >= 2) {
                // fixpoint shape of the rewrite system on connected words:
                // a1 present, the word ends in a2, middle letters used twice
                const auto& w = sys->word;
                int r = sys->letters_used();
                CHECK(std::count(w.begin(), w.end(), 0) >= 1);
                CHECK(w.back() == 1);
                for (int l = 1; l + 1 < r; ++l)
                    CHECK(std::count(w.begin(), w.end(), l) >= 2);
            }
        }
    }
}

TEST_CASE("constructive recognition agrees with the forbidden-pattern mode, n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n))
            CHECK(is_bpg_constructive(g) == is_bpg_forbidden(g));
}

TEST_CASE("exact lettericity matches the known path values") {
    CHECK(lettericity_exact(path(4), 3) == 2);
    CHECK(lettericity_exact(path(5), 3) == 3);
    CHECK(lettericity_exact(path(6), 3) == 3);
    CHECK(lettericity_exact(path(7), 3) == 3);
    CHECK(lettericity_exact(matching(2), 3) == 2);  // aabb with {(a,a),(b,b)}
    CHECK(lettericity_exact(path(2), 3) == 1);
    CHECK(lettericity_exact(complete(4), 3) == 1);
    CHECK_FALSE(lettericity_exact(star(7), 1).has_value());
    CHECK_THROWS_AS(lettericity_exact(Graph(9), 3), UnsupportedError);

    // the path-decoder notion differs: 2K_2 needs 3 letters there
    CHECK(path_decoder_alphabet_exact(matching(2), 6) == 3);
    CHECK(path_decoder_alphabet_exact(path(4), 6) == 2);
}

TEST_CASE("subword embedding is the subsequence relation") {
    CHECK(subword_embed("ab", "aabb"));
    CHECK_FALSE(subword_embed("ba", "aabb"));
    CHECK_FALSE(subword_embed("abab", "aabb"));
    CHECK(subword_embed("", "x"));
    CHECK(subword_embed("abb", "abab"));
}

TEST_CASE("word enumeration yields exactly the bipartite permutation graphs") {
    CHECK(enumerate_bpg(2).size() == 2);
    CHECK(enumerate_bpg(3).size() == 3);
    CHECK(enumerate_bpg(4).size() == 7);

    for (int n = 1; n <= 6; ++n) {
        auto words = enumerate_bpg(n);
        std::set<CanonicalCode> word_codes;
        for (const Graph& g : words) word_codes.insert(canonical_code(g));
        CHECK(word_codes.size() == words.size());
        std::set<CanonicalCode> filter_codes;
        for (const Graph& g : enumerate_graphs(n))
            if (is_bpg_forbidden(g)) filter_codes.insert(canonical_code(g));
        CHECK(word_codes == filter_codes);
    }

    // worker count must not affect the output
    auto seq = enumerate_bpg(6, 1);
    auto par = enumerate_bpg(6, 4);
    REQUIRE(seq.size() == par.size());
    for (std::size_t i = 0; i < seq.size(); ++i) CHECK(seq[i] == par[i]);
}

TEST_CASE("letter systems validate their parts") {
    CHECK_THROWS_AS(path_system(2, {0, 2}).validate(), std::invalid_argument);
    LetterSystem dup;
    dup.alphabet = {"a", "a"};
    CHECK_THROWS_AS(dup.validate(), std::invalid_argument);
}
