#include "bpglab/letters.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "bpglab/graph_io.hpp"
#include "bpglab/iso.hpp"
#include "bpglab/metrics.hpp"

namespace bpglab {

int LetterSystem::letters_used() const {
    std::set<int> ls(word.begin(), word.end());
    return static_cast<int>(ls.size());
}

void LetterSystem::validate() const {
    int k = static_cast<int>(alphabet.size());
    std::set<std::string> names(alphabet.begin(), alphabet.end());
    if (static_cast<int>(names.size()) != k)
        throw std::invalid_argument("letter system: duplicate alphabet letter");
    for (auto [x, y] : decoder)
        if (x < 0 || x >= k || y < 0 || y >= k)
            throw std::invalid_argument("letter system: decoder letter outside alphabet");
    for (int w : word)
        if (w < 0 || w >= k)
            throw std::invalid_argument("letter system: word letter outside alphabet");
    if (!vertex_map.empty() && vertex_map.size() != word.size())
        throw std::invalid_argument("letter system: vertex map length mismatch");
}

std::vector<std::pair<int, int>> path_decoder(int r) {
    std::vector<std::pair<int, int>> d;
    for (int i = 0; i + 1 < r; ++i) d.emplace_back(i, i + 1);
    return d;
}

std::vector<std::string> path_alphabet(int r) {
    std::vector<std::string> a;
    for (int i = 1; i <= r; ++i) a.push_back("a" + std::to_string(i));
    return a;
}

LetterSystem chain_system(const std::string& word) {
    LetterSystem sys;
    sys.alphabet = {"a", "b"};
    sys.decoder = {{0, 1}};
    for (char c : word) {
        if (c != 'a' && c != 'b') throw std::invalid_argument("chain word: letters must be a/b");
        sys.word.push_back(c == 'a' ? 0 : 1);
    }
    return sys;
}

Graph letter_graph(const LetterSystem& sys) {
    sys.validate();
    int k = static_cast<int>(sys.alphabet.size());
    std::vector<char> dec(static_cast<std::size_t>(k) * k, 0);
    for (auto [x, y] : sys.decoder) dec[static_cast<std::size_t>(x) * k + y] = 1;
    int n = static_cast<int>(sys.word.size());
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dec[static_cast<std::size_t>(sys.word[i]) * k + sys.word[j]])
                g.add_edge(i + 1, j + 1);
    return g;
}

Graph parikh_graph(const std::vector<std::string>& ordered_alphabet,
                   const std::vector<std::string>& word) {
    LetterSystem sys;
    sys.alphabet = ordered_alphabet;
    sys.decoder = path_decoder(static_cast<int>(ordered_alphabet.size()));
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < ordered_alphabet.size(); ++i)
        index[ordered_alphabet[i]] = static_cast<int>(i);
    for (const auto& w : word) {
        auto it = index.find(w);
        if (it == index.end()) throw std::invalid_argument("parikh_graph: letter not in alphabet");
        sys.word.push_back(it->second);
    }
    return letter_graph(sys);
}

namespace {

// Chain test without the generic pattern machinery: bipartite with
// neighbourhoods on each side linearly ordered by inclusion.
bool chain_sides(const Graph& g, std::vector<int>& side) {
    if (!is_bipartite(g, &side)) return false;
    int n = g.vertex_count();
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            if (side[u] != side[v]) continue;
            bool u_in_v = true, v_in_u = true;
            for (int w = 1; w <= n; ++w) {
                if (g.has_edge(u, w) && !g.has_edge(v, w) && w != v) v_in_u = false;
                if (g.has_edge(v, w) && !g.has_edge(u, w) && w != u) u_in_v = false;
            }
            if (!u_in_v && !v_in_u) return false;
        }
    return true;
}

// Does the word (letters, with verts naming the vertex at each position)
// decode to the subgraph of g on those vertices? Queried by original labels.
bool decodes_to(const std::vector<int>& letters, const std::vector<int>& verts, const Graph& g) {
    int n = static_cast<int>(letters.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool adj = letters[j] == letters[i] + 1;
            if (adj != g.has_edge(verts[i], verts[j])) return false;
        }
    return true;
}

struct ComponentWord {
    std::vector<int> letters;  // 1-based letter indices, per position
    std::vector<int> verts;    // graph vertex per position
    int top_letter = 0;
};

// A word realizing the given letter assignment, if the ordering obligations
// are acyclic: u with letter t must precede v with letter t+1 exactly when
// uv is an edge. Returns positions as vertex list (lexicographically least
// topological order).
std::optional<std::vector<int>> order_for_layering(const Graph& g, const std::vector<int>& comp,
                                                   const std::vector<int>& letter) {
    int c = static_cast<int>(comp.size());
    for (int i = 0; i < c; ++i)
        for (int j = i + 1; j < c; ++j) {
            int du = letter[i] - letter[j];
            if (g.has_edge(comp[i], comp[j]) && du != 1 && du != -1) return std::nullopt;
        }
    std::vector<std::vector<int>> succ(c);
    std::vector<int> indeg(c, 0);
    for (int i = 0; i < c; ++i)
        for (int j = 0; j < c; ++j) {
            if (i == j || letter[j] != letter[i] + 1) continue;
            // i must come first iff adjacent, else j first
            if (g.has_edge(comp[i], comp[j])) {
                succ[i].push_back(j);
                ++indeg[j];
            } else {
                succ[j].push_back(i);
                ++indeg[i];
            }
        }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int i = 0; i < c; ++i)
        if (indeg[i] == 0) ready.push(i);
    std::vector<int> order;
    while (!ready.empty()) {
        int i = ready.top();
        ready.pop();
        order.push_back(i);
        for (int j : succ[i])
            if (--indeg[j] == 0) ready.push(j);
    }
    if (static_cast<int>(order.size()) != c) return std::nullopt;  // obligations cyclic
    return order;
}

constexpr int kLayeringFallbackCap = 22;

// Every valid expression induces a letter assignment in which adjacent
// vertices get consecutive letters; BFS level sets from a good start vertex
// give one cheaply, and small components fall back to enumerating all
// +-1 assignments over a spanning tree.
std::optional<ComponentWord> initial_expression(const Graph& g, const std::vector<int>& comp) {
    int c = static_cast<int>(comp.size());

    auto finish = [&](const std::vector<int>& letter,
                      const std::vector<int>& order) -> ComponentWord {
        ComponentWord w;
        for (int i : order) {
            w.letters.push_back(letter[i]);
            w.verts.push_back(comp[i]);
        }
        w.top_letter = *std::max_element(w.letters.begin(), w.letters.end());
        return w;
    };

    for (int s : comp) {
        auto dist = bfs_distances(g, s);
        std::vector<int> letter(c);
        for (int i = 0; i < c; ++i) letter[i] = dist[comp[i]] + 1;
        if (auto order = order_for_layering(g, comp, letter)) return finish(letter, *order);
    }

    if (c > kLayeringFallbackCap) {
        // letters alternate parity along edges, so an odd cycle settles it
        if (!is_bipartite(induced_subgraph(g, comp))) return std::nullopt;
        throw UnsupportedError("encode_bpg: component too large for the layering fallback");
    }

    // Spanning tree, then all +-1 label assignments over tree edges.
    std::vector<std::pair<int, int>> tree;       // (parent pos, child pos)
    std::vector<int> bfs_order{0};
    std::vector<char> seen(c, 0);
    seen[0] = 1;
    for (std::size_t head = 0; head < bfs_order.size(); ++head) {
        int i = bfs_order[head];
        for (int j = 0; j < c; ++j)
            if (!seen[j] && g.has_edge(comp[i], comp[j])) {
                seen[j] = 1;
                tree.emplace_back(i, j);
                bfs_order.push_back(j);
            }
    }
    std::set<std::vector<int>> tried;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << tree.size()); ++mask) {
        std::vector<int> letter(c, 0);
        for (std::size_t e = 0; e < tree.size(); ++e) {
            auto [p, ch] = tree[e];
            letter[ch] = letter[p] + ((mask >> e & 1) ? 1 : -1);
        }
        int lo = *std::min_element(letter.begin(), letter.end());
        for (int& l : letter) l += 1 - lo;
        if (!tried.insert(letter).second) continue;
        if (auto order = order_for_layering(g, comp, letter)) return finish(letter, *order);
    }
    return std::nullopt;
}

// One rewrite pass; true when a move was applied. Each move strictly
// decreases the sum of letter indices and is validated by re-decoding.
bool normalize_step(const Graph& g, ComponentWord& w) {
    int c = static_cast<int>(w.letters.size());
    auto apply_front_swap = [&](int remove_pos, int new_letter) -> bool {
        std::vector<int> letters{new_letter}, verts{w.verts[remove_pos]};
        for (int i = 0; i < c; ++i) {
            if (i == remove_pos) continue;
            letters.push_back(w.letters[i]);
            verts.push_back(w.verts[i]);
        }
        if (!decodes_to(letters, verts, g)) return false;
        w.letters = std::move(letters);
        w.verts = std::move(verts);
        w.top_letter = *std::max_element(w.letters.begin(), w.letters.end());
        return true;
    };

    // shift down when letter 1 is absent
    if (std::find(w.letters.begin(), w.letters.end(), 1) == w.letters.end()) {
        for (int& l : w.letters) --l;
        --w.top_letter;
        return true;
    }
    // last letter t >= 3: delete it, prepend t-2
    if (w.letters.back() >= 3) {
        if (apply_front_swap(c - 1, w.letters.back() - 2)) return true;
    }
    // rightmost t with no t-1 and no t+1 to its right: replace by a prepended t-2
    for (int t = 3; t <= w.top_letter; ++t) {
        int j = -1;
        for (int i = 0; i < c; ++i)
            if (w.letters[i] == t) j = i;
        if (j < 0) continue;
        bool blocked = false;
        for (int i = j + 1; i < c; ++i)
            if (w.letters[i] == t - 1 || w.letters[i] == t + 1) blocked = true;
        if (blocked) continue;
        if (apply_front_swap(j, t - 2)) return true;
    }
    return false;
}

}  // namespace

std::optional<LetterSystem> encode_bpg(const Graph& g) {
    auto comps = components(g);
    std::vector<ComponentWord> words;
    for (const auto& comp : comps) {
        auto w = initial_expression(g, comp);
        if (!w) return std::nullopt;  // not a bipartite permutation graph
        while (normalize_step(g, *w)) {
        }
        words.push_back(std::move(*w));
    }

    LetterSystem sys;
    int base = 0;
    std::vector<int> bases(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        bases[i] = base;
        base += words[i].top_letter - 1;
    }
    int total_letters = words.empty() ? 0 : base + 1;
    sys.alphabet = path_alphabet(total_letters);
    sys.decoder = path_decoder(total_letters);
    for (std::size_t i = words.size(); i-- > 0;) {
        for (std::size_t p = 0; p < words[i].letters.size(); ++p) {
            sys.word.push_back(words[i].letters[p] + bases[i] - 1);  // to 0-based
            sys.vertex_map.push_back(words[i].verts[p]);
        }
    }

    // Decode and compare against g through the tracked vertex map.
    Graph decoded = letter_graph(sys);
    int n = g.vertex_count();
    if (decoded.vertex_count() != n) throw std::logic_error("encode_bpg: vertex count drift");
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (decoded.has_edge(i, j) != g.has_edge(sys.vertex_map[i - 1], sys.vertex_map[j - 1]))
                throw std::logic_error("encode_bpg: decoded graph mismatch");
    if (total_letters > n / 2 + 1)
        throw std::logic_error("encode_bpg: alphabet exceeds the n/2+1 bound");
    return sys;
}

ChainWordPair encode_chain(const Graph& g) {
    int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("encode_chain: need at least 2 vertices");
    if (components(g).size() != 1) throw std::invalid_argument("encode_chain: graph not connected");
    std::vector<int> side;
    if (!chain_sides(g, side)) throw std::invalid_argument("encode_chain: not a chain graph");

    int a_side = side[1];
    std::vector<int> A, B;
    for (int v = 1; v <= n; ++v) (side[v] == a_side ? A : B).push_back(v);
    std::sort(A.begin(), A.end(), [&](int x, int y) {
        return g.degree(x) != g.degree(y) ? g.degree(x) > g.degree(y) : x < y;
    });
    std::sort(B.begin(), B.end(), [&](int x, int y) {
        return g.degree(x) != g.degree(y) ? g.degree(x) < g.degree(y) : x < y;
    });

    ChainWord w1;
    std::size_t next_a = 0;
    for (int b : B) {
        while (next_a < A.size() && g.has_edge(A[next_a], b)) {
            w1.letters.push_back('a');
            w1.vertex_of_pos.push_back(A[next_a++]);
        }
        w1.letters.push_back('b');
        w1.vertex_of_pos.push_back(b);
    }
    if (next_a != A.size()) throw std::invalid_argument("encode_chain: not a chain graph");

    ChainWord w2;
    for (std::size_t i = w1.letters.size(); i-- > 0;) {
        w2.letters.push_back(w1.letters[i] == 'a' ? 'b' : 'a');
        w2.vertex_of_pos.push_back(w1.vertex_of_pos[i]);
    }

    for (const ChainWord* w : {&w1, &w2}) {
        Graph dec = letter_graph(chain_system(w->letters));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (dec.has_edge(i, j) !=
                    g.has_edge(w->vertex_of_pos[i - 1], w->vertex_of_pos[j - 1]))
                    throw std::logic_error("encode_chain: word does not decode back");
    }
    return {std::move(w1), std::move(w2)};
}

namespace {

// Words of length n over letters 0..k-1 in restricted growth form (first
// occurrences in increasing letter order), all k letters used.
void rgs_words(int n, int k, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> w(n, 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == n) {
            if (used == k) emit(w);
            return;
        }
        if (k - used > n - pos) return;
        int hi = std::min(used, k - 1);  // may reuse, or introduce letter `used`
        for (int l = 0; l <= hi; ++l) {
            w[pos] = l;
            self(self, pos + 1, std::max(used, l + 1));
        }
    };
    rec(rec, 0, 0);
}

}  // namespace

std::optional<int> lettericity_exact(const Graph& g, int kmax) {
    int n = g.vertex_count();
    if (n > 8 || kmax > 3) throw UnsupportedError("lettericity_exact: caps are n <= 8, kmax <= 3");
    if (n == 0) return 0;
    auto target_code = canonical_code(g);
    int target_edges = g.edge_count();
    for (int k = 1; k <= kmax; ++k) {
        bool found = false;
        rgs_words(n, k, [&](const std::vector<int>& w) {
            if (found) return;
            for (unsigned dmask = 0; dmask < (1u << (k * k)); ++dmask) {
                Graph h(n);
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (dmask >> (w[i] * k + w[j]) & 1) h.add_edge(i + 1, j + 1);
                if (h.edge_count() != target_edges) continue;
                if (canonical_code(h) == target_code) {
                    found = true;
                    return;
                }
            }
        });
        if (found) return k;
    }
    return std::nullopt;
}

std::optional<int> path_decoder_alphabet_exact(const Graph& g, int rmax) {
    int n = g.vertex_count();
    if (n > 8 || rmax > 6)
        throw UnsupportedError("path_decoder_alphabet_exact: caps are n <= 8, rmax <= 6");
    if (n == 0) return 0;
    auto target_code = canonical_code(g);
    int target_edges = g.edge_count();
    for (int r = 1; r <= rmax; ++r) {
        std::vector<int> w(n, 0);
        while (true) {
            Graph h(n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (w[j] == w[i] + 1) h.add_edge(i + 1, j + 1);
            if (h.edge_count() == target_edges && canonical_code(h) == target_code) return r;
            int p = n - 1;
            while (p >= 0 && w[p] == r - 1) w[p--] = 0;
            if (p < 0) break;
            ++w[p];
        }
    }
    return std::nullopt;
}

bool subword_embed(const std::string& needle, const std::string& haystack) {
    std::size_t i = 0;
    for (char c : haystack) {
        if (i < needle.size() && needle[i] == c) ++i;
    }
    return i == needle.size();
}

std::vector<Graph> enumerate_bpg(int n, int jobs) {
    if (n < 0) throw std::invalid_argument("enumerate_bpg: negative n");
    if (n > 8) throw UnsupportedError("enumerate_bpg: n <= 8 required");
    if (n == 0) return {Graph(0)};
    int k = n / 2 + 1;
    jobs = std::clamp(jobs, 1, k);

    // Words with a fixed first letter, decoded to labelled edge masks.
    auto scan = [n, k](int first, std::unordered_set<std::uint32_t>& masks) {
        std::vector<int> w(n, 0);
        w[0] = first;
        while (true) {
            std::uint32_t mask = 0;
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (w[j] == w[i] + 1) mask |= std::uint32_t{1} << bit;
            masks.insert(mask);
            int p = n - 1;
            while (p >= 1 && w[p] == k - 1) w[p--] = 0;
            if (p < 1) break;
            ++w[p];
        }
    };
    std::vector<std::unordered_set<std::uint32_t>> parts(k);
    if (jobs == 1) {
        for (int first = 0; first < k; ++first) scan(first, parts[first]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                for (int first = next++; first < k; first = next++) scan(first, parts[first]);
            });
        for (auto& th : pool) th.join();
    }
    std::unordered_set<std::uint32_t> masks;
    for (auto& p : parts) masks.merge(p);

    std::vector<std::uint32_t> todo(masks.begin(), masks.end());
    std::sort(todo.begin(), todo.end());
    auto canon_range = [&](std::size_t lo, std::size_t hi,
                           std::vector<std::pair<CanonicalCode, std::uint32_t>>& out) {
        for (std::size_t i = lo; i < hi; ++i) {
            Graph g(n);
            int bit = 0;
            for (int u = 1; u <= n; ++u)
                for (int v = u + 1; v <= n; ++v, ++bit)
                    if (todo[i] >> bit & 1) g.add_edge(u, v);
            out.emplace_back(canonical_code(g), todo[i]);
        }
    };
    std::vector<std::vector<std::pair<CanonicalCode, std::uint32_t>>> coded(jobs);
    if (jobs == 1) {
        canon_range(0, todo.size(), coded[0]);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (todo.size() + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            std::size_t lo = j * chunk, hi = std::min(todo.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, j, lo, hi] { canon_range(lo, hi, coded[j]); });
        }
        for (auto& th : pool) th.join();
    }
    std::map<CanonicalCode, std::uint32_t> reps;
    for (auto& part : coded)
        for (auto& [code, mask] : part) reps.emplace(code, mask);
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [code, mask] : reps) {
        Graph g(n);
        int bit = 0;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace bpglab
