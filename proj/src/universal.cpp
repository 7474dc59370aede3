#include "bpglab/universal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "bpglab/enumerate.hpp"
#include "bpglab/graph_io.hpp"
#include "bpglab/iso.hpp"
#include "bpglab/named.hpp"

namespace bpglab {

int UniversalBpg::vertex_at(int row, int copy) const {
    if (row < 1 || row > n || copy < 1 || copy > n)
        throw std::invalid_argument("universal_bpg: coordinate out of range");
    return (copy - 1) * n + row;
}

UniversalBpg universal_bpg(int n) {
    if (n < 1) throw std::invalid_argument("universal_bpg: n >= 1 required");
    UniversalBpg u;
    u.n = n;
    u.word.alphabet = path_alphabet(n);
    u.word.decoder = path_decoder(n);
    for (int copy = 0; copy < n; ++copy)
        for (int l = 0; l < n; ++l) u.word.word.push_back(l);
    u.graph = letter_graph(u.word);
    return u;
}

Graph universal_chain(int n) {
    if (n < 1) throw std::invalid_argument("universal_chain: n >= 1 required");
    std::string w;
    for (int i = 0; i < n; ++i) w += "ab";
    return letter_graph(chain_system(w));
}

Graph universal_star_forest(int n) {
    if (n < 1) throw std::invalid_argument("universal_star_forest: n >= 1 required");
    std::vector<Graph> parts;
    parts.reserve(n);
    for (int i = 1; i <= n; ++i) parts.push_back(star(n / i));
    return disjoint_union(std::span<const Graph>(parts.data(), parts.size()));
}

Graph universal_star_forest_bounded(int k, int n) {
    if (k < 2 || n < 1)
        throw std::invalid_argument("universal_star_forest_bounded: k >= 2, n >= 1 required");
    std::vector<Graph> parts;
    for (int i = 0; i < k - 1; ++i) parts.push_back(star(n));
    for (int i = 0; i < n; ++i) parts.push_back(star(k - 1));
    return disjoint_union(std::span<const Graph>(parts.data(), parts.size()));
}

namespace {

// Q_t, with the zigzag path laid out first (path order) and the column after
// it. D(i), A(i), B(i) are the diagonal, upper and lower vertices of zigzag
// block i; c_i the column vertices, y = c_1, x = c_{t+3}.
struct QtLayout {
    int t;
    int D(int i) const { return 3 * i + 1; }          // i = 0..t+2
    int A(int i) const { return 3 * i + 2; }          // i = 0..t+1
    int B(int i) const { return 3 * i + 3; }          // i = 0..t+1
    int c(int i) const { return 3 * t + 7 + i; }      // i = 1..t+3
    int total() const { return 4 * t + 10; }

    Graph build() const {
        Graph g(total());
        for (int i = 0; i <= t + 1; ++i) {
            g.add_edge(D(i), A(i));
            g.add_edge(A(i), B(i));
            g.add_edge(B(i), D(i + 1));
        }
        for (int i = 1; i <= t + 2; ++i) g.add_edge(c(i), c(i + 1));
        for (int i = 2; i <= t + 3; ++i) g.add_edge(c(i), A(i - 2));
        for (int i = 1; i <= t + 3; ++i) g.add_edge(c(i), D(i - 1));
        for (int i = 1; i <= t + 2; ++i) g.add_edge(c(i), B(i - 1));
        return g;
    }
};

// Replace each vertex by an independent block of the given multiplicity,
// preserving adjacency between blocks; blocks follow the original order.
Graph inflate(const Graph& g, const std::vector<int>& mult, std::vector<std::vector<int>>& blocks) {
    int n = g.vertex_count();
    blocks.assign(n + 1, {});
    int total = 0;
    for (int v = 1; v <= n; ++v) total += mult[v];
    Graph out(total);
    int next = 1;
    for (int v = 1; v <= n; ++v)
        for (int i = 0; i < mult[v]; ++i) blocks[v].push_back(next++);
    for (auto [u, v] : g.edges())
        for (int a : blocks[u])
            for (int b : blocks[v]) out.add_edge(a, b);
    return out;
}

}  // namespace

RigidWitness rigid_witness(int t) {
    if (t < 1) throw std::invalid_argument("rigid_witness: t >= 1 required");
    QtLayout q{t};
    RigidWitness w;
    w.graph = q.build();
    for (int i = 0; i <= t + 1; ++i) {
        w.zigzag.push_back(q.D(i));
        w.zigzag.push_back(q.A(i));
        w.zigzag.push_back(q.B(i));
    }
    w.zigzag.push_back(q.D(t + 2));
    for (int i = 1; i <= t + 3; ++i) w.column.push_back(q.c(i));
    w.X = {q.c(t + 3)};
    w.Y = {q.c(1)};
    return w;
}

RigidWitness rigid_witness_inflated(int n, int t) {
    if (t < 1) throw std::invalid_argument("rigid_witness_inflated: t >= 1 required");
    int s = (n - 4 * t - 8) / 2;
    if (s < 1) throw std::invalid_argument("rigid_witness_inflated: n too small for this t");
    QtLayout q{t};
    Graph base = q.build();
    std::vector<int> mult(base.vertex_count() + 1, 1);
    mult[q.c(1)] = s;
    mult[q.c(t + 3)] = s;
    std::vector<std::vector<int>> blocks;
    RigidWitness w;
    w.graph = inflate(base, mult, blocks);
    for (int i = 0; i <= t + 1; ++i) {
        w.zigzag.push_back(blocks[q.D(i)][0]);
        w.zigzag.push_back(blocks[q.A(i)][0]);
        w.zigzag.push_back(blocks[q.B(i)][0]);
    }
    w.zigzag.push_back(blocks[q.D(t + 2)][0]);
    for (int i = 1; i <= t + 3; ++i) w.column.push_back(blocks[q.c(i)][0]);
    w.X = blocks[q.c(t + 3)];
    w.Y = blocks[q.c(1)];
    return w;
}

RigidWitnessMulti rigid_witness_multi(int n, const std::vector<int>& marks) {
    if (marks.empty()) throw std::invalid_argument("rigid_witness_multi: no marks");
    std::vector<int> ms = marks;
    std::sort(ms.begin(), ms.end());
    if (ms.front() < 1) throw std::invalid_argument("rigid_witness_multi: marks must be >= 1");
    if (std::adjacent_find(ms.begin(), ms.end()) != ms.end())
        throw std::invalid_argument("rigid_witness_multi: duplicate mark");
    int t = ms.back();
    QtLayout q{t};
    int sets = static_cast<int>(ms.size()) + 1;
    int budget = n - q.total() + sets;
    int each = budget / sets;
    if (each < 1) throw std::invalid_argument("rigid_witness_multi: n too small for these marks");
    std::vector<int> sizes(sets, each);
    sizes[0] += budget - each * sets;  // remainder goes to the c_1 set

    Graph base = q.build();
    std::vector<int> mult(base.vertex_count() + 1, 1);
    mult[q.c(1)] = sizes[0];
    for (std::size_t i = 0; i < ms.size(); ++i) mult[q.c(ms[i] + 3)] = sizes[i + 1];
    std::vector<std::vector<int>> blocks;
    RigidWitnessMulti w;
    w.graph = inflate(base, mult, blocks);
    w.sets.push_back(blocks[q.c(1)]);
    for (int m : ms) w.sets.push_back(blocks[q.c(m + 3)]);
    return w;
}

namespace {

void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& emit) {
    if (n == 0) {
        emit(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, emit);
        cur.pop_back();
    }
}

std::vector<Graph> forests_from_partitions(int n, const std::function<Graph(int)>& component) {
    std::vector<Graph> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, [&](const std::vector<int>& parts) {
        std::vector<Graph> comps;
        comps.reserve(parts.size());
        for (int p : parts) comps.push_back(component(p));
        out.push_back(disjoint_union(std::span<const Graph>(comps.data(), comps.size())));
    });
    return out;
}

std::vector<Graph> dedup_sorted(std::vector<Graph> gs) {
    std::map<CanonicalCode, Graph> reps;
    for (auto& g : gs) reps.emplace(canonical_code(g), std::move(g));
    std::vector<Graph> out;
    out.reserve(reps.size());
    for (auto& [code, g] : reps) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> filter_members(std::vector<Graph> gs, const ClassId& c) {
    std::vector<Graph> out;
    for (auto& g : gs)
        if (is_member(c, g)) out.push_back(std::move(g));
    return out;
}

}  // namespace

std::vector<Graph> enumerate_class(const ClassId& c, int n, bool allow_large) {
    if (n < 0) throw std::invalid_argument("enumerate_class: negative n");
    if (n == 0) return {Graph(0)};
    switch (c.tag) {
        case ClassId::star_forest:
            return forests_from_partitions(n, [](int sz) { return star(sz - 1); });
        case ClassId::linear_forest:
            return forests_from_partitions(n, [](int sz) { return path(sz); });
        case ClassId::degree_le1: {
            std::vector<Graph> out;
            for (int e = n / 2; e >= 0; --e) {
                std::vector<Graph> comps;
                for (int i = 0; i < e; ++i) comps.push_back(path(2));
                for (int i = 0; i < n - 2 * e; ++i) comps.push_back(path(1));
                out.push_back(disjoint_union(std::span<const Graph>(comps.data(), comps.size())));
            }
            return out;
        }
        case ClassId::chain: {
            if (n > 12) throw UnsupportedError("enumerate_class(chain): n <= 12 required");
            std::vector<Graph> all;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::string w;
                for (int i = 0; i < n; ++i) w += (mask >> i & 1) ? 'b' : 'a';
                all.push_back(letter_graph(chain_system(w)));
            }
            return dedup_sorted(std::move(all));
        }
        case ClassId::bpg:
            return enumerate_bpg(n);
        case ClassId::caterpillar_forest:
        case ClassId::p5free_bipartite:
        case ClassId::boundary_L:
        case ClassId::class_Xi:
            return filter_members(enumerate_bpg(n), c);
        case ClassId::bipartite:
        case ClassId::kSk_free:
            return filter_members(enumerate_graphs(n, allow_large), c);
    }
    throw std::logic_error("enumerate_class: unhandled class");
}

UniversalityReport verify_universal(const ClassId& c, int n, const Graph& u, int jobs) {
    auto catalogue = enumerate_class(c, n);
    UniversalityReport rep;
    rep.checked = static_cast<int>(catalogue.size());
    std::vector<char> ok(catalogue.size(), 0);
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < catalogue.size(); ++i)
            ok[i] = find_induced(u, catalogue[i]).has_value();
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (catalogue.size() + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            std::size_t lo = j * chunk, hi = std::min(catalogue.size(), lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t i = lo; i < hi; ++i)
                    ok[i] = find_induced(u, catalogue[i]).has_value();
            });
        }
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < catalogue.size(); ++i)
        if (!ok[i]) {
            rep.pass = false;
            rep.first_failure = catalogue[i];
            break;
        }
    return rep;
}

}  // namespace bpglab
