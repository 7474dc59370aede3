#include "bpglab/isi.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "bpglab/graph_io.hpp"
#include "bpglab/metrics.hpp"
#include "bpglab/recognition.hpp"

namespace bpglab {

namespace {

void trim(ForestProfile& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int at(const ForestProfile& p, int i) {  // 1-based
    return i >= 1 && i <= static_cast<int>(p.size()) ? p[i - 1] : 0;
}

}  // namespace

ForestProfile profile_of(const Graph& g) {
    ForestProfile alpha;
    for (const auto& comp : components(g)) {
        int sz = static_cast<int>(comp.size());
        int edges = 0, maxdeg = 0;
        for (int v : comp) {
            int d = 0;
            for (int u : comp)
                if (u != v && g.has_edge(u, v)) ++d;
            maxdeg = std::max(maxdeg, d);
            edges += d;
        }
        edges /= 2;
        if (edges != sz - 1 || maxdeg > 2)
            throw std::invalid_argument("profile_of: not a linear forest");
        if (static_cast<int>(alpha.size()) < sz) alpha.resize(sz, 0);
        ++alpha[sz - 1];
    }
    return alpha;
}

int profile_vertices(const ForestProfile& p) {
    int total = 0;
    for (std::size_t i = 0; i < p.size(); ++i) total += p[i] * static_cast<int>(i + 1);
    return total;
}

std::vector<ForestProfile> columns_A(int i) {
    if (i < 1) throw std::invalid_argument("columns_A: i >= 1 required");
    std::vector<ForestProfile> out;
    ForestProfile cur(i, 0);
    // pieces P_j cost j+1 cells each (the piece plus a separating gap)
    auto rec = [&](auto&& self, int j, int left) -> void {
        if (j > i) {
            ForestProfile p = cur;
            trim(p);
            out.push_back(std::move(p));
            return;
        }
        for (int cnt = 0; cnt * (j + 1) <= left; ++cnt) {
            cur[j - 1] = cnt;
            self(self, j + 1, left - cnt * (j + 1));
        }
        cur[j - 1] = 0;
    };
    rec(rec, 1, i + 1);
    std::sort(out.begin(), out.end());
    return out;
}

IlpSystem build_cover_system(const Graph& host, const Graph& pattern, bool include_empty) {
    ForestProfile beta = profile_of(host);
    ForestProfile alpha = profile_of(pattern);
    IlpSystem sys;
    sys.rows = static_cast<int>(std::max(alpha.size(), beta.size()));
    alpha.resize(sys.rows, 0);
    beta.resize(sys.rows, 0);
    sys.demand = std::move(alpha);
    sys.capacity = std::move(beta);
    for (int i = 1; i <= sys.rows; ++i) {
        auto cols = columns_A(i);
        if (!include_empty)
            std::erase_if(cols, [](const ForestProfile& p) { return p.empty(); });
        sys.blocks.push_back(std::move(cols));
    }
    return sys;
}

namespace {

struct CoverSolver {
    const IlpSystem& sys;
    std::vector<int> covered;
    std::vector<std::vector<int>> potential;  // potential[b][r]: best later coverage
    std::vector<std::vector<int>> counts;     // chosen multiplicity per block/column

    explicit CoverSolver(const IlpSystem& s) : sys(s), covered(s.rows, 0) {
        potential.assign(sys.rows + 1, std::vector<int>(sys.rows, 0));
        for (int b = sys.rows - 1; b >= 0; --b) {
            for (int r = 0; r < sys.rows; ++r) {
                int best = 0;
                for (const auto& col : sys.blocks[b]) best = std::max(best, at(col, r + 1));
                potential[b][r] = potential[b + 1][r] + best * sys.capacity[b];
            }
        }
        counts.resize(sys.rows);
        for (int b = 0; b < sys.rows; ++b) counts[b].assign(sys.blocks[b].size(), 0);
    }

    bool satisfied() const {
        for (int r = 0; r < sys.rows; ++r)
            if (covered[r] < sys.demand[r]) return false;
        return true;
    }

    bool block(int b) {
        if (satisfied()) return true;
        if (b == sys.rows) return false;
        for (int r = 0; r < sys.rows; ++r)
            if (covered[r] + potential[b][r] < sys.demand[r]) return false;
        return column(b, 0, sys.capacity[b]);
    }

    bool column(int b, int ci, int left) {
        if (ci == static_cast<int>(sys.blocks[b].size())) return block(b + 1);
        const auto& col = sys.blocks[b][ci];
        for (int x = left; x >= 0; --x) {
            counts[b][ci] = x;
            for (int r = 0; r < sys.rows; ++r) covered[r] += x * at(col, r + 1);
            bool ok = column(b, ci + 1, left - x);
            for (int r = 0; r < sys.rows; ++r) covered[r] -= x * at(col, r + 1);
            if (ok) return true;
        }
        counts[b][ci] = 0;
        return false;
    }
};

}  // namespace

bool solve_cover_system(const IlpSystem& sys, std::vector<CoverTerm>* solution) {
    CoverSolver solver(sys);
    if (!solver.block(0)) return false;
    if (solution) {
        solution->clear();
        ForestProfile got(sys.rows, 0);
        std::vector<int> spent(sys.rows, 0);
        for (int b = 0; b < sys.rows; ++b)
            for (std::size_t ci = 0; ci < sys.blocks[b].size(); ++ci) {
                int x = solver.counts[b][ci];
                if (!x) continue;
                solution->push_back({b + 1, sys.blocks[b][ci], x});
                spent[b] += x;
                for (int r = 0; r < sys.rows; ++r) got[r] += x * at(sys.blocks[b][ci], r + 1);
            }
        for (int r = 0; r < sys.rows; ++r)
            if (got[r] < sys.demand[r] || spent[r] > sys.capacity[r])
                throw std::logic_error("solve_cover_system: invalid certificate");
    }
    return true;
}

bool isi_linear_forest(const Graph& g, const Graph& h, std::vector<CoverTerm>* solution) {
    return solve_cover_system(build_cover_system(g, h), solution);
}

int chain_word_independence(const std::string& w) {
    int n = static_cast<int>(w.size());
    int best = 0;
    for (int p = 0; p <= n; ++p) {
        int v = 0;
        for (int i = 0; i < p; ++i) v += w[i] == 'b';
        for (int i = p; i < n; ++i) v += w[i] == 'a';
        best = std::max(best, v);
    }
    return best;
}

std::optional<int> component_weight(const std::string& wG, const ChainWordPair& hPair) {
    const std::string& h1 = hPair.w1.letters;
    const std::string& h2 = hPair.w2.letters;
    if (!subword_embed(h1, wG) && !subword_embed(h2, wG)) return std::nullopt;
    int t = static_cast<int>(wG.size());
    std::optional<int> nu;
    for (int i = 0; i < t; ++i) {
        if (wG[i] != 'a') continue;
        for (int j = i + 1; j < t; ++j) {
            if (wG[j] != 'b') continue;
            std::string window = wG.substr(i, j - i + 1);
            if (!subword_embed(h1, window) && !subword_embed(h2, window)) continue;
            int before = 0, after = 0;
            for (int p = 0; p < i; ++p) before += wG[p] == 'b';
            for (int p = j + 1; p < t; ++p) after += wG[p] == 'a';
            int val = before + after;
            if (!nu || val > *nu) nu = val;
        }
    }
    return nu;
}

namespace {

constexpr long long kInf = LLONG_MAX / 4;

// Min-cost perfect assignment with potentials; cost[i][j], square, 0-based.
// Returns assignment row_of_col and the total cost.
long long assignment_min(const std::vector<std::vector<long long>>& cost,
                         std::vector<int>& row_of_col) {
    int n = static_cast<int>(cost.size());
    std::vector<long long> u(n + 1, 0), v(n + 1, 0), minv(n + 1, 0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::fill(minv.begin(), minv.end(), kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            int i0 = p[j0], j1 = -1;
            long long delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                long long cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0);
    }
    row_of_col.assign(n, -1);
    long long total = 0;
    for (int j = 1; j <= n; ++j) {
        row_of_col[j - 1] = p[j] - 1;
        total += cost[p[j] - 1][j - 1];
    }
    return total;
}

struct ChainComponent {
    std::vector<int> verts;  // global labels, sorted
    ChainWordPair words;     // positions name local labels 1..size
};

int global_of(const ChainComponent& c, int local) { return c.verts[local - 1]; }

// Greedy leftmost subword embedding; returns positions in the haystack
// (0-based) or nothing.
std::optional<std::vector<int>> subword_positions(const std::string& needle,
                                                  const std::string& haystack) {
    std::vector<int> pos;
    std::size_t i = 0;
    for (std::size_t p = 0; p < haystack.size() && i < needle.size(); ++p)
        if (haystack[p] == needle[i]) {
            pos.push_back(static_cast<int>(p));
            ++i;
        }
    if (i != needle.size()) return std::nullopt;
    return pos;
}

}  // namespace

namespace {

void check_chain_components(const Graph& g, const Graph& h) {
    for (const Graph* x : {&g, &h})
        if (!is_member({ClassId::p5free_bipartite, 0}, *x))
            throw UnsupportedError("isi_p5free: components must all be chain graphs");
}

void split_components(const Graph& x, std::vector<ChainComponent>& out, int& iso) {
    for (const auto& comp : components(x)) {
        if (comp.size() == 1) {
            ++iso;
            continue;
        }
        ChainComponent c;
        c.verts = comp;
        c.words = encode_chain(induced_subgraph(x, comp));
        out.push_back(std::move(c));
    }
}

WeightMatrix matrix_of(const Graph& g, const std::vector<ChainComponent>& gc,
                       const std::vector<ChainComponent>& hc, MatchingRule rule) {
    int ng = static_cast<int>(gc.size()), nh = static_cast<int>(hc.size());
    WeightMatrix m;
    m.real_columns = nh;
    m.sentinel =
        -(static_cast<long long>(g.vertex_count()) * std::max(ng, 1) * std::max(nh, 1) + 1);
    if (nh > ng) return m;  // no square assignment exists
    m.w.assign(ng, std::vector<long long>(ng, 0));
    for (int r = 0; r < ng; ++r) {
        const std::string& wG = gc[r].words.w1.letters;
        for (int c = 0; c < nh; ++c) {
            auto val = component_weight(wG, hc[c].words);
            m.w[r][c] = val ? *val : m.sentinel;
        }
        long long dummy = rule == MatchingRule::padded ? chain_word_independence(wG) : 0;
        for (int c = nh; c < ng; ++c) m.w[r][c] = dummy;
    }
    return m;
}

}  // namespace

WeightMatrix build_weight_matrix(const Graph& g, const Graph& h, MatchingRule rule) {
    check_chain_components(g, h);
    std::vector<ChainComponent> gc, hc;
    int iso_g = 0, iso_h = 0;
    split_components(g, gc, iso_g);
    split_components(h, hc, iso_h);
    return matrix_of(g, gc, hc, rule);
}

bool isi_p5free(const Graph& g, const Graph& h, MatchingRule rule,
                std::optional<Embedding>* witness) {
    if (witness) witness->reset();
    check_chain_components(g, h);

    std::vector<ChainComponent> gc, hc;
    int iso_g = 0, iso_h = 0;
    split_components(g, gc, iso_g);
    split_components(h, hc, iso_h);

    int ng = static_cast<int>(gc.size()), nh = static_cast<int>(hc.size());
    if (nh > ng) return false;

    WeightMatrix weight = matrix_of(g, gc, hc, rule);
    long long total = 0;
    std::vector<int> row_of_col;
    if (ng > 0) {
        std::vector<std::vector<long long>> cost(ng, std::vector<long long>(ng));
        for (int r = 0; r < ng; ++r)
            for (int c = 0; c < ng; ++c) cost[r][c] = -weight.w[r][c];
        total = -assignment_min(cost, row_of_col);
    }
    // A sentinel edge drags the optimum below zero, so total >= 0 is
    // equivalent to all pattern components being genuinely matched.
    long long spare = rule == MatchingRule::padded ? iso_g : 0;
    bool yes = total >= 0 && total + spare >= iso_h;
    if (!yes || !witness) return yes;

    // Assemble a concrete embedding from the matching.
    Embedding emb{h, g, std::vector<int>(h.vertex_count() + 1, 0)};
    std::vector<int> slots;  // host vertices able to hold isolated pattern vertices
    std::vector<char> row_used(ng, 0);
    for (int c = 0; c < nh; ++c) {
        int r = row_of_col[c];
        row_used[r] = 1;
        const std::string& wG = gc[r].words.w1.letters;
        const auto& g_pos_vertex = gc[r].words.w1.vertex_of_pos;
        long long target = weight.w[r][c];
        bool placed = false;
        for (int i = 0; i < static_cast<int>(wG.size()) && !placed; ++i) {
            if (wG[i] != 'a') continue;
            for (int j = i + 1; j < static_cast<int>(wG.size()) && !placed; ++j) {
                if (wG[j] != 'b') continue;
                int before = 0, after = 0;
                for (int p = 0; p < i; ++p) before += wG[p] == 'b';
                for (int p = j + 1; p < static_cast<int>(wG.size()); ++p) after += wG[p] == 'a';
                if (before + after != target) continue;
                std::string window = wG.substr(i, j - i + 1);
                for (const ChainWord* hw : {&hc[c].words.w1, &hc[c].words.w2}) {
                    auto pos = subword_positions(hw->letters, window);
                    if (!pos) continue;
                    for (std::size_t q = 0; q < pos->size(); ++q) {
                        int hv = global_of(hc[c], hw->vertex_of_pos[q]);
                        int gv = global_of(gc[r], g_pos_vertex[i + (*pos)[q]]);
                        emb.map[hv] = gv;
                    }
                    for (int p = 0; p < i; ++p)
                        if (wG[p] == 'b') slots.push_back(global_of(gc[r], g_pos_vertex[p]));
                    for (int p = j + 1; p < static_cast<int>(wG.size()); ++p)
                        if (wG[p] == 'a') slots.push_back(global_of(gc[r], g_pos_vertex[p]));
                    placed = true;
                    break;
                }
            }
        }
        if (!placed) throw std::logic_error("isi_p5free: could not realize a matched weight");
    }
    if (rule == MatchingRule::padded) {
        for (int r = 0; r < ng; ++r) {
            if (row_used[r]) continue;
            const std::string& wG = gc[r].words.w1.letters;
            int n = static_cast<int>(wG.size()), best = 0, bestp = 0;
            for (int p = 0; p <= n; ++p) {
                int v = 0;
                for (int q = 0; q < p; ++q) v += wG[q] == 'b';
                for (int q = p; q < n; ++q) v += wG[q] == 'a';
                if (v > best) {
                    best = v;
                    bestp = p;
                }
            }
            for (int q = 0; q < bestp; ++q)
                if (wG[q] == 'b') slots.push_back(global_of(gc[r], gc[r].words.w1.vertex_of_pos[q]));
            for (int q = bestp; q < n; ++q)
                if (wG[q] == 'a') slots.push_back(global_of(gc[r], gc[r].words.w1.vertex_of_pos[q]));
        }
        for (const auto& comp : components(g))
            if (comp.size() == 1) slots.push_back(comp[0]);
    }
    std::size_t next = 0;
    for (const auto& comp : components(h)) {
        if (comp.size() != 1) continue;
        if (next >= slots.size()) throw std::logic_error("isi_p5free: not enough isolated slots");
        emb.map[comp[0]] = slots[next++];
    }
    if (!emb.valid()) throw std::logic_error("isi_p5free: assembled embedding invalid");
    *witness = std::move(emb);
    return true;
}

std::optional<Embedding> isi_bruteforce(const Graph& g, const Graph& h) {
    return find_induced(g, h);
}

bool isi_auto(const Graph& g, const Graph& h) {
    auto linear = [](const Graph& x) { return is_member({ClassId::linear_forest, 0}, x); };
    if (linear(g) && linear(h)) return isi_linear_forest(g, h);
    auto p5free = [](const Graph& x) { return is_member({ClassId::p5free_bipartite, 0}, x); };
    if (p5free(g) && p5free(h)) return isi_p5free(g, h);
    if (h.vertex_count() > kBruteforcePatternCap || g.vertex_count() > kBruteforceHostCap)
        throw UnsupportedError("isi_auto: instance too large for the exhaustive solver");
    return isi_bruteforce(g, h).has_value();
}

}  // namespace bpglab
