#include "bpglab/recognition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bpglab/iso.hpp"
#include "bpglab/letters.hpp"
#include "bpglab/metrics.hpp"
#include "bpglab/named.hpp"

namespace bpglab {

namespace {

struct PatternPlan {
    // Assignment order over pattern vertices: components largest first,
    // isomorphic components adjacent, each component in BFS order from its
    // highest-degree vertex.
    std::vector<int> order;
    std::vector<int> parent_pos;      // earliest placed pattern-neighbour's position, -1 for anchors
    std::vector<bool> tied_to_prev;   // anchor of a component isomorphic to the previous one
};

PatternPlan plan_pattern(const Graph& pat) {
    PatternPlan plan;
    auto comps = components(pat);
    std::vector<std::pair<CanonicalCode, std::vector<int>>> keyed;
    keyed.reserve(comps.size());
    for (auto& c : comps) keyed.emplace_back(canonical_code(induced_subgraph(pat, c)), c);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.second.size() != b.second.size()) return a.second.size() > b.second.size();
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    for (std::size_t ci = 0; ci < keyed.size(); ++ci) {
        const auto& verts = keyed[ci].second;
        int root = verts[0];
        for (int v : verts)
            if (pat.degree(v) > pat.degree(root)) root = v;
        std::vector<int> bfs{root};
        std::vector<char> in(pat.vertex_count() + 1, 0);
        in[root] = 1;
        for (std::size_t head = 0; head < bfs.size(); ++head)
            for (int u : pat.neighbours(bfs[head]))
                if (!in[u]) {
                    in[u] = 1;
                    bfs.push_back(u);
                }
        bool tied = ci > 0 && keyed[ci].first == keyed[ci - 1].first &&
                    keyed[ci].second.size() == keyed[ci - 1].second.size();
        for (std::size_t i = 0; i < bfs.size(); ++i) {
            int p = bfs[i];
            int parent = -1;
            for (std::size_t k = 0; k < plan.order.size(); ++k)
                if (pat.has_edge(p, plan.order[k])) {
                    parent = static_cast<int>(k);
                    break;
                }
            plan.order.push_back(p);
            plan.parent_pos.push_back(parent);
            plan.tied_to_prev.push_back(i == 0 && tied);
        }
    }
    return plan;
}

struct Matcher {
    const Graph& g;
    const Graph& pat;
    PatternPlan plan;
    std::vector<int> img;        // by position
    std::vector<char> used;      // target vertices
    std::vector<int> anchor_img; // image of each anchor position, parallel to order

    Matcher(const Graph& gg, const Graph& pp) : g(gg), pat(pp), plan(plan_pattern(pp)) {
        img.assign(plan.order.size(), 0);
        used.assign(g.vertex_count() + 1, 0);
    }

    bool consistent(int pos, int w) const {
        int p = plan.order[pos];
        if (g.degree(w) < pat.degree(p)) return false;
        for (int k = 0; k < pos; ++k)
            if (pat.has_edge(p, plan.order[k]) != g.has_edge(w, img[k])) return false;
        return true;
    }

    bool dfs(int pos, int prev_anchor_img) {
        if (pos == static_cast<int>(plan.order.size())) return true;
        int lo = 1;
        if (plan.parent_pos[pos] < 0 && plan.tied_to_prev[pos]) lo = prev_anchor_img + 1;
        if (plan.parent_pos[pos] >= 0) {
            // Connected extension: candidates among neighbours of the
            // already-placed pattern-neighbour's image.
            for (int w : g.neighbours(img[plan.parent_pos[pos]])) {
                if (used[w] || !consistent(pos, w)) continue;
                used[w] = 1;
                img[pos] = w;
                if (dfs(pos + 1, prev_anchor_img)) return true;
                used[w] = 0;
            }
            return false;
        }
        for (int w = lo; w <= g.vertex_count(); ++w) {
            if (used[w] || !consistent(pos, w)) continue;
            used[w] = 1;
            img[pos] = w;
            if (dfs(pos + 1, w)) return true;
            used[w] = 0;
        }
        return false;
    }
};

Embedding make_embedding(const Graph& pat, const Graph& g, const std::vector<int>& order,
                         const std::vector<int>& img) {
    Embedding e{pat, g, std::vector<int>(pat.vertex_count() + 1, 0)};
    for (std::size_t k = 0; k < order.size(); ++k) e.map[order[k]] = img[k];
    return e;
}

}  // namespace

std::optional<Embedding> find_induced(const Graph& g, const Graph& pattern) {
    if (pattern.vertex_count() > g.vertex_count()) return std::nullopt;
    if (pattern.vertex_count() == 0)
        return Embedding{pattern, g, std::vector<int>(1, 0)};
    Matcher m(g, pattern);
    if (!m.dfs(0, 0)) return std::nullopt;
    return make_embedding(pattern, g, m.plan.order, m.img);
}

std::optional<Embedding> find_star_forest_pattern(const Graph& g, int k, int m) {
    if (k < 1 || m < 0) throw std::invalid_argument("find_star_forest_pattern: k >= 1, m >= 0");
    int n = g.vertex_count();
    std::vector<Graph> stars(k, star(m));
    Graph pattern = disjoint_union(std::span<const Graph>(stars.data(), stars.size()));
    if (pattern.vertex_count() > n) return std::nullopt;

    std::vector<int> centres;
    std::vector<int> leaf_of(static_cast<std::size_t>(k) * m, 0);

    // leaves chosen so far, flat; per-star blocks of size m, increasing inside a block
    struct Search {
        const Graph& g;
        int k, m, n;
        std::vector<int>& centres;
        std::vector<int>& leaves;
        std::vector<char> used;

        Search(const Graph& gg, int kk, int mm, std::vector<int>& cs, std::vector<int>& ls)
            : g(gg), k(kk), m(mm), n(gg.vertex_count()), centres(cs), leaves(ls),
              used(gg.vertex_count() + 1, 0) {}

        // filled = number of leaf slots committed so far (flat index)
        bool leaf_ok(int star, int v, int filled) const {
            if (used[v]) return false;
            if (!g.has_edge(centres[star], v)) return false;
            for (int j = 0; j < static_cast<int>(centres.size()); ++j)
                if (j != star && g.has_edge(centres[j], v)) return false;
            for (int idx = 0; idx < filled; ++idx)
                if (g.has_edge(leaves[idx], v)) return false;
            return true;
        }

        bool pick_leaves(int star, int slot, int from) {
            if (star == k) return true;
            if (slot == m) return pick_leaves(star + 1, 0, 1);
            for (int v = from; v <= n; ++v) {
                if (!leaf_ok(star, v, star * m + slot)) continue;
                used[v] = 1;
                leaves[star * m + slot] = v;
                if (pick_leaves(star, slot + 1, v + 1)) return true;
                used[v] = 0;
            }
            return false;
        }

        bool pick_centres(int got, int from) {
            if (got == k) {
                // Each centre needs m eligible private leaves before descending.
                for (int s = 0; s < k; ++s) {
                    int avail = 0;
                    for (int v = 1; v <= n; ++v)
                        if (leaf_ok(s, v, 0)) ++avail;
                    if (avail < m) return false;
                }
                return pick_leaves(0, 0, 1);
            }
            for (int v = from; v <= n; ++v) {
                if (g.degree(v) < m) continue;
                bool ok = true;
                for (int c : centres)
                    if (g.has_edge(c, v)) ok = false;
                if (!ok) continue;
                centres.push_back(v);
                used[v] = 1;
                if (pick_centres(got + 1, v + 1)) return true;
                used[v] = 0;
                centres.pop_back();
            }
            return false;
        }
    } search(g, k, m, centres, leaf_of);

    if (!search.pick_centres(0, 1)) return std::nullopt;
    Embedding e{pattern, g, std::vector<int>(pattern.vertex_count() + 1, 0)};
    for (int s = 0; s < k; ++s) {
        e.map[s * (m + 1) + 1] = centres[s];
        for (int j = 0; j < m; ++j) e.map[s * (m + 1) + 2 + j] = leaf_of[s * m + j];
    }
    if (!e.valid()) throw std::logic_error("find_star_forest_pattern: invalid embedding produced");
    return e;
}

std::optional<std::vector<int>> find_long_hole(const Graph& g, int minlen) {
    if (minlen < 4) throw std::invalid_argument("find_long_hole: minlen >= 4 required");
    int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> in(n + 1, 0);
    std::optional<std::vector<int>> found;

    auto dfs = [&](auto&& self) -> bool {
        int last = path.back();
        for (int w : g.neighbours(last)) {
            if (w <= path[0] || in[w]) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(w, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (g.has_edge(w, path[0])) {
                if (static_cast<int>(path.size()) + 1 >= minlen) {
                    path.push_back(w);
                    found = path;
                    return true;
                }
                continue;  // closing early would leave the chord w-path[0]
            }
            path.push_back(w);
            in[w] = 1;
            if (self(self)) return true;
            in[w] = 0;
            path.pop_back();
        }
        return false;
    };

    for (int v0 = 1; v0 <= n && !found; ++v0) {
        for (int v1 : g.neighbours(v0)) {
            if (v1 <= v0) continue;
            path = {v0, v1};
            in.assign(n + 1, 0);
            in[v0] = in[v1] = 1;
            if (dfs(dfs)) break;
        }
    }
    return found;
}

ClassId ClassId::parse(const std::string& text) {
    static const std::map<std::string, Tag> plain = {
        {"bipartite", bipartite},
        {"bpg", bpg},
        {"chain", chain},
        {"degree_le1", degree_le1},
        {"linear_forest", linear_forest},
        {"star_forest", star_forest},
        {"caterpillar_forest", caterpillar_forest},
        {"p5free_bipartite", p5free_bipartite},
        {"boundary_L", boundary_L},
    };
    if (auto it = plain.find(text); it != plain.end()) return {it->second, 0};
    auto param_tag = [&](const std::string& prefix, Tag tag) -> std::optional<ClassId> {
        if (text.size() > prefix.size() + 2 && text.compare(0, prefix.size() + 1, prefix + "(") == 0 &&
            text.back() == ')') {
            std::string num = text.substr(prefix.size() + 1, text.size() - prefix.size() - 2);
            if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos) {
                int p = std::stoi(num);
                if (p >= 1) return ClassId{tag, p};
            }
        }
        return std::nullopt;
    };
    if (auto c = param_tag("class_Xi", class_Xi)) return *c;
    if (auto c = param_tag("kSk_free", kSk_free)) return *c;
    throw std::invalid_argument("unknown class tag '" + text + "'");
}

std::string ClassId::name() const {
    switch (tag) {
        case bipartite: return "bipartite";
        case bpg: return "bpg";
        case chain: return "chain";
        case degree_le1: return "degree_le1";
        case linear_forest: return "linear_forest";
        case star_forest: return "star_forest";
        case caterpillar_forest: return "caterpillar_forest";
        case p5free_bipartite: return "p5free_bipartite";
        case boundary_L: return "boundary_L";
        case class_Xi: return "class_Xi(" + std::to_string(param) + ")";
        case kSk_free: return "kSk_free(" + std::to_string(param) + ")";
    }
    return "?";
}

std::vector<std::string> ClassId::known_tags() {
    return {"bipartite",       "bpg",           "chain",
            "degree_le1",      "linear_forest", "star_forest",
            "caterpillar_forest", "p5free_bipartite", "boundary_L",
            "class_Xi(i)",     "kSk_free(k)"};
}

namespace {

bool component_is_path(const Graph& g, const std::vector<int>& comp) {
    int edges = 0, maxdeg = 0;
    for (std::size_t i = 0; i < comp.size(); ++i) {
        int d = 0;
        for (std::size_t j = 0; j < comp.size(); ++j)
            if (i != j && g.has_edge(comp[i], comp[j])) ++d;
        maxdeg = std::max(maxdeg, d);
        edges += d;
    }
    edges /= 2;
    return edges == static_cast<int>(comp.size()) - 1 && maxdeg <= 2;
}

bool component_is_star(const Graph& g, const std::vector<int>& comp) {
    int sz = static_cast<int>(comp.size());
    if (sz <= 2) return true;  // K_1 or K_2 (connected)
    int centre_deg = 0, edges = 0;
    for (int v : comp) {
        int d = 0;
        for (int u : comp)
            if (u != v && g.has_edge(u, v)) ++d;
        centre_deg = std::max(centre_deg, d);
        edges += d;
    }
    return edges / 2 == sz - 1 && centre_deg == sz - 1;
}

bool component_is_caterpillar(const Graph& g, const std::vector<int>& comp) {
    Graph t = induced_subgraph(g, comp);
    int sz = t.vertex_count();
    if (t.edge_count() != sz - 1) return false;  // connected, so this means tree
    std::vector<int> core;
    for (int v = 1; v <= sz; ++v)
        if (t.degree(v) >= 2) core.push_back(v);
    if (core.empty()) return true;
    Graph spine = induced_subgraph(t, core);
    if (spine.edge_count() != spine.vertex_count() - 1) return false;
    for (int v = 1; v <= spine.vertex_count(); ++v)
        if (spine.degree(v) > 2) return false;
    // tree minus leaves must also be connected to be a path
    return static_cast<int>(components(spine).size()) == 1;
}

// S_{1,1,k}: a tree with exactly one vertex of degree 3, nothing above 3,
// and at least two of that vertex's neighbours are leaves.
bool component_is_one_one_k_spider(const Graph& g, const std::vector<int>& comp) {
    Graph t = induced_subgraph(g, comp);
    int sz = t.vertex_count();
    if (t.edge_count() != sz - 1) return false;
    int centre = 0;
    for (int v = 1; v <= sz; ++v) {
        if (t.degree(v) > 3) return false;
        if (t.degree(v) == 3) {
            if (centre) return false;
            centre = v;
        }
    }
    if (!centre) return false;
    int leaf_neighbours = 0;
    for (int u : t.neighbours(centre))
        if (t.degree(u) == 1) ++leaf_neighbours;
    return leaf_neighbours >= 2;
}

std::string decompose_note(const Graph& g) {
    std::ostringstream os;
    os << "components:";
    for (const auto& comp : components(g)) os << " [" << comp.size() << " vertices]";
    return os.str();
}

bool fail_with_pattern(MembershipCertificate& cert, const Graph& g, const Graph& pattern,
                       const std::string& name) {
    if (auto emb = find_induced(g, pattern)) {
        if (!emb->valid()) throw std::logic_error("is_member: bad certificate for " + name);
        cert.forbidden = std::move(*emb);
        cert.forbidden_name = name;
        return true;
    }
    return false;
}

}  // namespace

bool is_chain_graph(const Graph& g) {
    return is_bipartite(g) && !find_induced(g, matching(2)).has_value();
}

bool is_bpg_forbidden(const Graph& g) {
    MembershipCertificate cert;
    return is_member({ClassId::bpg, 0}, g, cert);
}

bool is_bpg_constructive(const Graph& g) { return encode_bpg(g).has_value(); }

bool is_member(const ClassId& c, const Graph& g) {
    MembershipCertificate cert;
    return is_member(c, g, cert);
}

bool is_member(const ClassId& c, const Graph& g, MembershipCertificate& cert) {
    cert = MembershipCertificate{};
    auto comps = components(g);
    switch (c.tag) {
        case ClassId::bipartite: {
            if (is_bipartite(g)) {
                cert.note = "2-colouring found";
                return true;
            }
            cert.note = "odd cycle present";
            return false;
        }
        case ClassId::chain: {
            if (!is_bipartite(g)) {
                cert.note = "not bipartite";
                return false;
            }
            if (fail_with_pattern(cert, g, matching(2), "2K_2")) return false;
            cert.note = "bipartite, no induced 2K_2";
            return true;
        }
        case ClassId::degree_le1: {
            for (int v = 1; v <= g.vertex_count(); ++v)
                if (g.degree(v) > 1) {
                    cert.note = "vertex " + std::to_string(v) + " has degree " +
                                std::to_string(g.degree(v));
                    return false;
                }
            cert.note = decompose_note(g);
            return true;
        }
        case ClassId::linear_forest: {
            for (const auto& comp : comps)
                if (!component_is_path(g, comp)) {
                    cert.note = "component containing vertex " + std::to_string(comp[0]) +
                                " is not a path";
                    return false;
                }
            cert.note = decompose_note(g);
            return true;
        }
        case ClassId::star_forest: {
            for (const auto& comp : comps)
                if (!component_is_star(g, comp)) {
                    cert.note = "component containing vertex " + std::to_string(comp[0]) +
                                " is not a star";
                    return false;
                }
            cert.note = decompose_note(g);
            return true;
        }
        case ClassId::caterpillar_forest: {
            for (const auto& comp : comps)
                if (!component_is_caterpillar(g, comp)) {
                    cert.note = "component containing vertex " + std::to_string(comp[0]) +
                                " is not a caterpillar";
                    return false;
                }
            cert.note = decompose_note(g);
            return true;
        }
        case ClassId::p5free_bipartite: {
            if (!is_bipartite(g)) {
                cert.note = "not bipartite";
                return false;
            }
            for (const auto& comp : comps)
                if (!is_chain_graph(induced_subgraph(g, comp))) {
                    cert.note = "component containing vertex " + std::to_string(comp[0]) +
                                " is not a chain graph";
                    return false;
                }
            cert.note = "all components are chain graphs";
            return true;
        }
        case ClassId::bpg: {
            if (!is_bipartite(g)) {
                cert.note = "not bipartite";
                return false;
            }
            if (fail_with_pattern(cert, g, spider(2, 2, 2), "S_{2,2,2}")) return false;
            if (fail_with_pattern(cert, g, sun3(), "Sun_3")) return false;
            if (fail_with_pattern(cert, g, phi(), "Phi")) return false;
            if (auto hole = find_long_hole(g, 5)) {
                cert.note = "induced cycle of length " + std::to_string(hole->size());
                Graph cyc = cycle(static_cast<int>(hole->size()));
                Embedding e{cyc, g, std::vector<int>(cyc.vertex_count() + 1, 0)};
                for (std::size_t i = 0; i < hole->size(); ++i) e.map[i + 1] = (*hole)[i];
                if (!e.valid()) throw std::logic_error("is_member: bad hole certificate");
                cert.forbidden = std::move(e);
                cert.forbidden_name = "C_" + std::to_string(hole->size());
                return false;
            }
            cert.note = "bipartite, no forbidden pattern, no long hole";
            return true;
        }
        case ClassId::boundary_L: {
            int spiders = 0;
            for (const auto& comp : comps) {
                if (component_is_path(g, comp)) continue;
                if (component_is_one_one_k_spider(g, comp)) {
                    ++spiders;
                    continue;
                }
                cert.note = "component containing vertex " + std::to_string(comp[0]) +
                            " is neither a path nor an S_{1,1,k}";
                return false;
            }
            if (spiders > 2) {
                cert.note = std::to_string(spiders) + " spider components (at most 2 allowed)";
                return false;
            }
            cert.note = decompose_note(g) + ", " + std::to_string(spiders) + " spider component(s)";
            return true;
        }
        case ClassId::class_Xi: {
            MembershipCertificate inner;
            if (!is_member({ClassId::bpg, 0}, g, inner)) {
                cert = std::move(inner);
                return false;
            }
            if (fail_with_pattern(cert, g, path(4 + c.param), "P_" + std::to_string(4 + c.param)))
                return false;
            for (int j = 1; j < c.param; ++j)
                if (fail_with_pattern(cert, g, hgraph(j), "H_" + std::to_string(j))) return false;
            cert.note = "bpg, long paths and small H-graphs excluded";
            return true;
        }
        case ClassId::kSk_free: {
            if (auto emb = find_star_forest_pattern(g, c.param, c.param)) {
                cert.forbidden = std::move(*emb);
                cert.forbidden_name =
                    std::to_string(c.param) + "S_" + std::to_string(c.param);
                return false;
            }
            cert.note = "no induced " + std::to_string(c.param) + "S_" + std::to_string(c.param);
            return true;
        }
    }
    throw std::logic_error("is_member: unhandled class");
}

}  // namespace bpglab
