#ifndef IDEALIS_GRAPH_HPP
#define IDEALIS_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "idealis/util.hpp"

namespace idealis {

using VertexMask = std::uint64_t;

// Simple undirected graph on at most 64 labelled vertices. Labels are kept
// in natural order and the adjacency is one bitset per vertex. Values are
// immutable after construction; all operations below are pure functions.
class Graph {
public:
    Graph() = default;

    // Vertices are the union of `vertices` and all edge endpoints.
    static Graph from_edges(const std::vector<std::string>& vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges) {
        std::vector<std::string> labels = vertices;
        for (const auto& [u, v] : edges) {
            labels.push_back(u);
            labels.push_back(v);
        }
        std::sort(labels.begin(), labels.end(), NaturalLess{});
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        if (labels.size() > 64) throw std::invalid_argument("graph limited to 64 vertices");
        Graph g;
        g.labels_ = std::move(labels);
        g.adj_.assign(g.labels_.size(), 0);
        for (const auto& [u, v] : edges) {
            int a = g.index_of(u), b = g.index_of(v);
            if (a == b) throw std::invalid_argument("self-loop on vertex " + u);
            g.adj_[static_cast<std::size_t>(a)] |= bit(b);
            g.adj_[static_cast<std::size_t>(b)] |= bit(a);
        }
        return g;
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_[static_cast<std::size_t>(v)]; }

    int index_of(const std::string& name) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), name, NaturalLess{});
        if (it == labels_.end() || *it != name) return -1;
        return static_cast<int>(it - labels_.begin());
    }

    bool adjacent(int u, int v) const { return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0; }
    VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return popcount(neighbors(v)); }

    VertexMask all_mask() const {
        int n = vertex_count();
        return n == 64 ? ~VertexMask{0} : (bit(n) - 1);
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < vertex_count(); ++u)
            for (int v = u + 1; v < vertex_count(); ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    int edge_count() const { return static_cast<int>(edges().size()); }

    bool has_edge_within(VertexMask s) const {
        for (VertexMask m = s; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (neighbors(v) & s & ~bit(v)) return true;
        }
        return false;
    }

    // Induced subgraph on the vertices of `keep`, labels preserved.
    Graph induced(VertexMask keep) const {
        std::vector<std::string> vs;
        std::vector<std::pair<std::string, std::string>> es;
        for (VertexMask m = keep; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            vs.push_back(label(v));
            for (VertexMask w = neighbors(v) & keep; w;) {
                int u = std::countr_zero(w);
                w &= w - 1;
                if (u > v) es.emplace_back(label(v), label(u));
            }
        }
        return from_edges(vs, es);
    }

    Graph without_vertices(VertexMask drop) const { return induced(all_mask() & ~drop); }

    bool operator==(const Graph& other) const { return labels_ == other.labels_ && adj_ == other.adj_; }

private:
    std::vector<std::string> labels_;
    std::vector<VertexMask> adj_;
};

inline Graph complement(const Graph& g) {
    std::vector<std::pair<std::string, std::string>> es;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.adjacent(u, v)) es.emplace_back(g.label(u), g.label(v));
    return Graph::from_edges(g.labels(), es);
}

inline int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

namespace detail {

// Visits all k-subsets of [0,n) in lexicographic order until fn returns true.
inline bool foreach_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    if (k > n) return false;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (;;) {
        if (fn(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

inline VertexMask mask_of(const std::vector<int>& vs) {
    VertexMask m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

// 2-regular and connected within the subset == induced cycle on |vs| vertices.
inline bool induces_cycle(const Graph& g, const std::vector<int>& vs) {
    VertexMask s = mask_of(vs);
    for (int v : vs)
        if (popcount(g.neighbors(v) & s) != 2) return false;
    VertexMask seen = bit(vs[0]), frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask m = frontier; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            next |= g.neighbors(v) & s & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

inline bool induces_complement_cycle(const Graph& g, const std::vector<int>& vs) {
    VertexMask s = mask_of(vs);
    int k = static_cast<int>(vs.size());
    for (int v : vs)
        if (popcount(g.neighbors(v) & s) != k - 3) return false;  // complement degree 2
    // connectivity of the complement within the subset
    VertexMask seen = bit(vs[0]), frontier = seen;
    while (frontier) {
        VertexMask next = 0;
        for (VertexMask m = frontier; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            next |= s & ~g.neighbors(v) & ~bit(v) & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen == s;
}

}  // namespace detail

enum class Pattern { C4, TwoK2, C5, CycleGe4, CycleComplementGe5 };

inline const char* pattern_name(Pattern p) {
    switch (p) {
        case Pattern::C4: return "C4";
        case Pattern::TwoK2: return "2K2";
        case Pattern::C5: return "C5";
        case Pattern::CycleGe4: return "CycleGe4";
        case Pattern::CycleComplementGe5: return "CycleComplementGe5";
    }
    return "?";
}

// Exhaustive induced-pattern search; first witness in lexicographic subset
// order, so results are deterministic.
inline std::optional<std::vector<int>> find_induced(const Graph& g, Pattern p) {
    int n = g.vertex_count();
    std::optional<std::vector<int>> found;
    auto run = [&](int k, auto&& pred) {
        detail::foreach_subset(n, k, [&](const std::vector<int>& vs) {
            if (pred(vs)) {
                found = vs;
                return true;
            }
            return false;
        });
    };
    switch (p) {
        case Pattern::C4:
            run(4, [&](const std::vector<int>& vs) { return detail::induces_cycle(g, vs); });
            break;
        case Pattern::TwoK2:
            run(4, [&](const std::vector<int>& vs) {
                VertexMask s = detail::mask_of(vs);
                int edges = 0;
                for (int v : vs) {
                    int d = popcount(g.neighbors(v) & s);
                    if (d != 1) return false;
                    edges += d;
                }
                return edges == 4;  // two disjoint edges
            });
            break;
        case Pattern::C5:
            run(5, [&](const std::vector<int>& vs) { return detail::induces_cycle(g, vs); });
            break;
        case Pattern::CycleGe4:
            for (int k = 4; k <= n && !found; ++k)
                run(k, [&](const std::vector<int>& vs) { return detail::induces_cycle(g, vs); });
            break;
        case Pattern::CycleComplementGe5:
            for (int k = 5; k <= n && !found; ++k)
                run(k, [&](const std::vector<int>& vs) { return detail::induces_complement_cycle(g, vs); });
            break;
    }
    return found;
}

struct ChordalResult {
    bool chordal = false;
    std::vector<int> elimination_order;  // earliest eliminated first, only set when chordal
};

// Maximum cardinality search + perfect elimination order verification.
inline ChordalResult is_chordal(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> placed(static_cast<std::size_t>(n), false);
    std::vector<int> mcs;  // visit order, last visited is eliminated first
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!placed[static_cast<std::size_t>(v)] &&
                (best == -1 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(best)]))
                best = v;
        placed[static_cast<std::size_t>(best)] = true;
        mcs.push_back(best);
        for (VertexMask m = g.neighbors(best); m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (!placed[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
        }
    }
    std::vector<int> elim(mcs.rbegin(), mcs.rend());
    VertexMask remaining = g.all_mask();
    for (int v : elim) {
        remaining &= ~bit(v);
        VertexMask later = g.neighbors(v) & remaining;
        for (VertexMask m = later; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if ((later & ~bit(u)) & ~g.neighbors(u)) return {false, {}};
        }
    }
    return {true, elim};
}

// Maximal independent sets via Bron-Kerbosch with pivoting on non-edges.
inline void maximal_independent_sets_rec(const Graph& g, VertexMask r, VertexMask p, VertexMask x,
                                         std::vector<VertexMask>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    VertexMask px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (VertexMask m = px; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        int cnt = popcount(p & ~g.neighbors(v) & ~bit(v));
        if (cnt > best) {
            best = cnt;
            pivot = v;
        }
    }
    VertexMask candidates = p & ~(~g.neighbors(pivot) & ~bit(pivot));
    candidates |= p & bit(pivot);
    for (VertexMask m = candidates; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        VertexMask nonnbr = ~g.neighbors(v) & ~bit(v);
        maximal_independent_sets_rec(g, r | bit(v), p & nonnbr, x & nonnbr, out);
        p &= ~bit(v);
        x |= bit(v);
    }
}

inline std::vector<VertexMask> maximal_independent_sets(const Graph& g) {
    std::vector<VertexMask> out;
    maximal_independent_sets_rec(g, 0, g.all_mask(), 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Minimal vertex covers are exactly the complements of maximal independent
// sets; sorted by (size, bit pattern) for deterministic output.
inline std::vector<VertexMask> minimal_vertex_covers(const Graph& g) {
    std::vector<VertexMask> covers;
    for (VertexMask s : maximal_independent_sets(g)) covers.push_back(g.all_mask() & ~s);
    std::sort(covers.begin(), covers.end(), [](VertexMask a, VertexMask b) {
        if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
        return a < b;
    });
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    return covers;
}

// The (V1, V2, V3) decomposition: V1 independent, V2 a clique, V3 empty or
// the vertex set of an induced 5-cycle joined to all of V2 and none of V1.
struct Partition {
    VertexMask v1 = 0;
    VertexMask v2 = 0;
    VertexMask v3 = 0;
    std::vector<int> c5_order;  // cyclic sequence of v3, empty when v3 == 0
};

inline bool validate_partition(const Graph& g, const Partition& p) {
    VertexMask all = g.all_mask();
    if ((p.v1 | p.v2 | p.v3) != all) return false;
    if ((p.v1 & p.v2) || (p.v1 & p.v3) || (p.v2 & p.v3)) return false;
    if (g.has_edge_within(p.v1)) return false;
    for (VertexMask m = p.v2; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if ((p.v2 & ~bit(v)) & ~g.neighbors(v)) return false;
    }
    int k3 = popcount(p.v3);
    if (k3 != 0 && k3 != 5) return false;
    if (k3 == 0) return p.c5_order.empty();
    if (p.c5_order.size() != 5) return false;
    if (detail::mask_of(p.c5_order) != p.v3) return false;
    for (int i = 0; i < 5; ++i) {
        int a = p.c5_order[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < 5; ++j) {
            int b = p.c5_order[static_cast<std::size_t>(j)];
            bool cyc = (j == i + 1) || (i == 0 && j == 4);
            if (g.adjacent(a, b) != cyc) return false;
        }
    }
    for (VertexMask m = p.v3; m;) {
        int w = std::countr_zero(m);
        m &= m - 1;
        if (p.v2 & ~g.neighbors(w)) return false;   // every v2-v3 pair adjacent
        if (p.v1 & g.neighbors(w)) return false;    // no v1-v3 edges
    }
    return true;
}

namespace detail {

// Lexicographically smallest rotation/reflection of the 5-cycle by label.
inline std::vector<int> canonical_c5_order(const Graph& g, const std::vector<int>& cycle_vs) {
    // build one traversal first
    std::vector<int> seq;
    VertexMask s = mask_of(cycle_vs);
    int start = cycle_vs[0];
    seq.push_back(start);
    VertexMask used = bit(start);
    for (int step = 0; step < 4; ++step) {
        VertexMask nxt = g.neighbors(seq.back()) & s & ~used;
        int v = std::countr_zero(nxt);
        seq.push_back(v);
        used |= bit(v);
    }
    std::vector<int> best;
    auto consider = [&](const std::vector<int>& cand) {
        if (best.empty()) {
            best = cand;
            return;
        }
        for (std::size_t i = 0; i < 5; ++i) {
            const std::string &a = g.label(cand[i]), &b = g.label(best[i]);
            if (a == b) continue;
            if (natural_less(a, b)) best = cand;
            return;
        }
    };
    for (int r = 0; r < 5; ++r) {
        std::vector<int> rot, rev;
        for (int i = 0; i < 5; ++i) rot.push_back(seq[static_cast<std::size_t>((r + i) % 5)]);
        rev = rot;
        std::reverse(rev.begin() + 1, rev.end());
        consider(rot);
        consider(rev);
    }
    return best;
}

}  // namespace detail

struct Recognition {
    std::optional<Partition> partition;
    Pattern witness_kind = Pattern::C4;
    std::vector<int> witness;  // set when partition is absent

    bool free() const { return partition.has_value(); }
};

// Recognition of (C4, 2K2)-free graphs with a certifying partition. The
// pattern search decides membership; the partition is then extracted by
// fixing V3 on the induced C5 when one exists (its placement is forced),
// or by split-graph degree partitioning, with an exhaustive fallback.
inline Recognition recognize_c4_2k2(const Graph& g) {
    if (auto w = find_induced(g, Pattern::C4)) return {std::nullopt, Pattern::C4, *w};
    if (auto w = find_induced(g, Pattern::TwoK2)) return {std::nullopt, Pattern::TwoK2, *w};

    int n = g.vertex_count();
    VertexMask all = g.all_mask();
    auto finish = [&](Partition p) -> Recognition {
        if (p.v3) p.c5_order = detail::canonical_c5_order(g, p.c5_order);
        if (!validate_partition(g, p)) throw std::logic_error("partition extraction failed on a free graph");
        return {p, Pattern::C4, {}};
    };

    if (auto c5 = find_induced(g, Pattern::C5)) {
        Partition p;
        p.v3 = detail::mask_of(*c5);
        p.c5_order = *c5;
        bool ok = true;
        for (VertexMask m = all & ~p.v3; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            VertexMask nb3 = g.neighbors(v) & p.v3;
            if (nb3 == p.v3)
                p.v2 |= bit(v);
            else if (nb3 == 0)
                p.v1 |= bit(v);
            else
                ok = false;
        }
        if (ok && !g.has_edge_within(p.v1)) {
            Partition q = p;
            q.c5_order = detail::canonical_c5_order(g, p.c5_order);
            if (validate_partition(g, q)) return {q, Pattern::C4, {}};
        }
        throw std::logic_error("induced C5 does not extend to a partition on a free graph");
    }

    // no C5: the graph must be split; try the degree-ordered clique prefix
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    int m = 0;
    while (m < n && g.degree(order[static_cast<std::size_t>(m)]) >= m) ++m;
    Partition p;
    for (int i = 0; i < n; ++i)
        (i < m ? p.v2 : p.v1) |= bit(order[static_cast<std::size_t>(i)]);
    if (validate_partition(g, p)) return finish(p);

    // exhaustive fallback over clique choices (desk scale)
    if (n > 20) throw ResourceError("partition fallback limited to 20 vertices");
    for (VertexMask v2 = 0;; ++v2) {
        Partition q{all & ~v2, v2, 0, {}};
        if (validate_partition(g, q)) return finish(q);
        if (v2 == all) break;
    }
    throw std::logic_error("no split partition found for a (C4,2K2)-free graph without C5");
}

enum class CoverKind { TypeI, TypeII };

struct CoverForm {
    CoverKind kind;
    std::vector<int> witness;  // TypeII: {a}; TypeI: {a, b, c} with ab the edge
};

// Classification of the minimal vertex covers against the two-form catalogue
// available when V3 is non-empty: V2 plus three cycle vertices, or N(a).
inline std::vector<std::pair<VertexMask, CoverForm>> classify_covers(const Graph& g, const Partition& p) {
    if (!p.v3) throw std::invalid_argument("cover classification requires a non-empty V3");
    if (!validate_partition(g, p)) throw std::invalid_argument("invalid partition");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) throw std::invalid_argument("cover classification requires no isolated vertices");

    std::vector<std::pair<VertexMask, CoverForm>> out;
    for (VertexMask cover : minimal_vertex_covers(g)) {
        std::optional<CoverForm> form;
        for (VertexMask m = p.v2; m && !form;) {
            int a = std::countr_zero(m);
            m &= m - 1;
            if (g.neighbors(a) == cover) form = CoverForm{CoverKind::TypeII, {a}};
        }
        if (!form && (cover & p.v2) == p.v2 && popcount(cover & p.v3) == 3 && (cover & p.v1) == 0 &&
            cover == (p.v2 | (cover & p.v3))) {
            std::vector<int> tri;
            for (VertexMask m = cover & p.v3; m;) {
                tri.push_back(std::countr_zero(m));
                m &= m - 1;
            }
            for (std::size_t i = 0; i < 3 && !form; ++i)
                for (std::size_t j = 0; j < 3 && !form; ++j) {
                    if (i == j) continue;
                    std::size_t k = 3 - i - j;
                    if (g.adjacent(tri[i], tri[j]) && !g.adjacent(tri[i], tri[k]) && !g.adjacent(tri[j], tri[k]) &&
                        tri[i] < tri[j])
                        form = CoverForm{CoverKind::TypeI, {tri[i], tri[j], tri[k]}};
                }
        }
        if (!form) throw std::logic_error("minimal cover outside the two-form catalogue");
        out.emplace_back(cover, *form);
    }
    return out;
}

inline std::vector<int> mask_to_vertices(VertexMask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline std::vector<std::string> mask_to_labels(const Graph& g, VertexMask m) {
    std::vector<std::string> out;
    for (int v : mask_to_vertices(m)) out.push_back(g.label(v));
    return out;
}

}  // namespace idealis

#endif
