#ifndef IDEALIS_IDEAL_OPS_HPP
#define IDEALIS_IDEAL_OPS_HPP

#include <unordered_set>

#include "idealis/graph.hpp"
#include "idealis/monomial.hpp"

namespace idealis {

// minimalize(gens(i) ∪ ms)
inline MonomialIdeal sum_with(const MonomialIdeal& i, const std::vector<Monomial>& ms) {
    std::vector<Monomial> gens = i.gens;
    gens.insert(gens.end(), ms.begin(), ms.end());
    return minimalize(i.vars, std::move(gens));
}

// product of two ideals over the same ring
inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars != b.vars) throw std::invalid_argument("ideal product across different rings");
    std::unordered_set<Monomial, MonomialHash> seen;
    std::vector<Monomial> gens;
    for (const auto& g : a.gens)
        for (const auto& h : b.gens) {
            Monomial m = g.times(h);
            if (seen.insert(m).second) gens.push_back(m);
        }
    return minimalize(a.vars, std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& i, int s) {
    if (s < 1) throw std::invalid_argument("power requires s >= 1");
    MonomialIdeal acc = i;
    for (int t = 1; t < s; ++t) acc = product(acc, i);
    return acc;
}

// (i : m), minimally generated
inline MonomialIdeal colon(const MonomialIdeal& i, const Monomial& m) {
    std::vector<Monomial> gens;
    gens.reserve(i.gens.size());
    for (const auto& g : i.gens) gens.push_back(g.divide_exact(g.gcd(m)));
    return minimalize(i.vars, std::move(gens));
}

struct PolarizedIdeal {
    MonomialIdeal ideal;           // squarefree
    std::vector<int> var_origin;   // polarized variable index -> original variable index
};

// Standard polarization: exponent e of x becomes x*x_2*...*x_e on fresh
// copies. A squarefree ideal maps to itself with the identity variable map.
inline PolarizedIdeal polarize(const MonomialIdeal& i) {
    int n = static_cast<int>(i.vars.size());
    std::vector<int> max_exp(static_cast<std::size_t>(n), 0);
    for (const auto& g : i.gens)
        for (const auto& [v, e] : g.exponents())
            max_exp[static_cast<std::size_t>(v)] = std::max(max_exp[static_cast<std::size_t>(v)], e);

    std::vector<std::string> pol_vars;
    std::vector<int> origin;
    std::vector<std::vector<int>> copies(static_cast<std::size_t>(n));
    auto fresh_name = [&](const std::string& base, int k) {
        std::string name = k == 1 ? base : base + "_" + std::to_string(k);
        while (std::find(i.vars.begin(), i.vars.end(), name) != i.vars.end() && k > 1) name += "_p";
        return name;
    };
    for (int v = 0; v < n; ++v) {
        int reps = std::max(max_exp[static_cast<std::size_t>(v)], 1);
        for (int k = 1; k <= reps; ++k) {
            copies[static_cast<std::size_t>(v)].push_back(static_cast<int>(pol_vars.size()));
            pol_vars.push_back(fresh_name(i.vars[static_cast<std::size_t>(v)], k));
            origin.push_back(v);
        }
    }
    std::vector<Monomial> gens;
    for (const auto& g : i.gens) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& [v, e] : g.exponents())
            for (int k = 0; k < e; ++k) pairs.emplace_back(copies[static_cast<std::size_t>(v)][static_cast<std::size_t>(k)], 1);
        gens.push_back(Monomial::from_pairs(std::move(pairs)));
    }
    return {minimalize(std::move(pol_vars), std::move(gens)), std::move(origin)};
}

// One degree-2 squarefree generator per edge; edgeless graphs give the zero
// ideal. Isolated vertices stay in the ring but never appear in generators.
inline MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (const auto& [u, v] : g.edges())
        gens.push_back(Monomial::from_pairs({{u, 1}, {v, 1}}));
    return minimalize(g.labels(), std::move(gens));
}

// One squarefree generator per minimal vertex cover (the Alexander dual of
// the edge ideal). The edgeless case would be the unit ideal; rejected.
inline MonomialIdeal cover_ideal(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("cover ideal of an edgeless graph is the unit ideal; not supported");
    std::vector<Monomial> gens;
    for (VertexMask cover : minimal_vertex_covers(g)) {
        std::vector<std::pair<int, int>> pairs;
        for (int v : mask_to_vertices(cover)) pairs.emplace_back(v, 1);
        gens.push_back(Monomial::from_pairs(std::move(pairs)));
    }
    return minimalize(g.labels(), std::move(gens));
}

// All multisets of s generators whose product is m, as non-decreasing index
// sequences. Exhaustive and deduplicated by construction.
inline std::vector<std::vector<int>> factorizations(const Monomial& m, const std::vector<Monomial>& gens,
                                                    int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    std::function<void(const Monomial&, int, int)> rec = [&](const Monomial& rest, int from, int left) {
        if (left == 0) {
            if (rest.is_one()) out.push_back(current);
            return;
        }
        int deg_needed = rest.degree();
        for (int i = from; i < static_cast<int>(gens.size()); ++i) {
            const Monomial& g = gens[static_cast<std::size_t>(i)];
            if (g.degree() > deg_needed) continue;
            if (!g.divides(rest)) continue;
            current.push_back(i);
            rec(rest.divide_exact(g), i, left - 1);
            current.pop_back();
        }
    };
    if (s >= 0) rec(m, 0, s);
    return out;
}

enum class OrderProvenance { BanerjeePower, CoverPowerKeys, LexC5, UserGiven };

// An explicit total order on the minimal generators of an ideal.
struct OrderedGenerators {
    MonomialIdeal ideal;
    std::vector<int> order;  // order[t] = index into ideal.gens of the (t+1)-th generator
    OrderProvenance provenance = OrderProvenance::UserGiven;

    const Monomial& at(std::size_t t) const { return ideal.gens[static_cast<std::size_t>(order[t])]; }
    std::size_t size() const { return order.size(); }
};

inline OrderedGenerators user_order(const MonomialIdeal& i) {
    OrderedGenerators og{i, {}, OrderProvenance::UserGiven};
    og.order.resize(i.gens.size());
    std::iota(og.order.begin(), og.order.end(), 0);
    return og;
}

// Order on the minimal generators of I^s induced by an order L_1 > ... > L_k
// on the generators of an edge ideal I: M > N when the lexicographically
// greatest exponent vector over all factorizations of M into s ordered
// generators beats that of N. The greatest vector determines the product, so
// distinct generators never tie and the order is total.
inline OrderedGenerators banerjee_order(const OrderedGenerators& edges_ordered, int s) {
    if (s < 1) throw std::invalid_argument("banerjee_order requires s >= 1");
    const MonomialIdeal& edge_ideal = edges_ordered.ideal;
    if (s == 1) return edges_ordered;

    std::vector<Monomial> ordered_edges;
    for (std::size_t t = 0; t < edges_ordered.size(); ++t) ordered_edges.push_back(edges_ordered.at(t));

    MonomialIdeal pw = power(edge_ideal, s);
    std::vector<std::vector<int>> keys(pw.gens.size());
    for (std::size_t gi = 0; gi < pw.gens.size(); ++gi) {
        auto facts = factorizations(pw.gens[gi], ordered_edges, s);
        if (facts.empty()) throw std::logic_error("generator of a power with no factorization");
        std::vector<int> best;
        for (const auto& f : facts) {
            std::vector<int> vec(ordered_edges.size(), 0);
            for (int idx : f) ++vec[static_cast<std::size_t>(idx)];
            if (best.empty() || std::lexicographical_compare(best.begin(), best.end(), vec.begin(), vec.end()))
                best = vec;
        }
        keys[gi] = std::move(best);
    }
    OrderedGenerators out{pw, {}, OrderProvenance::BanerjeePower};
    out.order.resize(pw.gens.size());
    std::iota(out.order.begin(), out.order.end(), 0);
    std::sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        return std::lexicographical_compare(keys[static_cast<std::size_t>(b)].begin(), keys[static_cast<std::size_t>(b)].end(),
                                            keys[static_cast<std::size_t>(a)].begin(), keys[static_cast<std::size_t>(a)].end());
    });
    return out;
}

}  // namespace idealis

#endif
