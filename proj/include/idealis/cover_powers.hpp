#ifndef IDEALIS_COVER_POWERS_HPP
#define IDEALIS_COVER_POWERS_HPP

#include <array>

#include "idealis/linear_quotients.hpp"

namespace idealis {

inline Graph canonical_c5() {
    return Graph::from_edges({}, {{"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u4", "u5"}, {"u5", "u1"}});
}

// Linear-quotients order on the minimal generators of the p-th power of the
// C5 cover ideal: descending lexicographic order on exponent vectors in the
// cycle variable order. Validated before being returned; a validation
// failure is a hard error, the order is never silently repaired.
inline OrderedGenerators c5_cover_power_order(int p) {
    if (p < 1) throw std::invalid_argument("cover power order requires p >= 1");
    MonomialIdeal pw = power(cover_ideal(canonical_c5()), p);
    OrderedGenerators og{pw, {}, OrderProvenance::LexC5};
    og.order.resize(pw.gens.size());
    std::iota(og.order.begin(), og.order.end(), 0);
    std::sort(og.order.begin(), og.order.end(), [&](int a, int b) {
        return pw.gens[static_cast<std::size_t>(a)].compare_lex(pw.gens[static_cast<std::size_t>(b)]) > 0;
    });
    if (!check_linear_quotients_order(og).certificate)
        throw std::logic_error("descending lex is not a linear-quotients order on this C5 cover power");
    return og;
}

// The unique expression of a minimal generator of (cover ideal)^s as
// prod (V2*f_i)^alpha_i * prod N(z_j)^beta_j, for partitions with both V2
// and V3 non-empty.
struct CoverPowerExpression {
    std::array<int, 5> alpha{};
    std::vector<int> beta;

    int alpha_sum() const {
        int s = 0;
        for (int a : alpha) s += a;
        return s;
    }
};

namespace detail {

// The five C5 covers in cycle coordinates w0..w4 (w = c5_order), following
// the indexing f1 = w0 w1 w3, f2 = w3 w4 w1, f3 = w1 w2 w4, f4 = w2 w3 w0,
// f5 = w4 w0 w2. Cover f_i is the unique one containing both ends of its
// associated cycle edge, which drives the alpha recovery below.
inline const std::array<std::array<int, 3>, 5>& c5_cover_pattern() {
    static const std::array<std::array<int, 3>, 5> pattern{{{0, 1, 3}, {3, 4, 1}, {1, 2, 4}, {2, 3, 0}, {4, 0, 2}}};
    return pattern;
}

inline const std::array<std::array<int, 2>, 5>& c5_cover_edge() {
    static const std::array<std::array<int, 2>, 5> edges{{{0, 1}, {3, 4}, {1, 2}, {2, 3}, {4, 0}}};
    return edges;
}

struct CoverPowerBasis {
    std::vector<int> v2;               // V2 vertices, ascending
    std::vector<Monomial> neighbor;    // N(z_j) monomials
    std::array<Monomial, 5> f;         // C5 covers as monomials of the graph ring
    Monomial v2_product;

    CoverPowerBasis(const Graph& g, const Partition& p) {
        v2 = mask_to_vertices(p.v2);
        for (int z : v2) {
            std::vector<std::pair<int, int>> pairs;
            for (int u : mask_to_vertices(g.neighbors(z))) pairs.emplace_back(u, 1);
            neighbor.push_back(Monomial::from_pairs(std::move(pairs)));
        }
        std::vector<std::pair<int, int>> pairs;
        for (int z : v2) pairs.emplace_back(z, 1);
        v2_product = Monomial::from_pairs(std::move(pairs));
        if (p.c5_order.size() == 5) {
            for (int i = 0; i < 5; ++i) {
                std::vector<std::pair<int, int>> fp;
                for (int k : c5_cover_pattern()[static_cast<std::size_t>(i)])
                    fp.emplace_back(p.c5_order[static_cast<std::size_t>(k)], 1);
                f[static_cast<std::size_t>(i)] = Monomial::from_pairs(std::move(fp));
            }
        }
    }

    Monomial reconstruct(const CoverPowerExpression& e) const {
        Monomial m = Monomial::one();
        for (int i = 0; i < 5; ++i)
            m = m.times(v2_product.times(f[static_cast<std::size_t>(i)]).pow(e.alpha[static_cast<std::size_t>(i)]));
        for (std::size_t j = 0; j < v2.size(); ++j) m = m.times(neighbor[j].pow(e.beta[j]));
        return m;
    }
};

inline CoverPowerExpression expression_from_monomial(const Partition& p, const CoverPowerBasis& basis,
                                                     int s, const Monomial& m) {
    CoverPowerExpression e;
    e.beta.resize(basis.v2.size());
    Monomial rest = m;
    for (std::size_t j = 0; j < basis.v2.size(); ++j) {
        int bj = s - m.exponent(basis.v2[j]);
        if (bj < 0) throw std::invalid_argument("no valid cover-power expression: V2 exponent exceeds s");
        e.beta[j] = bj;
        Monomial nb = basis.neighbor[j].pow(bj);
        if (!nb.divides(rest)) throw std::invalid_argument("no valid cover-power expression: neighbor part does not divide");
        rest = rest.divide_exact(nb);
    }
    int a_total = s;
    for (int bj : e.beta) a_total -= bj;
    if (a_total < 0) throw std::invalid_argument("no valid cover-power expression: beta exceeds s");
    Monomial v2_part = basis.v2_product.pow(a_total);
    if (!v2_part.divides(rest)) throw std::invalid_argument("no valid cover-power expression: V2 part mismatch");
    Monomial fpart = rest.divide_exact(v2_part);
    for (int v : mask_to_vertices(p.v1 | p.v2))
        if (fpart.exponent(v) != 0) throw std::invalid_argument("no valid cover-power expression: stray variable");
    // alpha_i = e(a_i) + e(b_i) - A over the cycle edge associated with f_i
    for (int i = 0; i < 5; ++i) {
        auto edge = c5_cover_edge()[static_cast<std::size_t>(i)];
        int ea = fpart.exponent(p.c5_order[static_cast<std::size_t>(edge[0])]);
        int eb = fpart.exponent(p.c5_order[static_cast<std::size_t>(edge[1])]);
        e.alpha[static_cast<std::size_t>(i)] = ea + eb - a_total;
        if (e.alpha[static_cast<std::size_t>(i)] < 0)
            throw std::invalid_argument("no valid cover-power expression: negative alpha");
    }
    if (e.alpha_sum() != a_total || basis.reconstruct(e) != m)
        throw std::invalid_argument("no valid cover-power expression: reconstruction mismatch");
    return e;
}

// descending-lex rank of the f-part among all degree-A products of the five
// C5 covers, in cycle coordinates
inline std::vector<std::array<int, 5>> c5_power_vectors(int a_total) {
    std::vector<std::array<int, 5>> out;
    std::function<void(int, int, std::array<int, 5>&)> rec = [&](int i, int left, std::array<int, 5>& alpha) {
        if (i == 4) {
            alpha[4] = left;
            std::array<int, 5> vec{};
            for (int k = 0; k < 5; ++k)
                for (int pos : c5_cover_pattern()[static_cast<std::size_t>(k)])
                    vec[static_cast<std::size_t>(pos)] += alpha[static_cast<std::size_t>(k)];
            out.push_back(vec);
            return;
        }
        for (int t = 0; t <= left; ++t) {
            alpha[static_cast<std::size_t>(i)] = t;
            rec(i + 1, left - t, alpha);
        }
    };
    std::array<int, 5> alpha{};
    rec(0, a_total, alpha);
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

// Public form of the unique expression, with the membership check.
inline CoverPowerExpression cover_power_expression(const Graph& g, const Partition& p, int s,
                                                   const Monomial& m) {
    if (!p.v3 || !p.v2) throw std::invalid_argument("cover-power expressions need V2 and V3 non-empty");
    if (!validate_partition(g, p)) throw std::invalid_argument("invalid partition");
    MonomialIdeal pw = power(cover_ideal(g), s);
    if (std::find(pw.gens.begin(), pw.gens.end(), m) == pw.gens.end())
        throw std::invalid_argument("monomial is not a minimal generator of the cover-ideal power");
    detail::CoverPowerBasis basis(g, p);
    return detail::expression_from_monomial(p, basis, s, m);
}

// True iff every product of s minimal covers is a minimal generator of the
// s-th cover-ideal power; also reports the number of distinct products.
struct ProductsMinimality {
    bool all_minimal = false;
    long long distinct_products = 0;
};

inline ProductsMinimality check_products_minimal(const Graph& g, const Partition& p, int s) {
    if (!p.v3) throw std::invalid_argument("minimality of cover products needs V3 non-empty");
    if (!validate_partition(g, p)) throw std::invalid_argument("invalid partition");
    MonomialIdeal covers = cover_ideal(g);
    std::unordered_set<Monomial, MonomialHash> products;
    std::function<void(std::size_t, int, const Monomial&)> rec = [&](std::size_t from, int left, const Monomial& acc) {
        if (left == 0) {
            products.insert(acc);
            return;
        }
        for (std::size_t i = from; i < covers.gens.size(); ++i) rec(i, left - 1, acc.times(covers.gens[i]));
    };
    rec(0, s, Monomial::one());
    MonomialIdeal pw = power(covers, s);
    std::unordered_set<Monomial, MonomialHash> minimal(pw.gens.begin(), pw.gens.end());
    bool all = products.size() == minimal.size();
    if (all)
        for (const auto& m : products)
            if (!minimal.count(m)) {
                all = false;
                break;
            }
    return {all, static_cast<long long>(products.size())};
}

// Total order on the minimal generators of (cover ideal)^s realizing the
// three sort keys: larger alpha sum first; equal sums ordered by the f-part
// position in the C5 cover-power order; equal alpha vectors ordered by
// lex-greater beta. With V2 empty this is the descending-lex C5 order; with
// V3 empty the order is found by search. Always validated before returning.
inline OrderedGenerators cover_power_order(const Graph& g, const Partition& p, int s) {
    if (!validate_partition(g, p)) throw std::invalid_argument("invalid partition");
    if (g.edge_count() == 0) throw std::invalid_argument("cover-power order needs at least one edge");
    MonomialIdeal pw = power(cover_ideal(g), s);

    if (!p.v3) {
        // split-graph case: certify by search
        if (auto cert = greedy_linear_quotients(pw))
            return {pw, cert->order, OrderProvenance::UserGiven};
        auto exhaustive = exhaustive_linear_quotients(pw);
        if (!exhaustive.certificate)
            throw std::logic_error("no linear-quotients order found for a split-graph cover power");
        return {pw, exhaustive.certificate->order, OrderProvenance::UserGiven};
    }

    if (!p.v2) {
        // pure C5 (plus possible isolated vertices): descending lex in cycle coordinates
        auto key = [&](const Monomial& m) {
            std::array<int, 5> vec{};
            for (int k = 0; k < 5; ++k) vec[static_cast<std::size_t>(k)] = m.exponent(p.c5_order[static_cast<std::size_t>(k)]);
            return vec;
        };
        OrderedGenerators og{pw, {}, OrderProvenance::LexC5};
        og.order.resize(pw.gens.size());
        std::iota(og.order.begin(), og.order.end(), 0);
        std::sort(og.order.begin(), og.order.end(),
                  [&](int a, int b) { return key(pw.gens[static_cast<std::size_t>(a)]) > key(pw.gens[static_cast<std::size_t>(b)]); });
        if (!check_linear_quotients_order(og).certificate)
            throw std::logic_error("descending lex failed to give linear quotients on a C5 cover power");
        return og;
    }

    detail::CoverPowerBasis basis(g, p);
    struct Key {
        int neg_alpha_sum;
        std::size_t f_rank;
        std::vector<int> neg_beta;
    };
    std::vector<Key> keys(pw.gens.size());
    std::vector<std::vector<std::array<int, 5>>> ranks(static_cast<std::size_t>(s) + 1);
    for (int a = 1; a <= s; ++a) ranks[static_cast<std::size_t>(a)] = detail::c5_power_vectors(a);
    for (std::size_t k = 0; k < pw.gens.size(); ++k) {
        CoverPowerExpression e = detail::expression_from_monomial(p, basis, s, pw.gens[k]);
        int a_total = e.alpha_sum();
        std::size_t f_rank = 0;
        if (a_total > 0) {
            std::array<int, 5> vec{};
            for (int i = 0; i < 5; ++i)
                for (int pos : detail::c5_cover_pattern()[static_cast<std::size_t>(i)])
                    vec[static_cast<std::size_t>(pos)] += e.alpha[static_cast<std::size_t>(i)];
            const auto& table = ranks[static_cast<std::size_t>(a_total)];
            auto it = std::lower_bound(table.begin(), table.end(), vec, std::greater<>());
            if (it == table.end() || *it != vec) throw std::logic_error("f-part missing from the C5 power table");
            f_rank = static_cast<std::size_t>(it - table.begin());
        }
        std::vector<int> neg_beta;
        for (int b : e.beta) neg_beta.push_back(-b);
        keys[k] = Key{-a_total, f_rank, std::move(neg_beta)};
    }
    OrderedGenerators og{pw, {}, OrderProvenance::CoverPowerKeys};
    og.order.resize(pw.gens.size());
    std::iota(og.order.begin(), og.order.end(), 0);
    std::sort(og.order.begin(), og.order.end(), [&](int a, int b) {
        const Key &ka = keys[static_cast<std::size_t>(a)], &kb = keys[static_cast<std::size_t>(b)];
        if (ka.neg_alpha_sum != kb.neg_alpha_sum) return ka.neg_alpha_sum < kb.neg_alpha_sum;
        if (ka.f_rank != kb.f_rank) return ka.f_rank < kb.f_rank;
        return ka.neg_beta < kb.neg_beta;
    });
    auto check = check_linear_quotients_order(og);
    if (!check.certificate) {
        throw std::logic_error("cover-power key order failed linear-quotients validation at step " +
                               std::to_string(check.failure->index));
    }
    return og;
}

}  // namespace idealis

#endif
