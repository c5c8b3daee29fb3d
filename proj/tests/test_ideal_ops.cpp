#include "doctest.h"

#include <set>
#include <unordered_set>

#include "idealis/graph.hpp"
#include "idealis/ideal_ops.hpp"
#include "idealis/random_graph.hpp"

using namespace idealis;

namespace {

const std::vector<std::string> xyz{"x", "y", "z"};
Monomial m(const std::string& s) { return parse_monomial(s, xyz); }

Graph cycle5() {
    return Graph::from_edges({}, {{"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u4", "u5"}, {"u5", "u1"}});
}

Graph seven_vertex_example() {
    return Graph::from_edges({}, {{"a", "b"},
                                  {"b", "c"},
                                  {"b", "d"},
                                  {"b", "e"},
                                  {"b", "f"},
                                  {"b", "g"},
                                  {"c", "d"},
                                  {"d", "e"},
                                  {"e", "f"},
                                  {"f", "g"},
                                  {"g", "c"}});
}

MonomialIdeal sturmfels() {
    return parse_ideal_text("d*e*f\nc*e*f\nc*d*f\nc*d*e\nb*e*f\nb*c*d\na*c*f\na*d*e\n");
}

// expand all s-fold products of generators one by one, then minimalize
MonomialIdeal brute_power(const MonomialIdeal& i, int s) {
    std::vector<Monomial> acc{Monomial::one()};
    for (int t = 0; t < s; ++t) {
        std::vector<Monomial> next;
        for (const auto& a : acc)
            for (const auto& g : i.gens) next.push_back(a.times(g));
        acc = std::move(next);
    }
    return minimalize(i.vars, std::move(acc));
}

}  // namespace

TEST_SUITE_BEGIN("ideal_ops");

TEST_CASE("powers of a simple ideal") {
    MonomialIdeal i = minimalize(xyz, {m("x"), m("y")});
    MonomialIdeal sq = power(i, 2);
    CHECK(sq.gens == std::vector<Monomial>{m("x^2"), m("x*y"), m("y^2")});
    CHECK(power(i, 1) == i);
    CHECK_THROWS(power(i, 0));
}

TEST_CASE("edge ideal squared of C5 has 15 generators and matches brute force") {
    MonomialIdeal i = edge_ideal(cycle5());
    MonomialIdeal sq = power(i, 2);
    CHECK(sq.gens.size() == 15);
    CHECK(sq == brute_power(i, 2));
    MonomialIdeal cube = power(i, 3);
    CHECK(cube == brute_power(i, 3));
}

TEST_CASE("powers compose") {
    MonomialIdeal i = edge_ideal(cycle5());
    CHECK(power(i, 3) == product(power(i, 1), power(i, 2)));
    CHECK(power(i, 4) == product(power(i, 2), power(i, 2)));
}

TEST_CASE("sturmfels ideal squared is generated in degree 6") {
    MonomialIdeal sq = power(sturmfels(), 2);
    CHECK(sq.equigenerated());
    CHECK(sq.max_gen_degree() == 6);
    CHECK(sq.gens.size() == 36);
}

TEST_CASE("colon by a monomial") {
    MonomialIdeal i = minimalize(xyz, {m("x*y"), m("y*z")});
    MonomialIdeal c = colon(i, m("y"));
    CHECK(c.gens == std::vector<Monomial>{m("x"), m("z")});
    CHECK(colon(i, m("x*y")).is_unit());
    CHECK(colon(minimalize(xyz, {}), m("x")).is_zero());
}

TEST_CASE("colon of monomial multiples differing in one vertex") {
    // (u*v*N) : (w*v*N) = (u) for distinct vertices u, w of the seven-vertex
    // graph, with N a generator of a lower power
    Graph g = seven_vertex_example();
    MonomialIdeal e = edge_ideal(g);
    Monomial n = parse_monomial("c*d", e.vars);
    Monomial uvn = parse_monomial("e*b", e.vars).times(n);
    Monomial vwn = parse_monomial("a*b", e.vars).times(n);
    MonomialIdeal c = colon(minimalize(e.vars, {uvn}), vwn);
    REQUIRE(c.gens.size() == 1);
    CHECK(c.gens[0] == parse_monomial("e", e.vars));
}

TEST_CASE("colon composition property") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::string> vars;
        int n = rng.range(2, 6);
        for (int v = 1; v <= n; ++v) vars.push_back("x" + std::to_string(v));
        std::vector<Monomial> gens;
        for (int k = rng.range(1, 6); k > 0; --k) {
            std::vector<std::pair<int, int>> pairs;
            for (int v = 0; v < n; ++v)
                if (rng.bernoulli(0.5)) pairs.emplace_back(v, rng.range(1, 3));
            gens.push_back(Monomial::from_pairs(pairs));
        }
        MonomialIdeal i = minimalize(vars, gens);
        if (i.is_zero() || i.is_unit()) continue;
        auto random_monomial = [&]() {
            std::vector<std::pair<int, int>> pairs;
            for (int v = 0; v < n; ++v)
                if (rng.bernoulli(0.4)) pairs.emplace_back(v, rng.range(1, 2));
            return Monomial::from_pairs(pairs);
        };
        Monomial a = random_monomial(), b = random_monomial();
        CHECK(colon(i, a.times(b)) == colon(colon(i, a), b));
    }
}

TEST_CASE("sum absorbs lower powers") {
    MonomialIdeal i = edge_ideal(cycle5());
    for (int t = 1; t <= 3; ++t) {
        MonomialIdeal high = power(i, t + 1);
        MonomialIdeal low = power(i, t);
        CHECK(sum_with(high, low.gens) == low);
    }
    MonomialIdeal x = minimalize(xyz, {m("x")});
    CHECK(sum_with(x, {m("y")}).gens.size() == 2);
    CHECK(sum_with(minimalize(xyz, {m("x^2")}), {m("x")}) == x);
}

TEST_CASE("polarization") {
    MonomialIdeal i = minimalize({"x"}, {parse_monomial("x^2", {"x"})});
    auto p = polarize(i);
    CHECK(p.ideal.vars == std::vector<std::string>{"x", "x_2"});
    CHECK(p.ideal.gens.size() == 1);
    CHECK(p.ideal.gens[0].squarefree());
    CHECK(p.var_origin == std::vector<int>{0, 0});

    MonomialIdeal sf = edge_ideal(cycle5());
    auto q = polarize(sf);
    CHECK(q.ideal == sf);
    CHECK(q.var_origin == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("polarization preserves generator count and degrees") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::string> vars{"x", "y", "z", "w"};
        std::vector<Monomial> gens;
        for (int k = rng.range(1, 6); k > 0; --k) {
            std::vector<std::pair<int, int>> pairs;
            for (int v = 0; v < 4; ++v)
                if (rng.bernoulli(0.5)) pairs.emplace_back(v, rng.range(1, 3));
            gens.push_back(Monomial::from_pairs(pairs));
        }
        MonomialIdeal i = minimalize(vars, gens);
        if (i.is_zero() || i.is_unit()) continue;
        auto p = polarize(i);
        REQUIRE(p.ideal.gens.size() == i.gens.size());
        std::multiset<int> before, after;
        for (const auto& g : i.gens) before.insert(g.degree());
        for (const auto& g : p.ideal.gens) {
            CHECK(g.squarefree());
            after.insert(g.degree());
        }
        CHECK(before == after);
    }
}

TEST_CASE("edge and cover ideals of small graphs") {
    Graph k2 = Graph::from_edges({}, {{"x", "y"}});
    MonomialIdeal e = edge_ideal(k2);
    CHECK(e.gens.size() == 1);
    CHECK(monomial_to_string(e.gens[0], e.vars) == "x*y");

    Graph c4 = Graph::from_edges({}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    MonomialIdeal cov4 = cover_ideal(c4);
    CHECK(cov4.gens.size() == 2);
    CHECK(cov4.contains(parse_monomial("a*c", cov4.vars)));
    CHECK(cov4.contains(parse_monomial("b*d", cov4.vars)));

    MonomialIdeal cov5 = cover_ideal(cycle5());
    CHECK(cov5.gens.size() == 5);
    CHECK(cov5.contains(parse_monomial("u1*u2*u4", cov5.vars)));
    CHECK(cov5.contains(parse_monomial("u2*u4*u5", cov5.vars)));
    CHECK(cov5.contains(parse_monomial("u2*u3*u5", cov5.vars)));
    CHECK(cov5.contains(parse_monomial("u1*u3*u4", cov5.vars)));
    CHECK(cov5.contains(parse_monomial("u1*u3*u5", cov5.vars)));

    Graph edgeless = Graph::from_edges({"x", "y"}, {});
    CHECK(edge_ideal(edgeless).is_zero());
    CHECK_THROWS_AS(cover_ideal(edgeless), std::invalid_argument);
}

TEST_CASE("alexander duality is an involution on supports") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_graph(static_cast<int>(seed % 5) + 3, 0.45, 700 + seed);
        if (g.edge_count() == 0) continue;
        MonomialIdeal cov = cover_ideal(g);
        // cover generators are exactly the minimal transversals of the edge supports
        for (const auto& c : cov.gens)
            for (const auto& e : edge_ideal(g).gens) CHECK(!c.gcd(e).is_one());
        // dualizing the covers returns the edges: minimal transversals of the
        // cover supports are the edge supports
        std::vector<VertexMask> cover_masks;
        for (const auto& c : cov.gens) {
            VertexMask mask = 0;
            for (const auto& [v, ex] : c.exponents()) mask |= bit(v);
            cover_masks.push_back(mask);
        }
        std::set<VertexMask> edge_masks;
        for (const auto& [u, v] : g.edges()) edge_masks.insert(bit(u) | bit(v));
        // brute force minimal transversals of cover_masks
        std::set<VertexMask> transversals;
        VertexMask all = g.all_mask();
        for (VertexMask s = 0;; ++s) {
            bool hits = true;
            for (VertexMask cm : cover_masks)
                if (!(cm & s)) {
                    hits = false;
                    break;
                }
            if (hits) {
                bool minimal = true;
                for (int v : mask_to_vertices(s)) {
                    bool still = true;
                    for (VertexMask cm : cover_masks)
                        if (!(cm & (s & ~bit(v)))) {
                            still = false;
                            break;
                        }
                    if (still) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) transversals.insert(s);
            }
            if (s == all) break;
        }
        CHECK(transversals == edge_masks);
    }
}

TEST_CASE("factorizations") {
    std::vector<Monomial> gens{m("x*y")};
    auto f = factorizations(m("x^2*y^2"), gens, 2);
    REQUIRE(f.size() == 1);
    CHECK(f[0] == std::vector<int>{0, 0});

    MonomialIdeal e5 = edge_ideal(cycle5());
    auto mm = parse_monomial("u1*u2^2*u3", e5.vars);
    auto f2 = factorizations(mm, e5.gens, 2);
    REQUIRE(f2.size() == 1);
    CHECK(e5.gens[static_cast<std::size_t>(f2[0][0])].times(e5.gens[static_cast<std::size_t>(f2[0][1])]) == mm);

    // every minimal generator of I(C5)^3 factors into exactly 3 edges
    MonomialIdeal cube = power(e5, 3);
    for (const auto& g : cube.gens) {
        auto fs = factorizations(g, e5.gens, 3);
        CHECK(!fs.empty());
        for (const auto& fac : fs) {
            CHECK(fac.size() == 3);
            Monomial prod = Monomial::one();
            for (int idx : fac) prod = prod.times(e5.gens[static_cast<std::size_t>(idx)]);
            CHECK(prod == g);
        }
    }
}

TEST_CASE("unique factorization of C5 cover power generators") {
    MonomialIdeal cov = cover_ideal(cycle5());
    for (int p = 1; p <= 3; ++p) {
        MonomialIdeal pw = power(cov, p);
        for (const auto& g : pw.gens) CHECK(factorizations(g, cov.gens, p).size() == 1);
    }
}

TEST_CASE("power order on generators: s=1 returns the input order") {
    MonomialIdeal e5 = edge_ideal(cycle5());
    OrderedGenerators edges = user_order(e5);
    OrderedGenerators same = banerjee_order(edges, 1);
    CHECK(same.order == edges.order);
}

TEST_CASE("power order on I(C5)^2 puts the square of the top edge first") {
    MonomialIdeal e5 = edge_ideal(cycle5());
    // order u1u2 > u2u3 > u3u4 > u4u5 > u5u1
    std::vector<std::string> want{"u1*u2", "u2*u3", "u3*u4", "u4*u5", "u1*u5"};
    OrderedGenerators edges{e5, {}, OrderProvenance::UserGiven};
    for (const auto& w : want) {
        auto target = parse_monomial(w, e5.vars);
        for (std::size_t k = 0; k < e5.gens.size(); ++k)
            if (e5.gens[k] == target) edges.order.push_back(static_cast<int>(k));
    }
    REQUIRE(edges.order.size() == 5);
    OrderedGenerators ord = banerjee_order(edges, 2);
    CHECK(ord.at(0) == parse_monomial("u1^2*u2^2", e5.vars));
    CHECK(ord.size() == 15);
    // the lex-max factorization vectors are strictly decreasing along the
    // order: distinct generators never tie
    std::vector<Monomial> ordered_edges;
    for (std::size_t t = 0; t < edges.size(); ++t) ordered_edges.push_back(edges.at(t));
    auto lexmax_key = [&](const Monomial& m) {
        std::vector<int> best;
        for (const auto& f : factorizations(m, ordered_edges, 2)) {
            std::vector<int> vec(5, 0);
            for (int idx : f) ++vec[static_cast<std::size_t>(idx)];
            if (best.empty() || std::lexicographical_compare(best.begin(), best.end(), vec.begin(), vec.end()))
                best = vec;
        }
        return best;
    };
    for (std::size_t t = 0; t + 1 < ord.size(); ++t) {
        auto hi = lexmax_key(ord.at(t)), lo = lexmax_key(ord.at(t + 1));
        CHECK(std::lexicographical_compare(lo.begin(), lo.end(), hi.begin(), hi.end()));
    }
}

TEST_CASE("power order on the seven-vertex example starting at ab") {
    Graph g = seven_vertex_example();
    MonomialIdeal e = edge_ideal(g);
    OrderedGenerators edges{e, {}, OrderProvenance::UserGiven};
    auto ab = parse_monomial("a*b", e.vars);
    int ab_idx = -1;
    for (std::size_t k = 0; k < e.gens.size(); ++k)
        if (e.gens[k] == ab) ab_idx = static_cast<int>(k);
    REQUIRE(ab_idx >= 0);
    edges.order.push_back(ab_idx);
    for (std::size_t k = 0; k < e.gens.size(); ++k)
        if (static_cast<int>(k) != ab_idx) edges.order.push_back(static_cast<int>(k));
    OrderedGenerators ord = banerjee_order(edges, 2);
    CHECK(ord.at(0) == ab.times(ab));
}

TEST_SUITE_END();
