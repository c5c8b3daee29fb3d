#include "doctest.h"

#include <set>

#include "idealis/betti.hpp"
#include "idealis/cover_powers.hpp"
#include "idealis/random_graph.hpp"

using namespace idealis;

namespace {

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

}  // namespace

TEST_SUITE_BEGIN("cover_powers");

TEST_CASE("c5 cover power order sizes and validity") {
    auto o1 = c5_cover_power_order(1);
    CHECK(o1.size() == 5);
    auto o2 = c5_cover_power_order(2);
    CHECK(o2.size() == 15);
    auto o3 = c5_cover_power_order(3);
    CHECK(o3.size() == 35);
    // descending lex: the first generator maximizes u1's exponent
    CHECK(o2.at(0).exponent(0) == 2);
    CHECK_THROWS(c5_cover_power_order(0));
}

TEST_CASE("expressions for single covers") {
    Graph g = seven_vertex_example();
    auto r = recognize_c4_2k2(g);
    REQUIRE(r.free());
    const Partition& p = *r.partition;
    MonomialIdeal covers = cover_ideal(g);
    int type2 = 0, type1 = 0;
    for (const auto& cov : covers.gens) {
        CoverPowerExpression e = cover_power_expression(g, p, 1, cov);
        CHECK(e.alpha_sum() + e.beta[0] == 1);
        if (e.beta[0] == 1) {
            ++type2;  // N(b)
            CHECK(cov == [&] {
                std::vector<std::pair<int, int>> pairs;
                for (int v : mask_to_vertices(g.neighbors(g.index_of("b")))) pairs.emplace_back(v, 1);
                return Monomial::from_pairs(pairs);
            }());
        } else {
            ++type1;
            CHECK(e.alpha_sum() == 1);
        }
    }
    CHECK(type2 == 1);
    CHECK(type1 == 5);
}

TEST_CASE("expressions match brute-force factorization at s=2") {
    Graph g = seven_vertex_example();
    auto r = recognize_c4_2k2(g);
    REQUIRE(r.free());
    const Partition& p = *r.partition;
    MonomialIdeal covers = cover_ideal(g);
    MonomialIdeal sq = power(covers, 2);
    for (const auto& m : sq.gens) {
        auto facts = factorizations(m, covers.gens, 2);
        REQUIRE(facts.size() == 1);  // unique expression
        CoverPowerExpression e = cover_power_expression(g, p, 2, m);
        // reconstruct the factorization counts from (alpha, beta)
        CHECK(e.alpha_sum() + e.beta[0] == 2);
    }
}

TEST_CASE("expression errors") {
    Graph g = seven_vertex_example();
    auto r = recognize_c4_2k2(g);
    REQUIRE(r.free());
    CHECK_THROWS_AS(cover_power_expression(g, *r.partition, 1, parse_monomial("a*b", edge_ideal(g).vars)),
                    std::invalid_argument);
    auto [c5g, c5p] = random_c4_2k2_graph(0, 0, true, 0, 5);
    MonomialIdeal cov = cover_ideal(c5g);
    CHECK_THROWS_AS(cover_power_expression(c5g, c5p, 1, cov.gens[0]), std::invalid_argument);
}

TEST_CASE("products of covers are minimal generators") {
    auto [c5, pc5] = random_c4_2k2_graph(0, 0, true, 0, 1);
    auto r1 = check_products_minimal(c5, pc5, 2);
    CHECK(r1.all_minimal);
    CHECK(r1.distinct_products == 15);

    Graph g = seven_vertex_example();
    auto rec = recognize_c4_2k2(g);
    auto r2 = check_products_minimal(g, *rec.partition, 2);
    CHECK(r2.all_minimal);
    CHECK(r2.distinct_products == 21);

    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto [gg, pp] = random_c4_2k2_graph(static_cast<int>(seed % 3), static_cast<int>(seed % 2) + 1, true,
                                            0.5, 100 + seed);
        auto r3 = check_products_minimal(gg, pp, 3);
        CHECK(r3.all_minimal);
    }
}

TEST_CASE("cover power order passes validation on sampled graphs") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto [g, p] = random_c4_2k2_graph(static_cast<int>(seed % 3), static_cast<int>(seed % 3), seed % 2 == 0,
                                          0.6, 200 + seed);
        if (g.edge_count() == 0) continue;
        for (int s = 1; s <= 2; ++s) {
            OrderedGenerators og = cover_power_order(g, p, s);
            CHECK(check_linear_quotients_order(og).certificate.has_value());
        }
    }
}

TEST_CASE("seven-vertex example cover order at s=1 exposes z variables") {
    Graph g = seven_vertex_example();
    auto rec = recognize_c4_2k2(g);
    OrderedGenerators og = cover_power_order(g, *rec.partition, 1);
    auto check = check_linear_quotients_order(og);
    REQUIRE(check.certificate.has_value());
    // N(b) comes last (alpha sum 0) and its colon step contains the variable b
    int b_var = g.index_of("b");
    const auto& last_step = check.certificate->step_colon_vars.back();
    CHECK(std::find(last_step.begin(), last_step.end(), b_var) != last_step.end());
}

TEST_CASE("pure C5 delegation coincides with the canonical lex order") {
    auto [g, p] = random_c4_2k2_graph(0, 0, true, 0, 9);
    OrderedGenerators og = cover_power_order(g, p, 2);
    OrderedGenerators canon = c5_cover_power_order(2);
    REQUIRE(og.size() == canon.size());
    for (std::size_t t = 0; t < og.size(); ++t) {
        // same exponent pattern along the cycle
        for (int k = 0; k < 5; ++k)
            CHECK(og.at(t).exponent(p.c5_order[static_cast<std::size_t>(k)]) == canon.at(t).exponent(k));
    }
    CHECK(og.provenance == OrderProvenance::LexC5);
}

TEST_CASE("split graphs are certified by search") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto [g, p] = random_c4_2k2_graph(static_cast<int>(seed % 3) + 1, static_cast<int>(seed % 2) + 1,
                                          false, 1.0, 300 + seed);
        if (g.edge_count() == 0) continue;
        for (int s = 1; s <= 3; ++s) {
            OrderedGenerators og = cover_power_order(g, p, s);
            CHECK(check_linear_quotients_order(og).certificate.has_value());
        }
    }
}

TEST_CASE("equigenerated certified powers have linear resolutions") {
    // C5 cover powers are generated in one degree 3p; a quotients
    // certificate forces reg = 3p
    for (int p = 1; p <= 3; ++p) {
        MonomialIdeal pw = power(cover_ideal(canonical_c5()), p);
        REQUIRE(pw.equigenerated());
        auto ord = c5_cover_power_order(p);
        CHECK(check_linear_quotients_order(ord).certificate.has_value());
        CHECK(has_linear_resolution(pw));
        CHECK(regularity(pw) == 3 * p);
    }
}

TEST_CASE("order keys are total on the corpus") {
    Graph g = seven_vertex_example();
    auto rec = recognize_c4_2k2(g);
    for (int s = 1; s <= 3; ++s) {
        OrderedGenerators og = cover_power_order(g, *rec.partition, s);
        std::set<int> distinct(og.order.begin(), og.order.end());
        CHECK(distinct.size() == og.size());
    }
}

TEST_SUITE_END();
