#include "doctest.h"

#include "idealis/suites.hpp"

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

Graph cycle5() {
    return Graph::from_edges({}, {{"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u4", "u5"}, {"u5", "u1"}});
}

// strip timing before comparing reports
Json stripped(const SuiteReport& r) {
    Json j = report_to_json(r);
    for (auto& c : j["cases"]) c.erase("ms");
    return j;
}

}  // namespace

TEST_SUITE_BEGIN("suites");

TEST_CASE("colon chain passes on the seven-vertex example with the V3-first order") {
    SuiteReport r = verify_colon_chain(seven_vertex_example(), 1);
    CHECK(r.all_pass());
    CHECK(!r.any_error());
    CHECK(r.exit_code() == 0);
    CHECK(r.cases.size() == 22);  // 11 generators, reg + structure per step
}

TEST_CASE("colon chain fails at the first step when ab is ordered first") {
    SuiteReport r = verify_colon_chain(seven_vertex_example(), 1, std::string("a*b"));
    CHECK(!r.all_pass());
    CHECK(r.exit_code() == 2);
    const CaseRecord* first_reg = nullptr;
    for (const auto& c : r.cases)
        if (c.id == "s=1:l=0:reg") first_reg = &c;
    REQUIRE(first_reg != nullptr);
    CHECK(first_reg->computed == "3");  // the recorded golden value
    CHECK(!first_reg->pass);
}

TEST_CASE("colon chain on the 5-cycle for s = 1 and 2") {
    for (int s : {1, 2}) {
        SuiteReport r = verify_colon_chain(cycle5(), s);
        CHECK(r.all_pass());
    }
}

TEST_CASE("colon chain rejects graphs outside its precondition") {
    Graph split = Graph::from_edges({}, {{"a", "b"}});
    CHECK_THROWS_AS(verify_colon_chain(split, 1), std::invalid_argument);
    Graph c4 = Graph::from_edges({}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    CHECK_THROWS_AS(verify_colon_chain(c4, 1), std::invalid_argument);
}

TEST_CASE("neighbor bound suite on fixed and random graphs") {
    SuiteReport c5 = verify_neighbor_bound(cycle5());
    CHECK(c5.all_pass());
    SuiteReport k2 = verify_neighbor_bound(Graph::from_edges({}, {{"x", "y"}}));
    CHECK(k2.all_pass());
    int done = 0;
    for (std::uint64_t seed = 0; done < 25; ++seed) {
        Graph g = random_graph(static_cast<int>(seed % 6) + 2, 0.35, 4000 + seed);
        if (g.edge_count() == 0) continue;
        ++done;
        SuiteReport r = verify_neighbor_bound(g);
        CHECK(r.all_pass());
    }
    // sampled (C4,2K2)-free graphs, n <= 7
    done = 0;
    for (std::uint64_t seed = 0; done < 25; ++seed) {
        auto [g, p] = random_c4_2k2_graph(static_cast<int>(seed % 2), static_cast<int>(seed % 3),
                                          seed % 2 == 0, 0.5, 4100 + seed);
        if (g.edge_count() == 0 || g.vertex_count() > 7) continue;
        ++done;
        SuiteReport r = verify_neighbor_bound(g);
        CHECK(r.all_pass());
    }
}

TEST_CASE("suite report json carries anchors and hashes") {
    SuiteReport r = verify_colon_chain(cycle5(), 1);
    Json j = report_to_json(r);
    CHECK(j["schema"] == "1");
    CHECK(j["suite"] == "colon-chain");
    for (const auto& c : j["cases"]) {
        CHECK(!c["anchor"].get<std::string>().empty());
        CHECK(c["input"].get<std::string>().size() == 16);
    }
}

TEST_CASE("small reproduction suite is deterministic and passes") {
    SuiteConfig cfg;
    cfg.reg_bound_count = 6;
    cfg.linres_count = 2;
    cfg.split_count = 2;
    cfg.c5_variants = 1;
    cfg.oracle_count = 6;
    cfg.froberg_count = 6;
    cfg.polarization_count = 4;
    cfg.lemma25_count = 4;
    cfg.lemma26_count = 4;
    cfg.lemma27_count = 4;
    cfg.s_max = 2;
    SuiteReport a = suite_reproduce(42, cfg);
    CHECK(a.all_pass());
    CHECK(!a.any_error());
    SuiteReport b = suite_reproduce(42, cfg);
    CHECK(stripped(a) == stripped(b));
    cfg.threads = 1;
    SuiteReport c = suite_reproduce(42, cfg);
    CHECK(stripped(a) == stripped(c));
    SuiteReport d = suite_reproduce(43, cfg);
    CHECK(stripped(a) != stripped(d));
}

TEST_CASE("ideal json round trip") {
    MonomialIdeal i = parse_ideal_text("x1^2*x3\nx2*x3\n");
    Json j = ideal_to_json(i);
    MonomialIdeal back = ideal_from_json(j);
    CHECK(back == i);
}

TEST_CASE("betti json shape") {
    MonomialIdeal i = edge_ideal(Graph::from_edges({}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}));
    auto table = betti_table(i, FieldTag::Q()).table;
    Json j = betti_to_json(i, table);
    CHECK(j["field"] == "Q");
    CHECK(j["reg"] == 2);
    CHECK(j["linear"] == true);
    REQUIRE(j["entries"].size() == 3);
    CHECK(j["entries"][0] == Json::array({0, 2, 4}));
}

TEST_CASE("certificate json lists order and steps") {
    MonomialIdeal i = power(cover_ideal(canonical_c5()), 1);
    auto cert = greedy_linear_quotients(i);
    REQUIRE(cert.has_value());
    Json j = certificate_to_json(*cert);
    CHECK(j["order"].size() == 5);
    CHECK(j["steps"].size() == 4);
    CHECK(j["steps"][0]["index"] == 2);
}

TEST_SUITE_END();
