#include "doctest.h"

#include "idealis/monomial.hpp"
#include "idealis/util.hpp"

using namespace idealis;

namespace {
const std::vector<std::string> xyz{"x", "y", "z"};
Monomial m(const std::string& s) { return parse_monomial(s, xyz); }
}  // namespace

TEST_SUITE_BEGIN("monomial");

TEST_CASE("basic arithmetic") {
    CHECK(m("x*y").degree() == 2);
    CHECK(m("x^2*z").exponent(0) == 2);
    CHECK(m("x^2*z").exponent(1) == 0);
    CHECK(m("x*y").times(m("y*z")) == m("x*y^2*z"));
    CHECK(m("x^2*y").divide_exact(m("x*y")) == m("x"));
    CHECK(m("x*y").gcd(m("y*z")) == m("y"));
    CHECK(m("x*y").lcm(m("y^2*z")) == m("x*y^2*z"));
    CHECK(m("x*y").pow(3) == m("x^3*y^3"));
    CHECK(m("x").divides(m("x*y")));
    CHECK(!m("x^2").divides(m("x*y")));
    CHECK_THROWS(m("x*y").divide_exact(m("z")));
    CHECK(Monomial::one().is_one());
    CHECK(m("y").as_variable() == 1);
    CHECK(!m("y^2").as_variable().has_value());
}

TEST_CASE("lex comparison uses variable order") {
    CHECK(m("x").compare_lex(m("y")) > 0);
    CHECK(m("x^2").compare_lex(m("x*y")) > 0);
    CHECK(m("x*y").compare_lex(m("x*y")) == 0);
    CHECK(m("y^3").compare_lex(m("x")) < 0);
}

TEST_CASE("minimalize drops dominated generators") {
    auto i = minimalize(xyz, {m("x^2"), m("x")});
    CHECK(i.gens == std::vector<Monomial>{m("x")});
    auto j = minimalize(xyz, {m("x*y"), m("y*z"), m("x*y*z")});
    CHECK(j.gens.size() == 2);
    CHECK(j.contains(m("x*y*z")));
}

TEST_CASE("minimalize is idempotent and order independent") {
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Monomial> gens;
        int count = rng.range(1, 8);
        for (int k = 0; k < count; ++k) {
            std::vector<std::pair<int, int>> pairs;
            for (int v = 0; v < 3; ++v)
                if (rng.bernoulli(0.7)) pairs.emplace_back(v, rng.range(1, 3));
            gens.push_back(Monomial::from_pairs(pairs));
        }
        auto a = minimalize(xyz, gens);
        // shuffle deterministically
        for (std::size_t s = gens.size(); s > 1; --s)
            std::swap(gens[s - 1], gens[static_cast<std::size_t>(rng.below(s))]);
        auto b = minimalize(xyz, gens);
        CHECK(a == b);
        CHECK(minimalize(a.vars, a.gens) == a);
        for (const auto& g : a.gens) {
            int dividers = 0;
            for (const auto& h : a.gens)
                if (h != g && h.divides(g)) ++dividers;
            CHECK(dividers == 0);
        }
    }
}

TEST_CASE("zero and unit ideals are distinguished") {
    MonomialIdeal zero = minimalize(xyz, {});
    CHECK(zero.is_zero());
    MonomialIdeal unit = minimalize(xyz, {Monomial::one(), m("x")});
    CHECK(unit.is_unit());
    CHECK(unit.gens.size() == 1);
}

TEST_CASE("ideal text round trip") {
    MonomialIdeal i = parse_ideal_text("x1^2*x3\nx2*x3\n# comment\n");
    CHECK(i.vars == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(i.gens.size() == 2);
    MonomialIdeal j = parse_ideal_text(ideal_to_text(i));
    CHECK(i == j);
    CHECK_THROWS(parse_ideal_text("x^0\n"));
    CHECK_THROWS(parse_monomial("q", xyz));
}

TEST_CASE("natural label order in parsed ideals") {
    MonomialIdeal i = parse_ideal_text("u10*u2\n");
    CHECK(i.vars == std::vector<std::string>{"u2", "u10"});
}

TEST_SUITE_END();
