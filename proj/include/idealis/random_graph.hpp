#ifndef IDEALIS_RANDOM_GRAPH_HPP
#define IDEALIS_RANDOM_GRAPH_HPP

#include <string>
#include <vector>

#include "idealis/graph.hpp"

namespace idealis {

struct SampledGraph {
    Graph graph;
    Partition partition;
};

// Builds a graph that is (C4,2K2)-free by construction: an independent set
// of n1 vertices (a1..), a clique of n2 vertices (b1..), and optionally a
// 5-cycle (u1..u5) joined completely to the clique and not at all to the
// independent set. Independent-clique edges appear at `bipartite_density`.
// Deterministic per seed.
inline SampledGraph random_c4_2k2_graph(int n1, int n2, bool with_c5, double bipartite_density,
                                        std::uint64_t seed) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("part sizes must be non-negative");
    Rng rng(seed);
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    std::vector<std::string> part1, part2, part3;
    for (int i = 1; i <= n1; ++i) part1.push_back("a" + std::to_string(i));
    for (int i = 1; i <= n2; ++i) part2.push_back("b" + std::to_string(i));
    if (with_c5)
        for (int i = 1; i <= 5; ++i) part3.push_back("u" + std::to_string(i));
    for (const auto& v : part1) vs.push_back(v);
    for (const auto& v : part2) vs.push_back(v);
    for (const auto& v : part3) vs.push_back(v);

    for (std::size_t i = 0; i < part2.size(); ++i)
        for (std::size_t j = i + 1; j < part2.size(); ++j) es.emplace_back(part2[i], part2[j]);
    if (with_c5) {
        for (int i = 0; i < 5; ++i) es.emplace_back(part3[static_cast<std::size_t>(i)],
                                                    part3[static_cast<std::size_t>((i + 1) % 5)]);
        for (const auto& b : part2)
            for (const auto& u : part3) es.emplace_back(b, u);
    }
    for (const auto& a : part1)
        for (const auto& b : part2)
            if (rng.bernoulli(bipartite_density)) es.emplace_back(a, b);

    Graph g = Graph::from_edges(vs, es);
    Partition p;
    for (const auto& a : part1) p.v1 |= bit(g.index_of(a));
    for (const auto& b : part2) p.v2 |= bit(g.index_of(b));
    if (with_c5) {
        for (const auto& u : part3) p.v3 |= bit(g.index_of(u));
        std::vector<int> cyc;
        for (const auto& u : part3) cyc.push_back(g.index_of(u));
        p.c5_order = detail::canonical_c5_order(g, cyc);
    }
    return {g, p};
}

// Plain G(n, density) with labels v1..vn; deterministic per seed.
inline Graph random_graph(int n, double density, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::string> vs;
    for (int i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(density)) es.emplace_back(vs[static_cast<std::size_t>(i)],
                                                        vs[static_cast<std::size_t>(j)]);
    return Graph::from_edges(vs, es);
}

}  // namespace idealis

#endif
