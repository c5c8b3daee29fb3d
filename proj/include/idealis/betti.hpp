#ifndef IDEALIS_BETTI_HPP
#define IDEALIS_BETTI_HPP

#include <map>
#include <unordered_map>
#include <unordered_set>

#include "idealis/ideal_ops.hpp"
#include "idealis/simplicial.hpp"

namespace idealis {

// Graded Betti numbers of an ideal: entries[(i, j)] = b_{i,j}(I), with
// b_{0,j} counting the degree-j minimal generators.
struct BettiTable {
    FieldTag field;
    std::map<std::pair<int, int>, long long> entries;

    int regularity() const {
        int reg = 0;
        for (const auto& [ij, rank] : entries)
            if (rank != 0) reg = std::max(reg, ij.second - ij.first);
        return reg;
    }

    long long rank(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

struct MultigradedEntry {
    std::vector<int> multidegree;
    int i;
    long long rank;
};

struct BettiOptions {
    std::size_t lattice_cap = 200000;  // max lcm-lattice elements
    int threads = 1;                   // 0 = hardware concurrency
    bool multigraded = false;          // also return per-multidegree ranks
};

struct BettiResult {
    BettiTable table;
    std::vector<MultigradedEntry> multigraded;  // only when requested
};

namespace detail {

using Multidegree = std::vector<int>;

struct MultidegreeHash {
    std::size_t operator()(const Multidegree& b) const {
        std::size_t h = 14695981039346656037ULL;
        for (int v : b) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

inline Multidegree dense_exponents(const Monomial& m, int n) {
    Multidegree d(static_cast<std::size_t>(n), 0);
    for (const auto& [v, e] : m.exponents()) d[static_cast<std::size_t>(v)] = e;
    return d;
}

// Closure of the generator multidegrees under pairwise lcm (the bottom is
// excluded). Every multidegree carrying a nonzero Betti number lies here.
inline std::vector<Multidegree> lcm_lattice(const std::vector<Multidegree>& gens, std::size_t cap) {
    std::unordered_set<Multidegree, MultidegreeHash> seen(gens.begin(), gens.end());
    std::vector<Multidegree> elements(seen.begin(), seen.end());
    std::size_t next = 0;
    while (next < elements.size()) {
        Multidegree b = elements[next++];
        for (const auto& g : gens) {
            Multidegree j(b.size());
            bool grew = false;
            for (std::size_t v = 0; v < b.size(); ++v) {
                j[v] = std::max(b[v], g[v]);
                grew |= j[v] != b[v];
            }
            if (!grew) continue;
            if (seen.insert(j).second) {
                elements.push_back(std::move(j));
                if (elements.size() > cap)
                    throw ResourceError("lcm lattice exceeds configured cap of " + std::to_string(cap) + " elements");
            }
        }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
}

// Scratch space reused across multidegrees by one worker thread.
struct KoszulScratch {
    std::vector<char> mark;
    std::vector<std::uint32_t> touched;
};

// Ranks of the reduced homology of the upper-Koszul complex
// K^b = { squarefree τ : x^(b-τ) ∈ I }, computed per dimension. Returns an
// empty vector when the complex is a cone (all homology vanishes).
inline std::vector<long long> upper_koszul_homology(const Multidegree& b,
                                                    const std::vector<Multidegree>& gens,
                                                    const FieldTag& field, KoszulScratch& scratch) {
    std::vector<int> support;
    for (std::size_t v = 0; v < b.size(); ++v)
        if (b[v] > 0) support.push_back(static_cast<int>(v));
    int u = static_cast<int>(support.size());
    if (u > 26) throw ResourceError("upper-Koszul support exceeds 26 variables");

    // K^b is the union of the full simplices on A_g = {v : g_v < b_v} over
    // the generators g dividing x^b; any vertex in every A_g is a cone apex.
    std::vector<std::uint32_t> amasks;
    std::uint32_t common = (u == 32 ? ~0u : (1u << u) - 1);
    for (const auto& g : gens) {
        bool divides = true;
        for (std::size_t v = 0; v < b.size() && divides; ++v) divides = g[v] <= b[v];
        if (!divides) continue;
        std::uint32_t a = 0;
        for (int k = 0; k < u; ++k)
            if (g[static_cast<std::size_t>(support[static_cast<std::size_t>(k)])] <
                b[static_cast<std::size_t>(support[static_cast<std::size_t>(k)])])
                a |= 1u << k;
        common &= a;
        amasks.push_back(a);
    }
    if (amasks.empty()) throw std::logic_error("lattice multidegree with no dividing generator");
    if (common != 0) return {};  // cone, no reduced homology

    // drop dominated simplices, largest first
    std::sort(amasks.begin(), amasks.end(),
              [](std::uint32_t x, std::uint32_t y) { return popcount(x) > popcount(y); });
    std::vector<std::uint32_t> maximal;
    for (std::uint32_t a : amasks) {
        bool dominated = false;
        for (std::uint32_t m : maximal)
            if ((a & ~m) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(a);
    }

    std::size_t space = std::size_t{1} << u;
    if (scratch.mark.size() < space) scratch.mark.assign(space, 0);
    scratch.touched.clear();
    for (std::uint32_t a : maximal) {
        std::uint32_t sub = a;
        for (;;) {
            if (!scratch.mark[sub]) {
                scratch.mark[sub] = 1;
                scratch.touched.push_back(sub);
            } else if (sub == a && a != 0) {
                break;  // whole simplex already present
            }
            if (sub == 0) break;
            sub = (sub - 1) & a;
        }
    }
    int maxsz = 0;
    for (std::uint32_t f : scratch.touched) maxsz = std::max(maxsz, popcount(f));
    std::vector<std::vector<FaceMask>> by_size(static_cast<std::size_t>(maxsz) + 1);
    for (std::uint32_t f : scratch.touched) {
        by_size[static_cast<std::size_t>(popcount(f))].push_back(f);
        scratch.mark[f] = 0;
    }
    for (auto& level : by_size) std::sort(level.begin(), level.end());
    return homology_from_faces(by_size, field);
}

}  // namespace detail

// Multigraded Betti numbers over the lcm lattice, coarsened to total degree:
// b_{i,b}(I) is the reduced homology of the upper-Koszul complex K^b in
// dimension i-1. Per-multidegree computations run independently on a worker
// pool; the merge is by lattice order, so the result does not depend on
// scheduling.
inline BettiResult betti_table(const MonomialIdeal& ideal, const FieldTag& field, const BettiOptions& opts = {}) {
    if (ideal.is_zero()) throw std::invalid_argument("Betti table of the zero ideal is undefined");
    if (ideal.is_unit()) throw std::invalid_argument("Betti table of the unit ideal is undefined");
    int n = static_cast<int>(ideal.vars.size());

    std::vector<detail::Multidegree> gens;
    gens.reserve(ideal.gens.size());
    for (const auto& g : ideal.gens) gens.push_back(detail::dense_exponents(g, n));
    std::vector<detail::Multidegree> lattice = detail::lcm_lattice(gens, opts.lattice_cap);

    // per-multidegree homology; computations are independent and merged in
    // lattice order, one scratch buffer per worker
    std::vector<std::vector<long long>> slots(lattice.size());
    {
        unsigned workers = opts.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                             : static_cast<unsigned>(opts.threads);
        workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(lattice.size(), 1)));
        if (workers <= 1) {
            detail::KoszulScratch scratch;
            for (std::size_t idx = 0; idx < lattice.size(); ++idx)
                slots[idx] = detail::upper_koszul_homology(lattice[idx], gens, field, scratch);
        } else {
            std::atomic<std::size_t> cursor{0};
            std::exception_ptr error = nullptr;
            std::atomic<bool> failed{false};
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&]() {
                    detail::KoszulScratch scratch;
                    for (;;) {
                        std::size_t idx = cursor.fetch_add(1);
                        if (idx >= lattice.size() || failed.load()) return;
                        try {
                            slots[idx] = detail::upper_koszul_homology(lattice[idx], gens, field, scratch);
                        } catch (...) {
                            if (!failed.exchange(true)) error = std::current_exception();
                            return;
                        }
                    }
                });
            }
            for (auto& t : pool) t.join();
            if (error) std::rethrow_exception(error);
        }
    }

    BettiResult result;
    result.table.field = field;
    for (std::size_t idx = 0; idx < lattice.size(); ++idx) {
        const auto& h = slots[idx];
        if (h.empty()) continue;
        int total = 0;
        for (int v : lattice[idx]) total += v;
        // h[k] is reduced homology in dimension k-1, which is b_{k,b}
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (h[k] == 0) continue;
            result.table.entries[{static_cast<int>(k), total}] += h[k];
            if (opts.multigraded) result.multigraded.push_back({lattice[idx], static_cast<int>(k), h[k]});
        }
    }
    return result;
}

inline int regularity(const MonomialIdeal& ideal, const FieldTag& field = FieldTag::Q(),
                      const BettiOptions& opts = {}) {
    return betti_table(ideal, field, opts).table.regularity();
}

// Linear resolution <=> generated in a single degree d with regularity d.
inline bool has_linear_resolution(const MonomialIdeal& ideal, const FieldTag& field = FieldTag::Q(),
                                  const BettiOptions& opts = {}) {
    if (ideal.is_zero() || ideal.is_unit()) throw std::invalid_argument("linear resolution undefined for zero/unit ideal");
    if (!ideal.equigenerated()) return false;
    return regularity(ideal, field, opts) == ideal.max_gen_degree();
}

namespace detail {

inline void monomials_of_degree(int n, int d, std::vector<std::pair<int, int>>& current, int from,
                                const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (d == 0) {
        emit(current);
        return;
    }
    if (from >= n) return;
    for (int e = d; e >= 1; --e) {
        current.emplace_back(from, e);
        monomials_of_degree(n, d - e, current, from + 1, emit);
        current.pop_back();
    }
    monomials_of_degree(n, d, current, from + 1, emit);
}

}  // namespace detail

// The ideal generated by all degree-d elements of I (d at least the minimal
// generator degree): every degree-d multiple of a generator of degree <= d.
inline MonomialIdeal component_ideal(const MonomialIdeal& ideal, int d) {
    if (ideal.is_zero()) throw std::invalid_argument("component of the zero ideal");
    if (d < ideal.min_gen_degree()) throw std::invalid_argument("component degree below minimal generator degree");
    int n = static_cast<int>(ideal.vars.size());
    std::unordered_set<Monomial, MonomialHash> out;
    for (const auto& g : ideal.gens) {
        if (g.degree() > d) continue;
        std::vector<std::pair<int, int>> current;
        detail::monomials_of_degree(n, d - g.degree(), current, 0,
                                    [&](const std::vector<std::pair<int, int>>& pairs) {
                                        out.insert(g.times(Monomial::from_pairs(pairs)));
                                    });
    }
    return minimalize(ideal.vars, std::vector<Monomial>(out.begin(), out.end()));
}

// Componentwise linearity: every degree component from the minimal generator
// degree up has a linear resolution. Components strictly above the maximal
// generator degree stabilize to (previous component) * (all variables); once
// that pattern is reached with a linear previous component the remaining
// components are linear as well, so the scan stops there. The scan is capped
// at max degree + number of variables.
inline bool is_componentwise_linear(const MonomialIdeal& ideal, const FieldTag& field = FieldTag::Q(),
                                    const BettiOptions& opts = {}) {
    if (ideal.is_zero() || ideal.is_unit())
        throw std::invalid_argument("componentwise linearity undefined for zero/unit ideal");
    int lo = ideal.min_gen_degree(), hi = ideal.max_gen_degree();
    int n = static_cast<int>(ideal.vars.size());
    MonomialIdeal prev;
    for (int d = lo; d <= hi + n; ++d) {
        MonomialIdeal comp = component_ideal(ideal, d);
        if (d > hi) {
            std::vector<Monomial> grown;
            for (const auto& g : prev.gens)
                for (int v = 0; v < n; ++v) grown.push_back(g.times(Monomial::variable(v)));
            if (minimalize(ideal.vars, std::move(grown)) == comp) return true;  // stabilized
        }
        if (!comp.is_zero() && !has_linear_resolution(comp, field, opts)) return false;
        prev = std::move(comp);
    }
    return true;
}

// Independent Betti oracle via the Taylor complex with differentials reduced
// modulo the maximal ideal: the entry for dropping a generator survives iff
// the lcm is unchanged. Exponential in the number of generators; capped at 16.
inline BettiTable taylor_betti_oracle(const MonomialIdeal& ideal, const FieldTag& field) {
    if (ideal.is_zero() || ideal.is_unit()) throw std::invalid_argument("Taylor oracle undefined for zero/unit ideal");
    int r = static_cast<int>(ideal.gens.size());
    if (r > 16) throw ResourceError("Taylor oracle limited to 16 generators");
    int n = static_cast<int>(ideal.vars.size());

    std::vector<detail::Multidegree> gens;
    for (const auto& g : ideal.gens) gens.push_back(detail::dense_exponents(g, n));

    std::size_t total = std::size_t{1} << r;
    std::vector<int> strand_of(total, -1);
    std::unordered_map<detail::Multidegree, int, detail::MultidegreeHash> strand_ids;
    std::vector<detail::Multidegree> strand_degree;
    std::vector<std::vector<std::uint32_t>> strand_subsets;
    std::vector<detail::Multidegree> lcms(total);
    for (std::size_t s = 1; s < total; ++s) {
        int low = std::countr_zero(static_cast<std::uint64_t>(s));
        std::size_t rest = s & (s - 1);
        const detail::Multidegree& g = gens[static_cast<std::size_t>(low)];
        if (rest == 0)
            lcms[s] = g;
        else {
            lcms[s] = lcms[rest];
            for (int v = 0; v < n; ++v)
                lcms[s][static_cast<std::size_t>(v)] = std::max(lcms[s][static_cast<std::size_t>(v)], g[static_cast<std::size_t>(v)]);
        }
        auto [it, fresh] = strand_ids.try_emplace(lcms[s], static_cast<int>(strand_degree.size()));
        if (fresh) {
            strand_degree.push_back(lcms[s]);
            strand_subsets.emplace_back();
        }
        strand_of[s] = it->second;
        strand_subsets[static_cast<std::size_t>(it->second)].push_back(static_cast<std::uint32_t>(s));
    }

    BettiTable table;
    table.field = field;
    for (std::size_t sd = 0; sd < strand_degree.size(); ++sd) {
        auto& subsets = strand_subsets[sd];
        int maxsz = 0;
        for (std::uint32_t s : subsets) maxsz = std::max(maxsz, popcount(s));
        std::vector<std::vector<FaceMask>> by_size(static_cast<std::size_t>(maxsz) + 1);
        for (std::uint32_t s : subsets) by_size[static_cast<std::size_t>(popcount(s))].push_back(s);
        for (auto& level : by_size) std::sort(level.begin(), level.end());

        // within-strand boundary: dropping a generator keeps the subset in
        // the strand exactly when the lcm is unchanged
        std::vector<int> ranks(static_cast<std::size_t>(maxsz) + 2, 0);
        for (int k = 2; k <= maxsz; ++k) {
            const auto& rows = by_size[static_cast<std::size_t>(k - 1)];
            const auto& cols = by_size[static_cast<std::size_t>(k)];
            if (rows.empty() || cols.empty()) continue;
            IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            for (std::size_t c = 0; c < cols.size(); ++c) {
                std::uint32_t s = static_cast<std::uint32_t>(cols[c]);
                int sign = 1;
                for (std::uint32_t rest = s; rest;) {
                    int g = std::countr_zero(rest);
                    rest &= rest - 1;
                    std::uint32_t sub = s & ~(1u << g);
                    if (strand_of[sub] == strand_of[s]) {
                        auto it = std::lower_bound(rows.begin(), rows.end(), static_cast<FaceMask>(sub));
                        m.at(static_cast<int>(it - rows.begin()), static_cast<int>(c)) = sign;
                    }
                    sign = -sign;
                }
            }
            ranks[static_cast<std::size_t>(k)] = matrix_rank(std::move(m), field);
        }
        int total_degree = 0;
        for (int v : strand_degree[sd]) total_degree += v;
        for (int k = 1; k <= maxsz; ++k) {
            long long h = static_cast<long long>(by_size[static_cast<std::size_t>(k)].size()) -
                          ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1];
            if (h != 0) table.entries[{k - 1, total_degree}] += h;  // ideal homological index
        }
    }
    return table;
}

}  // namespace idealis

#endif
