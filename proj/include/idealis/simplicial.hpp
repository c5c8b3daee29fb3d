#ifndef IDEALIS_SIMPLICIAL_HPP
#define IDEALIS_SIMPLICIAL_HPP

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "idealis/exact_rank.hpp"

namespace idealis {

using FaceMask = std::uint64_t;

// Abstract simplicial complex on ground set {0..ground-1}, stored by its
// facets (an antichain). The void complex (no faces at all) and the empty
// complex {∅} are distinct values.
struct SimplicialComplex {
    int ground = 0;
    std::vector<FaceMask> facets;
    bool void_complex = false;

    static SimplicialComplex make_void(int ground) { return {ground, {}, true}; }
    static SimplicialComplex empty_complex(int ground) { return {ground, {0}, false}; }

    static SimplicialComplex from_facets(int ground, std::vector<FaceMask> fs) {
        if (fs.empty()) return make_void(ground);
        // keep only maximal faces
        std::vector<FaceMask> maximal;
        for (FaceMask f : fs) {
            bool dominated = false;
            for (FaceMask g : fs)
                if (f != g && (f & ~g) == 0) {
                    dominated = true;
                    break;
                }
            if (!dominated) maximal.push_back(f);
        }
        std::sort(maximal.begin(), maximal.end());
        maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());
        return {ground, std::move(maximal), false};
    }
};

namespace detail {

// faces_by_size[k] = sorted masks with popcount k; faces_by_size[0] = {0}
// when the empty face is present. Returns h[k] = reduced homology rank in
// dimension k-1, for k = 0 .. max size.
inline std::vector<long long> homology_from_faces(const std::vector<std::vector<FaceMask>>& faces_by_size,
                                                  const FieldTag& field) {
    int K = static_cast<int>(faces_by_size.size());
    std::vector<int> ranks(static_cast<std::size_t>(K) + 1, 0);  // ranks[k] = rank of boundary size k -> size k-1
    for (int k = 1; k < K; ++k) {
        const auto& rows = faces_by_size[static_cast<std::size_t>(k - 1)];
        const auto& cols = faces_by_size[static_cast<std::size_t>(k)];
        if (rows.empty() || cols.empty()) continue;
        IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (std::size_t c = 0; c < cols.size(); ++c) {
            FaceMask f = cols[c];
            int sign = 1, pos = 0;
            for (FaceMask rest = f; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                FaceMask sub = f & ~(FaceMask{1} << v);
                auto it = std::lower_bound(rows.begin(), rows.end(), sub);
                if (it != rows.end() && *it == sub)
                    m.at(static_cast<int>(it - rows.begin()), static_cast<int>(c)) = sign;
                sign = -sign;
                ++pos;
            }
        }
        ranks[static_cast<std::size_t>(k)] = matrix_rank(std::move(m), field);
    }
    std::vector<long long> h(static_cast<std::size_t>(K), 0);
    for (int k = 0; k < K; ++k)
        h[static_cast<std::size_t>(k)] = static_cast<long long>(faces_by_size[static_cast<std::size_t>(k)].size()) -
                                         ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k) + 1];
    return h;
}

}  // namespace detail

// Reduced homology ranks by dimension; result[0] is dimension -1. Over the
// rationals the boundary ranks are computed by exact integer elimination,
// over GF(p) by elimination mod p.
inline std::vector<long long> reduced_homology_ranks(const SimplicialComplex& k, const FieldTag& field) {
    if (k.void_complex) return {};
    std::unordered_set<FaceMask> faces;
    for (FaceMask f : k.facets) {
        // enumerate all submasks of f, including 0
        FaceMask sub = f;
        for (;;) {
            faces.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    int maxsz = 0;
    for (FaceMask f : faces) maxsz = std::max(maxsz, popcount(f));
    std::vector<std::vector<FaceMask>> by_size(static_cast<std::size_t>(maxsz) + 1);
    for (FaceMask f : faces) by_size[static_cast<std::size_t>(popcount(f))].push_back(f);
    for (auto& level : by_size) std::sort(level.begin(), level.end());
    return detail::homology_from_faces(by_size, field);
}

}  // namespace idealis

#endif
