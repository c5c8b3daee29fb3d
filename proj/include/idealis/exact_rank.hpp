#ifndef IDEALIS_EXACT_RANK_HPP
#define IDEALIS_EXACT_RANK_HPP

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <vector>

#include "idealis/util.hpp"

namespace idealis {

struct FieldTag {
    bool rationals = true;
    int p = 0;

    static FieldTag Q() { return {true, 0}; }
    static FieldTag GF(int prime) { return {false, prime}; }

    std::string name() const { return rationals ? "Q" : "GF" + std::to_string(p); }
    bool operator==(const FieldTag& o) const { return rationals == o.rationals && (rationals || p == o.p); }
};

// Dense row-major integer matrix; boundary matrices here are small and
// start with entries in {-1, 0, 1}.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}
    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
    long long get(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
};

namespace detail {

constexpr long long kEntryLimit = (1LL << 62);

inline long long checked(__int128 v) {
    if (v >= kEntryLimit || v <= -kEntryLimit) throw ResourceError("integer overflow in exact rank elimination");
    return static_cast<long long>(v);
}

inline void normalize_row(IntMatrix& m, int r, int from_col) {
    long long g = 0;
    for (int c = from_col; c < m.cols; ++c) g = std::gcd(g, std::abs(m.get(r, c)));
    if (g > 1)
        for (int c = from_col; c < m.cols; ++c) m.at(r, c) /= g;
}

}  // namespace detail

// Exact rank over the rationals by integer-preserving elimination. Rows are
// rescaled by their content and pivots are chosen with minimal absolute
// value, which keeps entries small; any overflow throws instead of giving a
// wrong rank.
inline int rank_over_q(IntMatrix m) {
    int rank = 0;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        // repeatedly reduce the column with the smallest entry until one nonzero remains
        for (;;) {
            int piv = -1;
            long long best = 0;
            for (int r = row; r < m.rows; ++r) {
                long long v = std::abs(m.get(r, col));
                if (v != 0 && (piv == -1 || v < best)) {
                    piv = r;
                    best = v;
                }
            }
            if (piv == -1) break;
            if (piv != row)
                for (int c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
            long long pv = m.get(row, col);
            bool eliminated = true;
            for (int r = row + 1; r < m.rows; ++r) {
                long long v = m.get(r, col);
                if (v == 0) continue;
                long long q = v / pv;  // truncated quotient; leaves remainder |v mod pv| < |pv|
                if (q != 0) {
                    for (int c = col; c < m.cols; ++c)
                        m.at(r, c) = detail::checked(static_cast<__int128>(m.get(r, c)) -
                                                     static_cast<__int128>(q) * m.get(row, c));
                    detail::normalize_row(m, r, col);
                }
                if (m.get(r, col) != 0) eliminated = false;
            }
            if (eliminated) {
                ++rank;
                ++row;
                break;
            }
        }
    }
    return rank;
}

inline int rank_mod_p(IntMatrix m, int p) {
    if (p < 2) throw std::invalid_argument("modulus must be a prime >= 2");
    auto norm = [&](long long v) {
        long long r = v % p;
        return r < 0 ? r + p : r;
    };
    for (auto& v : m.a) v = norm(v);
    int rank = 0, row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = -1;
        for (int r = row; r < m.rows; ++r)
            if (m.get(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv == -1) continue;
        if (piv != row)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
        // modular inverse of the pivot by extended euclid
        long long a = m.get(row, col), b = p, x0 = 1, x1 = 0;
        while (b) {
            long long q = a / b;
            a -= q * b;
            std::swap(a, b);
            x0 -= q * x1;
            std::swap(x0, x1);
        }
        long long inv = norm(x0);
        for (int c = col; c < m.cols; ++c) m.at(row, c) = norm(m.get(row, c) * inv % p);
        for (int r = row + 1; r < m.rows; ++r) {
            long long f = m.get(r, col);
            if (f == 0) continue;
            for (int c = col; c < m.cols; ++c) m.at(r, c) = norm(m.get(r, c) - f * m.get(row, c) % p);
        }
        ++rank;
        ++row;
    }
    return rank;
}

inline int matrix_rank(IntMatrix m, const FieldTag& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return field.rationals ? rank_over_q(std::move(m)) : rank_mod_p(std::move(m), field.p);
}

}  // namespace idealis

#endif
