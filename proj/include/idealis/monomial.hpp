#ifndef IDEALIS_MONOMIAL_HPP
#define IDEALIS_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "idealis/util.hpp"

namespace idealis {

// Monomial as a sparse exponent vector over variable indices. Entries are
// strictly positive and sorted by variable; the total degree is cached.
class Monomial {
public:
    Monomial() = default;

    static Monomial one() { return Monomial(); }

    static Monomial variable(int v) {
        Monomial m;
        m.exps_.emplace_back(v, 1);
        m.degree_ = 1;
        return m;
    }

    static Monomial from_pairs(std::vector<std::pair<int, int>> pairs) {
        std::sort(pairs.begin(), pairs.end());
        Monomial m;
        for (auto& [v, e] : pairs) {
            if (e < 0) throw std::invalid_argument("negative exponent");
            if (e == 0) continue;
            if (!m.exps_.empty() && m.exps_.back().first == v)
                m.exps_.back().second += e;
            else
                m.exps_.emplace_back(v, e);
            m.degree_ += e;
        }
        return m;
    }

    const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
    int degree() const { return degree_; }
    bool is_one() const { return exps_.empty(); }

    int exponent(int v) const {
        auto it = std::lower_bound(exps_.begin(), exps_.end(), std::make_pair(v, 0));
        if (it == exps_.end() || it->first != v) return 0;
        return it->second;
    }

    std::optional<int> as_variable() const {
        if (exps_.size() == 1 && exps_[0].second == 1) return exps_[0].first;
        return std::nullopt;
    }

    bool divides(const Monomial& o) const {
        if (degree_ > o.degree_) return false;
        std::size_t j = 0;
        for (const auto& [v, e] : exps_) {
            while (j < o.exps_.size() && o.exps_[j].first < v) ++j;
            if (j == o.exps_.size() || o.exps_[j].first != v || o.exps_[j].second < e) return false;
        }
        return true;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < exps_.size() || j < o.exps_.size()) {
            if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first))
                r.exps_.push_back(exps_[i++]);
            else if (i == exps_.size() || o.exps_[j].first < exps_[i].first)
                r.exps_.push_back(o.exps_[j++]);
            else {
                r.exps_.emplace_back(exps_[i].first, exps_[i].second + o.exps_[j].second);
                ++i;
                ++j;
            }
        }
        r.degree_ = degree_ + o.degree_;
        return r;
    }

    // quotient this / o, requires o | this
    Monomial divide_exact(const Monomial& o) const {
        Monomial r;
        std::size_t j = 0;
        for (const auto& [v, e] : exps_) {
            int sub = 0;
            while (j < o.exps_.size() && o.exps_[j].first < v) ++j;
            if (j < o.exps_.size() && o.exps_[j].first == v) sub = o.exps_[j].second;
            if (sub > e) throw std::invalid_argument("monomial division is not exact");
            if (e - sub > 0) {
                r.exps_.emplace_back(v, e - sub);
                r.degree_ += e - sub;
            }
        }
        if (o.degree_ + r.degree_ != degree_) throw std::invalid_argument("monomial division is not exact");
        return r;
    }

    Monomial gcd(const Monomial& o) const {
        Monomial r;
        std::size_t j = 0;
        for (const auto& [v, e] : exps_) {
            while (j < o.exps_.size() && o.exps_[j].first < v) ++j;
            if (j < o.exps_.size() && o.exps_[j].first == v) {
                int m = std::min(e, o.exps_[j].second);
                r.exps_.emplace_back(v, m);
                r.degree_ += m;
            }
        }
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < exps_.size() || j < o.exps_.size()) {
            if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first))
                r.exps_.push_back(exps_[i++]);
            else if (i == exps_.size() || o.exps_[j].first < exps_[i].first)
                r.exps_.push_back(o.exps_[j++]);
            else {
                r.exps_.emplace_back(exps_[i].first, std::max(exps_[i].second, o.exps_[j].second));
                ++i;
                ++j;
            }
        }
        r.degree_ = 0;
        for (const auto& [v, e] : r.exps_) r.degree_ += e;
        return r;
    }

    Monomial pow(int k) const {
        if (k < 0) throw std::invalid_argument("negative power");
        Monomial r;
        if (k == 0) return r;
        r.exps_ = exps_;
        for (auto& [v, e] : r.exps_) e *= k;
        r.degree_ = degree_ * k;
        return r;
    }

    bool squarefree() const {
        for (const auto& [v, e] : exps_)
            if (e > 1) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // lex comparison with smaller variable index more significant;
    // returns <0, 0, >0 as this <lex, ==, >lex other
    int compare_lex(const Monomial& o) const {
        std::size_t i = 0, j = 0;
        while (i < exps_.size() || j < o.exps_.size()) {
            int va = i < exps_.size() ? exps_[i].first : INT32_MAX;
            int vb = j < o.exps_.size() ? o.exps_[j].first : INT32_MAX;
            if (va < vb) return 1;       // this has positive exponent where other has 0
            if (vb < va) return -1;
            if (exps_[i].second != o.exps_[j].second) return exps_[i].second < o.exps_[j].second ? -1 : 1;
            ++i;
            ++j;
        }
        return 0;
    }

    std::size_t hash() const {
        std::size_t h = 1469598103934665603ULL;
        for (const auto& [v, e] : exps_) {
            h ^= static_cast<std::size_t>(v) * 0x9e3779b97f4a7c15ULL + static_cast<std::size_t>(e);
            h *= 1099511628211ULL;
        }
        return h;
    }

private:
    std::vector<std::pair<int, int>> exps_;
    int degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// canonical generator order: degree ascending, then lex descending
inline bool canonical_gen_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.compare_lex(b) > 0;
}

// Monomial ideal over a fixed ordered variable list. Generators are always
// stored as the unique minimal generating set in canonical order. The zero
// ideal has no generators; the unit ideal's single generator is 1.
struct MonomialIdeal {
    std::vector<std::string> vars;
    std::vector<Monomial> gens;

    bool is_zero() const { return gens.empty(); }
    bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens)
            if (g.divides(m)) return true;
        return false;
    }

    int max_gen_degree() const {
        int d = 0;
        for (const auto& g : gens) d = std::max(d, g.degree());
        return d;
    }

    int min_gen_degree() const {
        int d = INT32_MAX;
        for (const auto& g : gens) d = std::min(d, g.degree());
        return gens.empty() ? 0 : d;
    }

    bool equigenerated() const {
        return !gens.empty() && min_gen_degree() == max_gen_degree();
    }

    bool operator==(const MonomialIdeal& o) const { return vars == o.vars && gens == o.gens; }
};

// Unique minimal generating set: drop duplicates and any monomial that a
// distinct generator divides. Idempotent and independent of input order.
inline MonomialIdeal minimalize(std::vector<std::string> vars, std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_gen_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const auto& g : gens) {
        bool divisible = false;
        for (const auto& m : minimal) {
            if (m.degree() >= g.degree()) break;  // sorted by degree; equal degrees never divide
            if (m.divides(g)) {
                divisible = true;
                break;
            }
        }
        if (!divisible) minimal.push_back(g);
    }
    return MonomialIdeal{std::move(vars), std::move(minimal)};
}

inline std::string monomial_to_string(const Monomial& m, const std::vector<std::string>& vars) {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [v, e] : m.exponents()) {
        if (!first) out << '*';
        first = false;
        out << vars[static_cast<std::size_t>(v)];
        if (e > 1) out << '^' << e;
    }
    return out.str();
}

inline std::string ideal_to_text(const MonomialIdeal& i) {
    std::ostringstream out;
    for (const auto& g : i.gens) out << monomial_to_string(g, i.vars) << '\n';
    return out.str();
}

inline std::string ideal_hash(const MonomialIdeal& i) {
    std::ostringstream out;
    for (const auto& v : i.vars) out << v << ' ';
    out << '\n' << ideal_to_text(i);
    return fnv1a_hex(out.str());
}

namespace detail {

inline Monomial parse_monomial_tokens(const std::string& text, std::vector<std::string>& vars,
                                      bool allow_new_vars) {
    // factors separated by '*', each "name" or "name^exp"
    std::vector<std::pair<int, int>> pairs;
    std::size_t pos = 0;
    if (text == "1") return Monomial::one();
    while (pos < text.size()) {
        std::size_t star = text.find('*', pos);
        std::string factor = text.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        pos = star == std::string::npos ? text.size() : star + 1;
        std::size_t caret = factor.find('^');
        std::string name = factor.substr(0, caret);
        int exp = 1;
        if (caret != std::string::npos) {
            try {
                exp = std::stoi(factor.substr(caret + 1));
            } catch (...) {
                throw std::invalid_argument("bad exponent in monomial: " + text);
            }
        }
        if (name.empty() || exp < 1) throw std::invalid_argument("bad factor in monomial: " + text);
        auto it = std::find(vars.begin(), vars.end(), name);
        int idx;
        if (it == vars.end()) {
            if (!allow_new_vars) throw std::invalid_argument("unknown variable: " + name);
            vars.push_back(name);
            idx = static_cast<int>(vars.size()) - 1;
        } else {
            idx = static_cast<int>(it - vars.begin());
        }
        pairs.emplace_back(idx, exp);
    }
    return Monomial::from_pairs(std::move(pairs));
}

}  // namespace detail

inline Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
    std::vector<std::string> copy = vars;
    return detail::parse_monomial_tokens(text, copy, false);
}

// Text format: one generator per line as a product like "x1^2*x3".
// Variables are collected from the generators and ordered naturally.
inline MonomialIdeal parse_ideal_text(const std::string& text) {
    std::vector<std::string> names;
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        lines.push_back(tok);
        std::vector<std::string> tmp = names;
        detail::parse_monomial_tokens(tok, tmp, true);
        names = std::move(tmp);
    }
    std::sort(names.begin(), names.end(), NaturalLess{});
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<Monomial> gens;
    for (const auto& l : lines) gens.push_back(parse_monomial(l, names));
    return minimalize(names, std::move(gens));
}

inline MonomialIdeal load_ideal(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ideal file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal_text(buf.str());
}

}  // namespace idealis

#endif
