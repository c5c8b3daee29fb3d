#ifndef IDEALIS_LINEAR_QUOTIENTS_HPP
#define IDEALIS_LINEAR_QUOTIENTS_HPP

#include <optional>

#include "idealis/ideal_ops.hpp"

namespace idealis {

// A checkable proof that an ordering of the minimal generators has linear
// quotients: for each step ℓ >= 2 the variables generating
// (m_1,...,m_{ℓ-1}) : m_ℓ. Replaying the colon computations must reproduce
// the recorded sets exactly.
struct LinearQuotientsCertificate {
    MonomialIdeal ideal;
    std::vector<int> order;                          // permutation of ideal.gens
    std::vector<std::vector<int>> step_colon_vars;   // entry k holds step ℓ = k + 2
};

struct QuotientStepFailure {
    int index;          // 1-based step ℓ whose colon ideal is not variable-generated
    Monomial offender;  // a non-variable minimal generator of that colon ideal
};

struct QuotientsCheck {
    std::optional<LinearQuotientsCertificate> certificate;
    std::optional<QuotientStepFailure> failure;
};

namespace detail {

// Minimal generators of (prefix) : target, where prefix and target are
// minimal generators of one ideal. Returns the sorted variable list when
// the colon ideal is variable-generated, otherwise a non-variable minimal
// generator as the failure witness.
struct PrefixColon {
    bool variable_generated = false;
    std::vector<int> vars;
    Monomial offender;
};

inline PrefixColon prefix_colon(const std::vector<Monomial>& gens, const std::vector<int>& prefix,
                                const Monomial& target) {
    PrefixColon out;
    std::vector<Monomial> quotients;
    quotients.reserve(prefix.size());
    std::vector<int> vars;
    for (int t : prefix) {
        Monomial q = gens[static_cast<std::size_t>(t)].divide_exact(gens[static_cast<std::size_t>(t)].gcd(target));
        if (auto v = q.as_variable()) vars.push_back(*v);
        quotients.push_back(std::move(q));
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (const auto& q : quotients) {
        bool covered = false;
        for (int v : vars)
            if (q.exponent(v) > 0) {
                covered = true;
                break;
            }
        if (!covered) {
            // find an actual minimal generator below q
            Monomial least = q;
            for (const auto& other : quotients)
                if (other.divides(least) && other.degree() < least.degree()) least = other;
            out.variable_generated = false;
            out.offender = least;
            return out;
        }
    }
    out.variable_generated = true;
    out.vars = std::move(vars);
    return out;
}

}  // namespace detail

// Verifies a proposed order; on success returns the certificate, otherwise
// the first failing step together with a non-variable minimal generator of
// its colon ideal.
inline QuotientsCheck check_linear_quotients_order(const OrderedGenerators& og) {
    const auto& gens = og.ideal.gens;
    if (og.order.size() != gens.size()) throw std::invalid_argument("order must cover all generators");
    {
        std::vector<int> sorted = og.order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k)
            if (sorted[k] != static_cast<int>(k)) throw std::invalid_argument("order must cover all generators exactly once");
    }
    LinearQuotientsCertificate cert{og.ideal, og.order, {}};
    std::vector<int> prefix;
    for (std::size_t l = 0; l < og.order.size(); ++l) {
        if (l > 0) {
            auto colon = detail::prefix_colon(gens, prefix, gens[static_cast<std::size_t>(og.order[l])]);
            if (!colon.variable_generated)
                return {std::nullopt, QuotientStepFailure{static_cast<int>(l) + 1, colon.offender}};
            cert.step_colon_vars.push_back(std::move(colon.vars));
        }
        prefix.push_back(og.order[l]);
    }
    return {std::move(cert), std::nullopt};
}

// Recomputes every step of a certificate and compares the variable sets.
inline bool replay_certificate(const LinearQuotientsCertificate& cert) {
    auto check = check_linear_quotients_order({cert.ideal, cert.order, OrderProvenance::UserGiven});
    return check.certificate.has_value() && check.certificate->step_colon_vars == cert.step_colon_vars;
}

// Greedy placement: repeatedly append the first not-yet-placed generator
// whose colon against the placed prefix is variable-generated (ties broken
// by input order). Sound but not complete; failure is inconclusive.
inline std::optional<LinearQuotientsCertificate> greedy_linear_quotients(const MonomialIdeal& ideal) {
    std::size_t q = ideal.gens.size();
    std::vector<bool> placed(q, false);
    std::vector<int> prefix;
    LinearQuotientsCertificate cert{ideal, {}, {}};
    for (std::size_t step = 0; step < q; ++step) {
        bool advanced = false;
        for (std::size_t g = 0; g < q && !advanced; ++g) {
            if (placed[g]) continue;
            if (step == 0) {
                placed[g] = true;
                prefix.push_back(static_cast<int>(g));
                cert.order.push_back(static_cast<int>(g));
                advanced = true;
                break;
            }
            auto colon = detail::prefix_colon(ideal.gens, prefix, ideal.gens[g]);
            if (colon.variable_generated) {
                placed[g] = true;
                prefix.push_back(static_cast<int>(g));
                cert.order.push_back(static_cast<int>(g));
                cert.step_colon_vars.push_back(std::move(colon.vars));
                advanced = true;
            }
        }
        if (!advanced) return std::nullopt;
    }
    return cert;
}

struct ExhaustiveQuotients {
    std::optional<LinearQuotientsCertificate> certificate;
    bool definitely_none = false;
};

// Complete search over placed-generator sets: whether the colon ideal is
// variable-generated depends only on the set, not the order, so dead sets
// are memoized. Either finds an order or proves none exists. Capped at 20
// generators.
inline ExhaustiveQuotients exhaustive_linear_quotients(const MonomialIdeal& ideal) {
    int q = static_cast<int>(ideal.gens.size());
    if (q > 20) throw ResourceError("exhaustive linear-quotients search limited to 20 generators");
    if (q == 0) throw std::invalid_argument("linear quotients of the zero ideal are undefined");
    if (q == 1) {
        OrderedGenerators og = user_order(ideal);
        return {check_linear_quotients_order(og).certificate, false};
    }

    // placeable(S, g) <=> for every t in S some t' in S has a variable
    // quotient dividing t's quotient; precomputed as bitmask tables
    std::vector<std::vector<std::uint32_t>> divisor_mask(static_cast<std::size_t>(q),
                                                         std::vector<std::uint32_t>(static_cast<std::size_t>(q), 0));
    for (int g = 0; g < q; ++g) {
        std::vector<Monomial> quot(static_cast<std::size_t>(q));
        for (int t = 0; t < q; ++t) {
            if (t == g) continue;
            quot[static_cast<std::size_t>(t)] =
                ideal.gens[static_cast<std::size_t>(t)].divide_exact(ideal.gens[static_cast<std::size_t>(t)].gcd(ideal.gens[static_cast<std::size_t>(g)]));
        }
        for (int t = 0; t < q; ++t) {
            if (t == g) continue;
            std::uint32_t mask = 0;
            for (int u = 0; u < q; ++u) {
                if (u == g) continue;
                if (quot[static_cast<std::size_t>(u)].as_variable() &&
                    quot[static_cast<std::size_t>(u)].divides(quot[static_cast<std::size_t>(t)]))
                    mask |= 1u << u;
            }
            divisor_mask[static_cast<std::size_t>(g)][static_cast<std::size_t>(t)] = mask;
        }
    }
    auto placeable = [&](std::uint32_t s, int g) {
        for (std::uint32_t rest = s; rest;) {
            int t = std::countr_zero(rest);
            rest &= rest - 1;
            if (!(divisor_mask[static_cast<std::size_t>(g)][static_cast<std::size_t>(t)] & s)) return false;
        }
        return true;
    };

    std::uint32_t full = q == 32 ? ~0u : (1u << q) - 1;
    std::unordered_set<std::uint32_t> dead;
    std::vector<int> stack;
    std::function<bool(std::uint32_t)> dfs = [&](std::uint32_t s) -> bool {
        if (s == full) return true;
        for (int g = 0; g < q; ++g) {
            if (s & (1u << g)) continue;
            std::uint32_t next = s | (1u << g);
            if (dead.count(next)) continue;
            if (!placeable(s, g)) continue;
            stack.push_back(g);
            if (dfs(next)) return true;
            stack.pop_back();
            dead.insert(next);
        }
        return false;
    };
    if (!dfs(0)) return {std::nullopt, true};
    OrderedGenerators og{ideal, stack, OrderProvenance::UserGiven};
    auto check = check_linear_quotients_order(og);
    if (!check.certificate) throw std::logic_error("exhaustive search produced an invalid order");
    return {std::move(check.certificate), false};
}

}  // namespace idealis

#endif
