#ifndef IDEALIS_SERIALIZE_HPP
#define IDEALIS_SERIALIZE_HPP

#include "json.hpp"

#include "idealis/betti.hpp"
#include "idealis/graph.hpp"
#include "idealis/linear_quotients.hpp"

namespace idealis {

using Json = nlohmann::ordered_json;

// {"vars":[...], "gens":[[[var,exp],...],...]}
inline Json ideal_to_json(const MonomialIdeal& i) {
    Json j;
    j["vars"] = i.vars;
    Json gens = Json::array();
    for (const auto& g : i.gens) {
        Json gen = Json::array();
        for (const auto& [v, e] : g.exponents()) gen.push_back({i.vars[static_cast<std::size_t>(v)], e});
        gens.push_back(gen);
    }
    j["gens"] = gens;
    return j;
}

inline MonomialIdeal ideal_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<Monomial> gens;
    for (const auto& gen : j.at("gens")) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& factor : gen) {
            std::string name = factor.at(0).get<std::string>();
            int exp = factor.at(1).get<int>();
            auto it = std::find(vars.begin(), vars.end(), name);
            if (it == vars.end()) throw std::invalid_argument("ideal json references unknown variable " + name);
            pairs.emplace_back(static_cast<int>(it - vars.begin()), exp);
        }
        gens.push_back(Monomial::from_pairs(std::move(pairs)));
    }
    return minimalize(std::move(vars), std::move(gens));
}

// {"field":"Q"|"GF2", "entries":[[i,j,rank],...], "reg":r, "linear":bool}
inline Json betti_to_json(const BettiTable& t, bool equigenerated, int gen_degree) {
    Json j;
    j["field"] = t.field.name();
    Json entries = Json::array();
    for (const auto& [ij, rank] : t.entries)
        if (rank != 0) entries.push_back({ij.first, ij.second, rank});
    j["entries"] = entries;
    j["reg"] = t.regularity();
    j["linear"] = equigenerated && t.regularity() == gen_degree;
    return j;
}

inline Json betti_to_json(const MonomialIdeal& i, const BettiTable& t) {
    return betti_to_json(t, i.equigenerated(), i.max_gen_degree());
}

// {"order":[gen,...], "steps":[{"index":l, "colon_vars":[...]},...]}
inline Json certificate_to_json(const LinearQuotientsCertificate& cert) {
    Json j;
    Json order = Json::array();
    for (int idx : cert.order)
        order.push_back(monomial_to_string(cert.ideal.gens[static_cast<std::size_t>(idx)], cert.ideal.vars));
    j["order"] = order;
    Json steps = Json::array();
    for (std::size_t k = 0; k < cert.step_colon_vars.size(); ++k) {
        Json step;
        step["index"] = k + 2;
        Json vars = Json::array();
        for (int v : cert.step_colon_vars[k]) vars.push_back(cert.ideal.vars[static_cast<std::size_t>(v)]);
        step["colon_vars"] = vars;
        steps.push_back(step);
    }
    j["steps"] = steps;
    return j;
}

inline Json partition_to_json(const Graph& g, const Partition& p) {
    Json j;
    j["v1"] = mask_to_labels(g, p.v1);
    j["v2"] = mask_to_labels(g, p.v2);
    j["v3"] = mask_to_labels(g, p.v3);
    Json cyc = Json::array();
    for (int v : p.c5_order) cyc.push_back(g.label(v));
    j["c5_order"] = cyc;
    return j;
}

inline Json recognition_to_json(const Graph& g, const Recognition& r) {
    Json j;
    j["free"] = r.free();
    if (r.free()) {
        j["partition"] = partition_to_json(g, *r.partition);
    } else {
        Json w;
        w["pattern"] = pattern_name(r.witness_kind);
        Json vs = Json::array();
        for (int v : r.witness) vs.push_back(g.label(v));
        w["vertices"] = vs;
        j["witness"] = w;
    }
    return j;
}

}  // namespace idealis

#endif
