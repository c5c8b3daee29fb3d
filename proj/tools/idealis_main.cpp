// idealis: combinatorial commutative algebra of (C4,2K2)-free graphs.
//
// Exit codes: 0 success, 2 mathematical negative (not recognized, no linear
// resolution, no quotients order, failing suite case), 1 input or resource
// error.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "idealis/suites.hpp"

using namespace idealis;

namespace {

struct CommonArgs {
    std::string graph_path;
    std::string ideal_path;
    int power_s = 1;
    bool use_cover = false;
    std::string field = "q";
    std::string json_out;
    std::size_t cap = 200000;
    int threads = 0;
};

void add_input_flags(CLI::App* cmd, CommonArgs& args, bool with_power = true) {
    cmd->add_option("--graph", args.graph_path, "graph file (edge list)");
    cmd->add_option("--ideal", args.ideal_path, "ideal file (one generator per line)");
    if (with_power) cmd->add_option("--power,-s", args.power_s, "power of the ideal (default 1)");
    cmd->add_flag("--cover", args.use_cover, "use the vertex cover ideal of the graph instead of the edge ideal");
}

void add_output_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--field", args.field, "coefficient field: q or gf2 (default q)");
    cmd->add_option("--json", args.json_out, "write a JSON result to this file ('-' for stdout)");
    cmd->add_option("--cap", args.cap, "lcm-lattice element cap (default 200000)");
    cmd->add_option("--threads", args.threads, "worker threads (default: hardware)");
}

FieldTag field_of(const CommonArgs& args) {
    if (args.field == "q" || args.field == "Q") return FieldTag::Q();
    if (args.field == "gf2" || args.field == "GF2") return FieldTag::GF(2);
    throw CLI::ValidationError("--field must be q or gf2");
}

BettiOptions betti_options(const CommonArgs& args) {
    BettiOptions opts;
    opts.lattice_cap = args.cap;
    opts.threads = args.threads;
    return opts;
}

// ideal files may be in the line format or the JSON form
MonomialIdeal load_ideal_flexible(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ideal file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') return ideal_from_json(Json::parse(text));
    return parse_ideal_text(text);
}

MonomialIdeal load_input_ideal(const CommonArgs& args) {
    if (!args.ideal_path.empty() && !args.graph_path.empty())
        throw CLI::ValidationError("give either --graph or --ideal, not both");
    MonomialIdeal base;
    if (!args.ideal_path.empty()) {
        base = load_ideal_flexible(args.ideal_path);
    } else if (!args.graph_path.empty()) {
        Graph g = load_graph(args.graph_path);
        base = args.use_cover ? cover_ideal(g) : edge_ideal(g);
    } else {
        throw CLI::ValidationError("an input is required: --graph FILE or --ideal FILE");
    }
    if (args.power_s != 1) base = power(base, args.power_s);
    return base;
}

void emit_json(const CommonArgs& args, const Json& j) {
    if (args.json_out.empty()) return;
    if (args.json_out == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(args.json_out);
    if (!out) throw std::runtime_error("cannot write " + args.json_out);
    out << j.dump(2) << "\n";
}

// accepts "a*b" and, for single-character labels, the shorthand "ab"
Monomial parse_monomial_loose(const std::string& text, const std::vector<std::string>& vars) {
    try {
        return parse_monomial(text, vars);
    } catch (const std::invalid_argument&) {
        std::vector<std::pair<int, int>> pairs;
        for (char c : text) {
            auto it = std::find(vars.begin(), vars.end(), std::string(1, c));
            if (it == vars.end()) throw;
            pairs.emplace_back(static_cast<int>(it - vars.begin()), 1);
        }
        return Monomial::from_pairs(std::move(pairs));
    }
}

int print_suite(const SuiteReport& report, const CommonArgs& args) {
    int failures = 0;
    for (const auto& c : report.cases)
        if (!c.pass) ++failures;
    for (const auto& c : report.cases)
        if (!c.pass)
            std::cout << "FAIL " << c.id << " [" << c.anchor << "] computed " << c.computed << ", expected "
                      << c.expected << "\n";
    std::cout << report.suite << ": " << (report.cases.size() - static_cast<std::size_t>(failures)) << "/"
              << report.cases.size() << " cases pass\n";
    emit_json(args, report_to_json(report));
    return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial and homological calculator for edge and cover ideals of (C4,2K2)-free graphs"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string by_text, start_edge, method = "auto";
    bool multigraded = false;
    std::uint64_t seed = 1;

    auto* recognize = app.add_subcommand("recognize", "recognize a (C4,2K2)-free graph and print its partition");
    add_input_flags(recognize, args, false);
    add_output_flags(recognize, args);

    auto* covers = app.add_subcommand("covers", "list the minimal vertex covers");
    add_input_flags(covers, args, false);
    add_output_flags(covers, args);

    auto* betti = app.add_subcommand("betti", "graded Betti table of an ideal");
    add_input_flags(betti, args);
    add_output_flags(betti, args);
    betti->add_flag("--multigraded", multigraded, "also print multigraded entries");

    auto* reg = app.add_subcommand("reg", "Castelnuovo-Mumford regularity of an ideal");
    add_input_flags(reg, args);
    add_output_flags(reg, args);

    auto* pw = app.add_subcommand("power", "minimal generators of a power of an ideal");
    add_input_flags(pw, args);
    add_output_flags(pw, args);

    auto* col = app.add_subcommand("colon", "colon of an ideal by a monomial");
    add_input_flags(col, args);
    add_output_flags(col, args);
    col->add_option("--by", by_text, "monomial to colon by, e.g. a*b")->required();

    auto* linres = app.add_subcommand("linres", "does the ideal have a linear resolution?");
    add_input_flags(linres, args);
    add_output_flags(linres, args);

    auto* linquo = app.add_subcommand("linquo", "search for a linear-quotients order");
    add_input_flags(linquo, args);
    add_output_flags(linquo, args);
    linquo->add_option("--method", method, "greedy, exhaustive or auto (default)");

    auto* coverpow = app.add_subcommand("coverpow", "ordered generators of a cover-ideal power with certificate");
    add_input_flags(coverpow, args);
    add_output_flags(coverpow, args);

    auto* chain = app.add_subcommand("colonchain", "replay the ordered colon-ideal chain for I(G)^s");
    add_input_flags(chain, args);
    add_output_flags(chain, args);
    chain->add_option("--start-edge", start_edge, "force this edge first (e.g. a*b) instead of the V3-first order");

    auto* nbound = app.add_subcommand("neighborbound", "check the vertex neighborhood regularity bound");
    add_input_flags(nbound, args, false);
    add_output_flags(nbound, args);

    auto* suite = app.add_subcommand("suite", "run the full reproduction suite");
    suite->add_option("--seed", seed, "corpus seed (default 1)");
    add_output_flags(suite, args);

    CLI11_PARSE(app, argc, argv);

    try {
        if (recognize->parsed()) {
            Graph g = load_graph(args.graph_path.empty() ? throw CLI::ValidationError("--graph is required")
                                                         : args.graph_path);
            Recognition r = recognize_c4_2k2(g);
            emit_json(args, recognition_to_json(g, r));
            if (!r.free()) {
                std::cout << "not (C4,2K2)-free: induced " << pattern_name(r.witness_kind) << " on";
                for (int v : r.witness) std::cout << " " << g.label(v);
                std::cout << "\n";
                return 2;
            }
            const Partition& p = *r.partition;
            auto print_set = [&](const char* name, VertexMask m) {
                std::cout << name << ":";
                for (const auto& l : mask_to_labels(g, m)) std::cout << " " << l;
                std::cout << "\n";
            };
            print_set("V1", p.v1);
            print_set("V2", p.v2);
            print_set("V3", p.v3);
            if (!p.c5_order.empty()) {
                std::cout << "C5:";
                for (int v : p.c5_order) std::cout << " " << g.label(v);
                std::cout << "\n";
            }
            return 0;
        }

        if (covers->parsed()) {
            if (args.graph_path.empty()) throw CLI::ValidationError("--graph is required");
            Graph g = load_graph(args.graph_path);
            MonomialIdeal cov = cover_ideal(g);
            Recognition r = recognize_c4_2k2(g);
            Json j;
            Json list = Json::array();
            for (const auto& gen : cov.gens) {
                std::cout << monomial_to_string(gen, cov.vars) << "\n";
                list.push_back(monomial_to_string(gen, cov.vars));
            }
            j["covers"] = list;
            if (r.free() && r.partition->v3) {
                Json tags = Json::array();
                for (const auto& [mask, form] : classify_covers(g, *r.partition)) {
                    Json t;
                    t["cover"] = mask_to_labels(g, mask);
                    t["kind"] = form.kind == CoverKind::TypeI ? "TypeI" : "TypeII";
                    Json w = Json::array();
                    for (int v : form.witness) w.push_back(g.label(v));
                    t["witness"] = w;
                    tags.push_back(t);
                }
                j["classification"] = tags;
            }
            emit_json(args, j);
            return 0;
        }

        if (betti->parsed() || reg->parsed() || linres->parsed()) {
            MonomialIdeal ideal = load_input_ideal(args);
            BettiOptions opts = betti_options(args);
            opts.multigraded = multigraded;
            auto result = betti_table(ideal, field_of(args), opts);
            if (reg->parsed()) {
                std::cout << result.table.regularity() << "\n";
                emit_json(args, betti_to_json(ideal, result.table));
                return 0;
            }
            if (linres->parsed()) {
                bool lin = ideal.equigenerated() && result.table.regularity() == ideal.max_gen_degree();
                std::cout << (lin ? "true" : "false") << "\n";
                emit_json(args, betti_to_json(ideal, result.table));
                return lin ? 0 : 2;
            }
            for (const auto& [ij, rank] : result.table.entries)
                if (rank != 0)
                    std::cout << "b(" << ij.first << "," << ij.second << ") = " << rank << "\n";
            std::cout << "reg = " << result.table.regularity() << "\n";
            if (multigraded)
                for (const auto& e : result.multigraded) {
                    std::cout << "b(" << e.i << "; ";
                    bool first = true;
                    for (std::size_t v = 0; v < e.multidegree.size(); ++v) {
                        if (e.multidegree[v] == 0) continue;
                        if (!first) std::cout << "*";
                        first = false;
                        std::cout << ideal.vars[v];
                        if (e.multidegree[v] > 1) std::cout << "^" << e.multidegree[v];
                    }
                    std::cout << ") = " << e.rank << "\n";
                }
            emit_json(args, betti_to_json(ideal, result.table));
            return 0;
        }

        if (pw->parsed()) {
            MonomialIdeal ideal = load_input_ideal(args);
            std::cout << ideal_to_text(ideal);
            emit_json(args, ideal_to_json(ideal));
            return 0;
        }

        if (col->parsed()) {
            MonomialIdeal ideal = load_input_ideal(args);
            Monomial by = parse_monomial_loose(by_text, ideal.vars);
            MonomialIdeal quotient = colon(ideal, by);
            std::cout << ideal_to_text(quotient);
            emit_json(args, ideal_to_json(quotient));
            return 0;
        }

        if (linquo->parsed()) {
            MonomialIdeal ideal = load_input_ideal(args);
            if (method != "greedy" && method != "exhaustive" && method != "auto")
                throw CLI::ValidationError("--method must be greedy, exhaustive or auto");
            std::optional<LinearQuotientsCertificate> cert;
            bool definite_no = false;
            if (method != "exhaustive") cert = greedy_linear_quotients(ideal);
            if (!cert && (method == "exhaustive" || (method == "auto" && ideal.gens.size() <= 20))) {
                auto ex = exhaustive_linear_quotients(ideal);  // hard error above 20 generators
                cert = ex.certificate;
                definite_no = ex.definitely_none;
            }
            if (cert) {
                std::cout << "linear quotients: yes\n";
                for (std::size_t t = 0; t < cert->order.size(); ++t)
                    std::cout << monomial_to_string(ideal.gens[static_cast<std::size_t>(cert->order[t])], ideal.vars)
                              << "\n";
                emit_json(args, certificate_to_json(*cert));
                return 0;
            }
            std::cout << (definite_no ? "linear quotients: no\n" : "linear quotients: not found (inconclusive)\n");
            return 2;
        }

        if (coverpow->parsed()) {
            if (args.graph_path.empty()) throw CLI::ValidationError("--graph is required");
            Graph g = load_graph(args.graph_path);
            Recognition r = recognize_c4_2k2(g);
            if (!r.free()) {
                std::cout << "not (C4,2K2)-free\n";
                return 2;
            }
            OrderedGenerators og = cover_power_order(g, *r.partition, args.power_s);
            auto check = check_linear_quotients_order(og);
            for (std::size_t t = 0; t < og.size(); ++t)
                std::cout << monomial_to_string(og.at(t), og.ideal.vars) << "\n";
            if (check.certificate) emit_json(args, certificate_to_json(*check.certificate));
            return 0;
        }

        if (chain->parsed()) {
            if (args.graph_path.empty()) throw CLI::ValidationError("--graph is required");
            Graph g = load_graph(args.graph_path);
            std::optional<std::string> start;
            if (!start_edge.empty()) start = start_edge;
            SuiteReport report =
                verify_colon_chain(g, args.power_s, start, betti_options(args), args.threads);
            return print_suite(report, args);
        }

        if (nbound->parsed()) {
            if (args.graph_path.empty()) throw CLI::ValidationError("--graph is required");
            Graph g = load_graph(args.graph_path);
            SuiteReport report = verify_neighbor_bound(g, betti_options(args), args.threads);
            return print_suite(report, args);
        }

        if (suite->parsed()) {
            SuiteConfig cfg;
            cfg.lattice_cap = args.cap;
            cfg.threads = args.threads;
            SuiteReport report = suite_reproduce(seed, cfg);
            return print_suite(report, args);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
