// Acceptance suite: runs the full reproduction matrix at its production
// sizes and prints one line per criterion. Exit code 0 only when every
// criterion passes.

#include <chrono>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>

#include "idealis/suites.hpp"

using namespace idealis;

namespace {

struct Criterion {
    std::string name;
    std::string description;
    std::vector<std::string> id_prefixes;
    double budget_seconds;
};

bool matches(const std::string& id, const std::vector<std::string>& prefixes) {
    for (const auto& p : prefixes)
        if (id.rfind(p, 0) == 0) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = 1;
    for (int a = 1; a < argc; ++a)
        if (std::strcmp(argv[a], "--seed") == 0 && a + 1 < argc) seed = std::strtoull(argv[a + 1], nullptr, 10);

    SuiteConfig cfg;  // production sizes
    auto start = std::chrono::steady_clock::now();
    SuiteReport report = suite_reproduce(seed, cfg);
    double total_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    const std::vector<Criterion> criteria{
        {"1 sturmfels", "linear quotients, reg(I)=3, reg(I^2)=7, I^2 not linear", {"sturmfels:"}, 60.0},
        {"2 seven-vertex golden", "reg(I(G)^2 : ab) = 3", {"seven-vertex:"}, 10.0},
        {"3 regularity bound", "reg(edge ideal) <= 3 on 100 seeded graphs", {"reg-bound:"}, 300.0},
        {"4 linear resolutions", "I(G)^s linear on 30 seeded graphs", {"linres:"}, 900.0},
        {"5 cover-power orders", "ordered generators pass the quotients check, s <= 3", {"coverpow"}, 300.0},
        {"6 cover-power regularity", "reg((I^v)^s) = 3s or s*maxdeg, homologically", {"coverreg"}, 600.0},
        {"7 oracle equivalence", "betti_table = taylor oracle on 200 ideals, Q and GF(2)", {"oracle:"}, 300.0},
        {"8 property suite",
         "Froberg, polarization, colon bounds, neighborhood bound, unique expressions, minimal products",
         {"froberg:", "polarization:", "reg-add-variable:", "reg-colon-sum:", "neighbor-bound:",
          "c5-unique-expression:", "products-minimal:"},
         600.0},
    };

    bool all_ok = true;
    std::map<std::string, bool> seen;
    for (const auto& crit : criteria) {
        int total = 0, passed = 0;
        double ms = 0.0;
        for (const auto& c : report.cases) {
            if (!matches(c.id, crit.id_prefixes)) continue;
            seen[c.id] = true;
            ++total;
            if (c.pass) ++passed;
            ms += c.ms;
        }
        bool ok = total > 0 && passed == total;
        all_ok = all_ok && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << crit.name << ": " << passed << "/" << total
                  << " cases, " << ms / 1000.0 << " s (budget " << crit.budget_seconds << " s) - "
                  << crit.description << "\n";
        if (!ok)
            for (const auto& c : report.cases)
                if (matches(c.id, crit.id_prefixes) && !c.pass)
                    std::cout << "    failed case " << c.id << " [" << c.anchor << "]: computed " << c.computed
                              << ", expected " << c.expected << "\n";
    }
    for (const auto& c : report.cases)
        if (!seen.count(c.id)) {
            std::cout << "FAIL unmapped case " << c.id << "\n";
            all_ok = false;
        }

    std::ofstream out("acceptance_report.json");
    out << report_to_json(report).dump(2) << "\n";
    std::cout << (all_ok ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << report.cases.size() << " cases, "
              << total_s << " s, seed " << seed << ", report acceptance_report.json)\n";
    return all_ok ? 0 : 1;
}
