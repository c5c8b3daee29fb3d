#ifndef IDEALIS_GRAPH_IO_HPP
#define IDEALIS_GRAPH_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "idealis/graph.hpp"

namespace idealis {

inline bool valid_label(const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char c : s)
        if (!(std::isalnum(c) || c == '_')) return false;
    return true;
}

// Text format: one edge per line as two whitespace-separated labels,
// '#' starts a comment line, isolated vertices as "vertex <label>".
inline Graph parse_graph_text(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a) || a[0] == '#') continue;
        if (a == "vertex") {
            if (!(ls >> b) || !valid_label(b))
                throw std::invalid_argument("graph line " + std::to_string(lineno) + ": expected 'vertex <label>'");
            vertices.push_back(b);
            continue;
        }
        if (!(ls >> b) || (ls >> extra) || !valid_label(a) || !valid_label(b))
            throw std::invalid_argument("graph line " + std::to_string(lineno) + ": expected two labels");
        edges.emplace_back(a, b);
    }
    return Graph::from_edges(vertices, edges);
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str());
}

// Canonical serialization: sorted edge lines, then isolated vertices.
inline std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out << "vertex " << g.label(v) << '\n';
    return out.str();
}

inline std::string graph_hash(const Graph& g) { return fnv1a_hex(graph_to_text(g)); }

}  // namespace idealis

#endif
