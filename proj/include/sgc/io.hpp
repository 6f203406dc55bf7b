#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "sgc/graph.hpp"

namespace sgc {

// Graph text format:
//   p sgc <n> <m>
//   e <u> <v>        (m lines, 0-based, duplicates create parallel edges)
//   c ...            (comments, ignored anywhere)
// The writer emits edges in id order, so write/read round-trips bit-exact.

inline Graph read_graph(std::istream& in) {
    std::string line;
    bool got_header = false;
    int n = 0, m = 0, edges_read = 0;
    Graph g;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream iss(line);
        std::string tag;
        if (!(iss >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (got_header) throw input_error("line " + std::to_string(lineno) + ": duplicate header");
            std::string fmt;
            if (!(iss >> fmt >> n >> m) || fmt != "sgc")
                throw input_error("line " + std::to_string(lineno) + ": expected 'p sgc <n> <m>'");
            if (n < 0 || m < 0)
                throw input_error("line " + std::to_string(lineno) + ": negative counts");
            g = Graph(n);
            got_header = true;
        } else if (tag == "e") {
            if (!got_header)
                throw input_error("line " + std::to_string(lineno) + ": edge before header");
            Vertex u, v;
            if (!(iss >> u >> v))
                throw input_error("line " + std::to_string(lineno) + ": expected 'e <u> <v>'");
            try {
                g.add_edge(u, v);
            } catch (const input_error& e) {
                throw input_error("line " + std::to_string(lineno) + ": " + e.what());
            }
            ++edges_read;
        } else {
            throw input_error("line " + std::to_string(lineno) + ": unknown line type '" + tag + "'");
        }
    }
    if (!got_header) throw input_error("missing 'p sgc' header");
    if (edges_read != m)
        throw input_error("header declares " + std::to_string(m) + " edges, file has " +
                          std::to_string(edges_read));
    return g;
}

inline Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "' for reading");
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g) {
    out << "p sgc " << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

inline std::string to_string(const Graph& g) {
    std::ostringstream oss;
    write_graph(oss, g);
    return oss.str();
}

inline void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    write_graph(out, g);
}

}  // namespace sgc
