#include "bpglab/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace bpglab {

Graph read_graph(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    Graph g;
    auto fail = [&](const std::string& msg) {
        throw FormatError("graph input, line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string kind;
        ls >> kind;
        if (kind == "p") {
            if (have_header) fail("duplicate 'p' header");
            int n;
            std::string extra;
            if (!(ls >> n) || n < 0 || (ls >> extra)) fail("bad 'p' header");
            g = Graph(n);
            have_header = true;
        } else if (kind == "e") {
            if (!have_header) fail("'e' before 'p' header");
            int u, v;
            std::string extra;
            if (!(ls >> u >> v) || (ls >> extra)) fail("bad 'e' line");
            if (u < 1 || v <= u || v > g.vertex_count()) fail("edge endpoints out of order or range");
            if (g.has_edge(u, v)) fail("duplicate edge");
            g.add_edge(u, v);
        } else {
            fail("unknown line kind '" + kind + "'");
        }
    }
    if (!have_header) {
        lineno = 0;
        fail("missing 'p' header");
    }
    return g;
}

Graph read_graph_file(const std::string& filename) {
    std::ifstream in(filename);
    if (!in) throw FormatError("cannot open '" + filename + "'");
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

void write_graph_file(const std::string& filename, const Graph& g) {
    std::ofstream out(filename);
    if (!out) throw FormatError("cannot open '" + filename + "' for writing");
    write_graph(out, g);
}

std::string to_text(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

Graph from_text(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

}  // namespace bpglab
