#include "drg/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace drg {

Graph read_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    long declared_v = -1, declared_e = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (declared_v != -1) throw ParseError("duplicate problem line", lineno);
            std::string fmt;
            if (!(ls >> fmt >> declared_v >> declared_e) || fmt != "edge")
                throw ParseError("malformed problem line, expected 'p edge V E'", lineno);
            if (declared_v < 1) throw ParseError("vertex count must be positive", lineno);
            if (declared_e < 0) throw ParseError("negative edge count", lineno);
            continue;
        }
        if (tag == "e") {
            if (declared_v == -1) throw ParseError("edge line before problem line", lineno);
            long u, w;
            if (!(ls >> u >> w)) throw ParseError("malformed edge line", lineno);
            if (u < 1 || u > declared_v || w < 1 || w > declared_v)
                throw ParseError("edge endpoint out of range", lineno);
            if (u == w) throw ParseError("loop edge", lineno);
            edges.emplace_back(static_cast<int>(std::min(u, w)) - 1,
                               static_cast<int>(std::max(u, w)) - 1);
            continue;
        }
        throw ParseError("unrecognized line tag '" + tag + "'", lineno);
    }
    if (declared_v == -1) throw ParseError("missing problem line", lineno);
    if (static_cast<long>(edges.size()) != declared_e)
        throw ParseError("edge count mismatch: declared " + std::to_string(declared_e) +
                             ", found " + std::to_string(edges.size()),
                         lineno);
    // Duplicate detection (either orientation) happens in the graph factory;
    // re-wrap its complaint with a parse error for uniform reporting.
    try {
        return Graph::from_edges(static_cast<int>(declared_v), edges);
    } catch (const BadParams& e) {
        throw ParseError(e.what(), lineno);
    }
}

Graph read_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    return read_dimacs(in);
}

std::string write_dimacs(const Graph& g, const std::vector<std::string>& comments) {
    std::ostringstream out;
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p edge " << g.order() << " " << g.size() << "\n";
    for (const auto& [u, w] : g.edges()) out << "e " << u + 1 << " " << w + 1 << "\n";
    return out.str();
}

void write_dimacs_file(const Graph& g, const std::string& path,
                       const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open file for writing: " + path);
    out << write_dimacs(g, comments);
}

}  // namespace drg
