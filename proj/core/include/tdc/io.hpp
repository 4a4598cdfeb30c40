#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tdc/graph.hpp"

namespace tdc {

/// Malformed input; `line` is 1-based (0 when no line applies).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

/// DIMACS coloring format: "c" comments, one "p edge <n> <m>" header, then
/// "e <u> <v>" lines with 1-based endpoints.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_string(const std::string& text);

/// Writes "p edge n m" and each edge once as "e u v" with u < v (1-based),
/// lexicographically ordered.
void write_dimacs(const Graph& g, std::ostream& out);
std::string write_dimacs_string(const Graph& g);

/// JSON edge-list form {"n": int, "edges": [[u,v], ...]} with 0-based
/// endpoints.
Graph read_graph_json(const std::string& text);
std::string write_graph_json(const Graph& g);

/// Reads a graph file, picking the format from the extension
/// (".json" -> JSON, anything else -> DIMACS).
Graph load_graph_file(const std::string& path);

} // namespace tdc
