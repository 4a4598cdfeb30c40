#include "tdc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace tdc {

Graph read_dimacs(std::istream& in) {
    bool got_header = false;
    int n = 0;
    std::vector<Edge> edges;
    int ln = 0;
    for (std::string line; std::getline(in, line);) {
        ++ln;
        std::istringstream iss(line);
        std::string type;
        if (!(iss >> type)) continue; // blank line
        if (type == "c") continue;
        if (type == "p") {
            if (got_header) throw ParseError(ln, "duplicate problem header");
            std::string fmt;
            long long nn = -1, mm = -1;
            if (!(iss >> fmt >> nn >> mm) || (fmt != "edge" && fmt != "edges" && fmt != "col"))
                throw ParseError(ln, "malformed header, expected 'p edge <n> <m>'");
            if (nn < 0) throw ParseError(ln, "negative vertex count");
            n = static_cast<int>(nn);
            got_header = true;
        } else if (type == "e") {
            if (!got_header) throw ParseError(ln, "edge before problem header");
            long long u = 0, v = 0;
            if (!(iss >> u >> v)) throw ParseError(ln, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(ln, "vertex index out of range: " +
                                         std::to_string(u < 1 || u > n ? u : v));
            if (u == v) throw ParseError(ln, "self-loop at vertex " + std::to_string(u));
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
        } else {
            throw ParseError(ln, "unrecognized line type '" + type + "'");
        }
    }
    if (!got_header) throw ParseError(ln, "missing problem header");
    return Graph::from_edges(n, edges);
}

Graph read_dimacs_string(const std::string& text) {
    std::istringstream in(text);
    return read_dimacs(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
    auto edges = g.edges();
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string write_dimacs_string(const Graph& g) {
    std::ostringstream out;
    write_dimacs(g, out);
    return out.str();
}

Graph read_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError(0, "graph JSON must be {\"n\": int, \"edges\": [[u,v],...]}");
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError(0, "edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edges(n, edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string write_graph_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.order();
    auto arr = nlohmann::json::array();
    for (auto [u, v] : g.edges()) arr.push_back({u, v});
    j["edges"] = arr;
    return j.dump();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return read_graph_json(buf.str());
    return read_dimacs_string(buf.str());
}

} // namespace tdc
