#include "tdc/family.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tdc {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

long long param_at(const FamilySpec& spec, std::size_t i) {
    require(i < spec.params.size(),
            family_name(spec.kind) + ": missing parameter " + std::to_string(i + 1));
    return spec.params[i];
}

} // namespace

Graph path_graph(int n) {
    require(n >= 1, "path: order must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle: order must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    require(n >= 1, "complete: order must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph complete_multipartite(const std::vector<long long>& part_sizes) {
    require(!part_sizes.empty(), "multipartite: at least one part required");
    int n = 0;
    for (long long s : part_sizes) {
        require(s >= 1, "multipartite: part sizes must be >= 1");
        n += static_cast<int>(s);
    }
    // Part i occupies labels [offset_i, offset_i + n_i).
    std::vector<int> part_of(static_cast<std::size_t>(n));
    int v = 0;
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        for (long long j = 0; j < part_sizes[p]; ++j) part_of[static_cast<std::size_t>(v++)] = static_cast<int>(p);
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[static_cast<std::size_t>(a)] != part_of[static_cast<std::size_t>(b)])
                edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

Graph wheel_graph(int rim) {
    require(rim >= 3, "wheel: rim length must be >= 3");
    std::vector<Edge> edges = cycle_graph(rim).edges();
    for (int v = 0; v < rim; ++v) edges.emplace_back(v, rim);
    return Graph::from_edges(rim + 1, edges);
}

Graph star_graph(int leaves) {
    require(leaves >= 1, "star: must have >= 1 leaf");
    std::vector<Edge> edges;
    for (int v = 0; v < leaves; ++v) edges.emplace_back(v, leaves);
    return Graph::from_edges(leaves + 1, edges);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    for (;;) {
        std::uint64_t r = rng();
        if (r < limit) return r % bound;
    }
}

Graph prufer_decode(int n, const std::vector<int>& seq) {
    require(n >= 1, "prufer_decode: n must be >= 1");
    require(static_cast<int>(seq.size()) == std::max(0, n - 2),
            "prufer_decode: sequence must have n-2 entries");
    if (n == 1) return Graph(1);
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int x : seq) {
        require(x >= 0 && x < n, "prufer_decode: entry out of range");
        ++degree[static_cast<std::size_t>(x)];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
    std::vector<Edge> edges;
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "random_tree: order must be >= 1");
    std::mt19937_64 rng(seed);
    std::vector<int> seq(static_cast<std::size_t>(std::max(0, n - 2)));
    for (auto& x : seq) x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    return prufer_decode(n, seq);
}

Graph random_graph(int n, long long p_num, long long p_den, std::uint64_t seed) {
    require(n >= 0, "random_graph: order must be >= 0");
    require(p_den >= 1 && p_num >= 0 && p_num <= p_den,
            "random_graph: probability must be a rational in [0,1]");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform_below(rng, static_cast<std::uint64_t>(p_den)) <
                static_cast<std::uint64_t>(p_num))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
    case Family::Path:
        return path_graph(static_cast<int>(param_at(spec, 0)));
    case Family::Cycle:
        return cycle_graph(static_cast<int>(param_at(spec, 0)));
    case Family::Complete:
        return complete_graph(static_cast<int>(param_at(spec, 0)));
    case Family::CompleteMultipartite:
        return complete_multipartite(spec.params);
    case Family::Wheel:
        return wheel_graph(static_cast<int>(param_at(spec, 0)));
    case Family::Star:
        return star_graph(static_cast<int>(param_at(spec, 0)));
    case Family::ComplementCycle: {
        // Explicit rule rather than complement(cycle): i ~ j iff the cyclic
        // distance of i and j is not 1.
        int n = static_cast<int>(param_at(spec, 0));
        require(n >= 3, "complement_cycle: order must be >= 3");
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int d = v - u;
                if (d != 1 && d != n - 1) edges.emplace_back(u, v);
            }
        return Graph::from_edges(n, edges);
    }
    case Family::ComplementPath: {
        int n = static_cast<int>(param_at(spec, 0));
        require(n >= 1, "complement_path: order must be >= 1");
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 2; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }
    case Family::RandomTree:
        return random_tree(static_cast<int>(param_at(spec, 0)),
                           static_cast<std::uint64_t>(param_at(spec, 1)));
    case Family::RandomGraph:
        return random_graph(static_cast<int>(param_at(spec, 0)), param_at(spec, 1),
                            param_at(spec, 2), static_cast<std::uint64_t>(param_at(spec, 3)));
    }
    throw std::invalid_argument("unknown family");
}

std::string family_name(Family kind) {
    switch (kind) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteMultipartite: return "multipartite";
    case Family::Wheel: return "wheel";
    case Family::Star: return "star";
    case Family::ComplementCycle: return "complement_cycle";
    case Family::ComplementPath: return "complement_path";
    case Family::RandomTree: return "random_tree";
    case Family::RandomGraph: return "random_graph";
    }
    return "?";
}

FamilySpec parse_family_spec(const std::string& text) {
    std::string name = text;
    std::vector<long long> params;
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        name = text.substr(0, colon);
        std::string rest = text.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            auto comma = rest.find(',', pos);
            std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                          : comma - pos);
            try {
                std::size_t used = 0;
                params.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::invalid_argument("family parameter is not an integer: '" + tok + "'");
            }
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    for (Family k : {Family::Path, Family::Cycle, Family::Complete, Family::CompleteMultipartite,
                     Family::Wheel, Family::Star, Family::ComplementCycle, Family::ComplementPath,
                     Family::RandomTree, Family::RandomGraph})
        if (family_name(k) == name) return FamilySpec{k, params};
    throw std::invalid_argument("unknown family name: '" + name + "'");
}

std::string describe(const FamilySpec& spec) {
    std::string out = family_name(spec.kind);
    for (std::size_t i = 0; i < spec.params.size(); ++i)
        out += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
    return out;
}

} // namespace tdc
