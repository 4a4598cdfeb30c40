#include "tdc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "tdc/family.hpp"
#include "tdc/tree.hpp"

namespace tdc {

namespace {

std::string ahu_encode_rooted(const std::vector<std::vector<int>>& adj, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int u : adj[static_cast<std::size_t>(v)])
        if (u != parent) child_codes.push_back(ahu_encode_rooted(adj, u, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

} // namespace

std::string tree_canonical_form(const Graph& t) {
    if (t.order() == 1) return "V()";
    if (!is_tree(t)) throw std::domain_error("tree_canonical_form: input is not a tree");
    auto profile = analyze_tree(t);
    auto adj = adjacency_lists(t);
    if (!profile.center_is_edge) return "V" + ahu_encode_rooted(adj, profile.center[0], -1);
    std::string a = ahu_encode_rooted(adj, profile.center[0], profile.center[1]);
    std::string b = ahu_encode_rooted(adj, profile.center[1], profile.center[0]);
    if (b < a) std::swap(a, b);
    return "E" + a + b;
}

namespace {

std::vector<Graph> trees_by_prufer(int n) {
    // Every labelled tree once; dedupe to isomorphism classes.
    std::map<std::string, Graph> classes;
    if (n == 1) {
        classes.emplace("V()", Graph(1));
    } else {
        std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
        for (;;) {
            Graph t = prufer_decode(n, seq);
            classes.emplace(tree_canonical_form(t), t);
            int i = n - 3;
            while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) seq[static_cast<std::size_t>(i--)] = 0;
            if (i < 0) break;
            ++seq[static_cast<std::size_t>(i)];
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, t] : classes) out.push_back(std::move(t));
    return out;
}

std::vector<Graph> trees_by_leaf_extension(int n) {
    // Attach one leaf to every vertex of every smaller tree; every tree on n
    // vertices arises this way.
    std::vector<Graph> smaller = all_trees(n - 1, TreeGen::Auto);
    std::map<std::string, Graph> classes;
    for (const Graph& t : smaller) {
        auto base = t.edges();
        for (int v = 0; v < t.order(); ++v) {
            auto edges = base;
            edges.emplace_back(v, t.order());
            Graph ext = Graph::from_edges(n, edges);
            classes.emplace(tree_canonical_form(ext), ext);
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, t] : classes) out.push_back(std::move(t));
    return out;
}

} // namespace

std::vector<Graph> all_trees(int n, TreeGen method) {
    if (n < 1) throw std::invalid_argument("all_trees: n must be >= 1");
    switch (method) {
    case TreeGen::Prufer:
        return trees_by_prufer(n);
    case TreeGen::LeafExtension:
        if (n == 1) return {Graph(1)};
        return trees_by_leaf_extension(n);
    case TreeGen::Auto:
        break;
    }
    return n <= 8 ? trees_by_prufer(n) : trees_by_leaf_extension(n);
}

namespace {

int pair_index(int n, int i, int j) {
    // upper triangle, row-major: (0,1),(0,2),...,(0,n-1),(1,2),...
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

bool mask_connected(int n, std::uint64_t mask) {
    if (n <= 1) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < n; ++v) {
            if (!(frontier >> v & 1)) continue;
            for (int u = 0; u < n; ++u) {
                if (u == v || (seen >> u & 1)) continue;
                int idx = u < v ? pair_index(n, u, v) : pair_index(n, v, u);
                if (mask >> idx & 1) {
                    seen |= std::uint64_t{1} << u;
                    next |= std::uint64_t{1} << u;
                }
            }
        }
        frontier = next;
    }
    return seen == (std::uint64_t{1} << n) - 1;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (mask >> pair_index(n, i, j) & 1) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

std::vector<std::vector<int>> pair_permutations(int n) {
    int pairs = n * (n - 1) / 2;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> maps;
    do {
        std::vector<int> m(static_cast<std::size_t>(pairs));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
                m[static_cast<std::size_t>(pair_index(n, i, j))] =
                    pair_index(n, std::min(a, b), std::max(a, b));
            }
        maps.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

std::uint64_t canonical_code_with_maps(std::uint64_t mask,
                                       const std::vector<std::vector<int>>& maps) {
    std::uint64_t best = ~std::uint64_t{0};
    for (const auto& m : maps) {
        std::uint64_t code = 0;
        std::uint64_t rest = mask;
        while (rest) {
            int idx = std::countr_zero(rest);
            rest &= rest - 1;
            code |= std::uint64_t{1} << m[static_cast<std::size_t>(idx)];
        }
        best = std::min(best, code);
    }
    return best;
}

} // namespace

std::uint64_t graph_canonical_code(const Graph& g) {
    int n = g.order();
    if (n > 8) throw std::invalid_argument("graph_canonical_code: n must be <= 8");
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << pair_index(n, u, v);
    auto maps = pair_permutations(n);
    return canonical_code_with_maps(mask, maps);
}

std::vector<Graph> all_connected_graphs(int n, bool isomorph_free) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("all_connected_graphs: n must be in 1..6");
    auto maps = pair_permutations(n);
    int pairs = n * (n - 1) / 2;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        if (!mask_connected(n, mask)) continue;
        if (isomorph_free && canonical_code_with_maps(mask, maps) != mask) continue;
        out.push_back(graph_from_mask(n, mask));
    }
    return out;
}

} // namespace tdc
