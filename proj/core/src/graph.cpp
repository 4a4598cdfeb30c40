#include "tdc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tdc {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), VertexSet(n)) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[static_cast<std::size_t>(u)].set(v);
    adj_[static_cast<std::size_t>(v)].set(u);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop forbidden at vertex " + std::to_string(u));
        g.add_edge_unchecked(u, v);
    }
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int Graph::size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_isolated_vertex() const {
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 0) return true;
    return false;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v))
            out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c.add_edge_unchecked(u, v);
    return c;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    std::vector<Edge> edges;
    for (int u = 0; u < ng; ++u)
        for (int x = 0; x < nh; ++x) {
            int a = u * nh + x;
            for (int y = h.neighbors(x).next(x); y != -1; y = h.neighbors(x).next(y))
                edges.emplace_back(a, u * nh + y);
            for (int v = g.neighbors(u).next(u); v != -1; v = g.neighbors(u).next(v))
                edges.emplace_back(a, v * nh + x);
        }
    return Graph::from_edges(ng * nh, edges);
}

Graph add_universal_vertex(const Graph& g) {
    int n = g.order();
    Graph out(n + 1);
    for (auto [u, v] : g.edges()) out.add_edge_unchecked(u, v);
    for (int v = 0; v < n; ++v) out.add_edge_unchecked(v, n);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int off = g.order();
    std::vector<Edge> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + off, v + off);
    return Graph::from_edges(off + h.order(), edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    int k = static_cast<int>(vertices.size());
    for (int i = 0; i < k; ++i) {
        if (vertices[static_cast<std::size_t>(i)] < 0 ||
            vertices[static_cast<std::size_t>(i)] >= g.order())
            throw std::invalid_argument("induced_subgraph: vertex out of range");
        if (i > 0 && vertices[static_cast<std::size_t>(i - 1)] >= vertices[static_cast<std::size_t>(i)])
            throw std::invalid_argument("induced_subgraph: vertices must be strictly increasing");
    }
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]))
                edges.emplace_back(i, j);
    return Graph::from_edges(k, edges);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<std::vector<int>> comps;
    VertexSet seen(n);
    for (int s = 0; s < n; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp{s};
        seen.set(s);
        for (std::size_t head = 0; head < comp.size(); ++head) {
            const VertexSet& nb = g.neighbors(comp[head]);
            for (int v = nb.first(); v != -1; v = nb.next(v))
                if (!seen.test(v)) {
                    seen.set(v);
                    comp.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || connected_components(g).size() == 1;
}

bool is_complete_bipartite(const Graph& g) {
    int n = g.order();
    if (n == 0 || !is_connected(g)) return false;
    // 2-colour by BFS; a complete bipartite graph is connected, so the
    // bipartition (if any) is unique.
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{0};
    side[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        const VertexSet& nb = g.neighbors(u);
        for (int v = nb.first(); v != -1; v = nb.next(v)) {
            if (side[static_cast<std::size_t>(v)] == -1) {
                side[static_cast<std::size_t>(v)] = 1 - side[static_cast<std::size_t>(u)];
                queue.push_back(v);
            } else if (side[static_cast<std::size_t>(v)] == side[static_cast<std::size_t>(u)]) {
                return false;
            }
        }
    }
    long long a = std::count(side.begin(), side.end(), 0);
    long long b = n - a;
    return static_cast<long long>(g.size()) == a * b;
}

bool is_subgraph_of(const Graph& h, const Graph& g) {
    if (h.order() > g.order()) return false;
    for (auto [u, v] : h.edges())
        if (!g.has_edge(u, v)) return false;
    return true;
}

} // namespace tdc
