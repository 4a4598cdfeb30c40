#include "tdc/tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdc {

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw std::invalid_argument("bfs_distances: source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
    std::vector<int> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        const VertexSet& nb = g.neighbors(u);
        for (int v = nb.first(); v != -1; v = nb.next(v))
            if (dist[static_cast<std::size_t>(v)] == kUnreachable) {
                dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

int eccentricity(const Graph& g, int v) {
    auto dist = bfs_distances(g, v);
    int ecc = 0;
    for (int d : dist) {
        if (d == kUnreachable) throw std::domain_error("eccentricity: graph is disconnected");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

TreeProfile analyze_tree(const Graph& g) {
    int n = g.order();
    if (n < 2 || !is_tree(g)) throw std::domain_error("analyze_tree: input is not a tree on >= 2 vertices");

    TreeProfile p;
    p.leaves = VertexSet(n);
    p.supports = VertexSet(n);
    p.sigma.assign(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) p.leaves.set(v);
    for (int u = p.leaves.first(); u != -1; u = p.leaves.next(u)) {
        int w = g.neighbors(u).first();
        if (g.degree(w) > 1) {
            p.supports.set(w);
            p.sigma[static_cast<std::size_t>(u)] = w;
        }
    }
    p.leaf_count = p.leaves.count();
    p.support_count = p.supports.count();

    // Double BFS gives the diameter of a tree exactly.
    auto d0 = bfs_distances(g, 0);
    int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = bfs_distances(g, far);
    p.diameter = *std::max_element(d1.begin(), d1.end());
    p.radius = (p.diameter + 1) / 2;

    // Iterative leaf removal; a tree ends at one vertex or one edge.
    std::vector<int> deg(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
    VertexSet alive = VertexSet::full(n);
    int alive_count = n;
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] <= 1) frontier.push_back(v);
    while (alive_count > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            alive.reset(v);
            --alive_count;
            const VertexSet& nb = g.neighbors(v);
            for (int u = nb.first(); u != -1; u = nb.next(u))
                if (alive.test(u) && --deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
        }
        frontier = std::move(next);
    }
    auto rest = alive.to_vector();
    if (rest.size() == 1) {
        p.center_is_edge = false;
        p.center = {rest[0], -1};
    } else {
        p.center_is_edge = true;
        p.center = {rest[0], rest[1]};
    }
    return p;
}

} // namespace tdc
