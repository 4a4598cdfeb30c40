#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tdc/vertex_set.hpp"

namespace tdc {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Adjacency is one VertexSet per vertex; no self-loops, symmetric by
/// construction. Degrees and degree extremes are always derived on demand.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one. Throws std::invalid_argument on an
    /// out-of-range endpoint or a self-loop.
    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }

    /// Number of edges.
    int size() const;

    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].count(); }

    /// Minimum degree. Zero on the empty graph.
    int min_degree() const;

    /// Maximum degree. Zero on the empty graph.
    int max_degree() const;

    bool has_isolated_vertex() const;

    /// Edge list with u < v, ordered lexicographically.
    std::vector<Edge> edges() const;

private:
    friend Graph complement(const Graph&);
    friend Graph add_universal_vertex(const Graph&);
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// Same vertex set, edge iff non-edge. Involution on edge sets.
Graph complement(const Graph& g);

/// Cartesian product: (u,x)~(v,y) iff (u=v and x~y) or (x=y and u~v).
/// Vertex (u,x) gets index u*|V(h)| + x.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Appends vertex n adjacent to all of 0..n-1.
Graph add_universal_vertex(const Graph& g);

/// Disjoint union; vertices of h are relabelled by +g.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// Subgraph induced by `vertices` (must be strictly increasing, in range);
/// vertex vertices[i] becomes i.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

/// Maximal connected vertex sets, each sorted, ordered by minimum vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// True iff g is connected, bipartite, and every cross pair is an edge.
bool is_complete_bipartite(const Graph& g);

/// True iff every edge of h (under identity labelling) is an edge of g and
/// h.order() <= g.order().
bool is_subgraph_of(const Graph& h, const Graph& g);

} // namespace tdc
