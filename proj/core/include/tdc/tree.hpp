#pragma once

#include <array>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

/// Distance of unreachable vertices in bfs_distances.
inline constexpr int kUnreachable = -1;

/// Exact shortest-path distances from `source`; kUnreachable marks vertices
/// in other components.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Maximum distance from v to any vertex (graph must be connected).
int eccentricity(const Graph& g, int v);

bool is_tree(const Graph& g);

/// Structure of a tree: leaves L, support vertices S, the support map
/// sigma, diameter/radius, and its center (a vertex or an edge, Jordan).
struct TreeProfile {
    VertexSet leaves;
    VertexSet supports;
    /// sigma[v] = the support vertex adjacent to leaf v; -1 for non-leaves
    /// (and for both ends of P_2, which has no support vertex).
    std::vector<int> sigma;
    int leaf_count = 0;     // ell = |L|
    int support_count = 0;  // s = |S|
    int diameter = 0;
    int radius = 0;
    bool center_is_edge = false;
    /// center[0] always set; center[1] = -1 for a vertex center.
    std::array<int, 2> center{-1, -1};
};

/// Profiles a tree (connected, m = n-1, n >= 2). The center is found by
/// iterative leaf removal. Throws std::domain_error on non-tree input.
TreeProfile analyze_tree(const Graph& g);

} // namespace tdc
