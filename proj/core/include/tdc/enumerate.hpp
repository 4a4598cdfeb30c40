#pragma once

#include <string>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

/// Canonical form of a free tree: AHU encoding rooted at the centroid (the
/// smaller of the two encodings for a two-vertex centroid). Equal strings
/// iff isomorphic trees.
std::string tree_canonical_form(const Graph& t);

enum class TreeGen {
    Auto,           // Pruefer for n <= 8, leaf extension above
    Prufer,         // decode every sequence, dedup by canonical form
    LeafExtension,  // attach a leaf everywhere on each tree of order n-1
};

/// All isomorphism classes of trees on n vertices, one representative each,
/// ordered by canonical form. Both enumeration routes are exhaustive: every
/// labelled tree has a Pruefer sequence, and every tree on n vertices is a
/// tree on n-1 vertices plus a leaf.
std::vector<Graph> all_trees(int n, TreeGen method = TreeGen::Auto);

/// Canonical adjacency code: minimum upper-triangle bitmask over all vertex
/// permutations. Only sensible for small n (<= 8).
std::uint64_t graph_canonical_code(const Graph& g);

/// All connected graphs on n vertices, either one labelled representative
/// per isomorphism class (isomorph_free) or every labelled graph. n <= 7.
std::vector<Graph> all_connected_graphs(int n, bool isomorph_free);

} // namespace tdc
