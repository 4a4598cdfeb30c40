#pragma once

#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

enum class DominationKind { Domination, TotalDomination };

/// Minimum (total) domination number together with *all* minimum sets,
/// each sorted ascending, the list in lexicographic order.
struct DominationResult {
    int value = 0;
    std::vector<std::vector<int>> witnesses;
    DominationKind kind = DominationKind::Domination;
};

/// Every vertex has a neighbor in s (members included).
bool is_total_dominating_set(const Graph& g, const VertexSet& s);

/// Every vertex has s intersect N[v] non-empty.
bool is_dominating_set(const Graph& g, const VertexSet& s);

/// Exhaustive by increasing cardinality; all witnesses at the first feasible
/// size are collected. Throws std::domain_error when g has an isolated
/// vertex (no total dominating set exists).
DominationResult gamma_t_exact(const Graph& g);

DominationResult gamma_exact(const Graph& g);

/// Value-only fast path for gamma_t (stops at the first feasible set).
int gamma_t_value(const Graph& g);

struct ProductBoundCheck {
    int lhs = 0;  // gamma_t of the Cartesian product
    int rhs = 0;  // min{gamma_t(g)|V(h)|, gamma_t(h)|V(g)|}
    bool holds = false;
};

ProductBoundCheck check_product_bound(const Graph& g, const Graph& h);

} // namespace tdc
