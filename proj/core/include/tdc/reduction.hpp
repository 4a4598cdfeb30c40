#pragma once

#include <optional>

#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"
#include "tdc/solver.hpp"

namespace tdc {

/// Instance mapping for the chromatic-number reduction: the reduced graph
/// adds one universal vertex and the color target moves from k to k+1.
struct ReductionInstance {
    Graph source;
    int k = 0;
    Graph reduced;
    int k_prime = 0;
};

/// Requires k >= 1.
ReductionInstance reduce(const Graph& g, int k);

struct ReductionCheck {
    int chi = 0;
    /// Empty when the solver ran out of budget (inconclusive).
    std::optional<int> tdc_of_reduced;
    std::optional<bool> holds;  // tdc(G') == chi(G) + 1
    /// The universal vertex is alone in its class in the solver's witness.
    bool universal_singleton = false;
    /// Proper coloring of G recovered by dropping the universal vertex.
    std::optional<Coloring> extracted;
    bool extracted_valid = false;

    bool inconclusive() const { return !holds.has_value(); }
};

/// Round-trip check of the reduction equality on one instance. The source
/// graph may be disconnected or have isolated vertices; the reduced graph
/// never does.
ReductionCheck verify_reduction(const Graph& g, const SolveOptions& opts = {});

} // namespace tdc
