#include "tdc/reduction.hpp"

#include <stdexcept>

namespace tdc {

ReductionInstance reduce(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("reduce: k must be >= 1");
    return {g, k, add_universal_vertex(g), k + 1};
}

ReductionCheck verify_reduction(const Graph& g, const SolveOptions& opts) {
    ReductionCheck out;
    out.chi = chromatic_number_exact(g).value;
    Graph reduced = add_universal_vertex(g);
    auto rep = tdc_exact(reduced, opts);
    if (!rep.value) return out;  // inconclusive under the node budget
    out.tdc_of_reduced = *rep.value;
    out.holds = (*rep.value == out.chi + 1);

    const Coloring& witness = *rep.witness;
    int universal = g.order();  // the added vertex
    out.universal_singleton = witness.class_of(witness.color_of(universal)).count() == 1;

    // Drop the universal vertex and renumber the remaining classes by first
    // use; this must be a proper chi-coloring of g.
    if (g.order() > 0) {
        std::vector<int> remap(static_cast<std::size_t>(witness.k()) + 1, 0);
        std::vector<int> assignment(static_cast<std::size_t>(g.order()));
        int next = 1;
        for (int v = 0; v < g.order(); ++v) {
            int c = witness.color_of(v);
            if (remap[static_cast<std::size_t>(c)] == 0) remap[static_cast<std::size_t>(c)] = next++;
            assignment[static_cast<std::size_t>(v)] = remap[static_cast<std::size_t>(c)];
        }
        out.extracted = Coloring(assignment);
        out.extracted_valid =
            is_proper(g, *out.extracted) && out.extracted->k() == *rep.value - 1;
    }
    return out;
}

} // namespace tdc
