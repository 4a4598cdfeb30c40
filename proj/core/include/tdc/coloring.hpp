#pragma once

#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

/// Total assignment vertex -> color class in 1..k. Class indices are
/// contiguous and every class is non-empty; the class partition is derived
/// at construction.
class Coloring {
public:
    Coloring() = default;

    /// Throws std::invalid_argument if some index in 1..max(assignment) is
    /// unused or an entry is < 1.
    explicit Coloring(std::vector<int> assignment);

    int k() const { return k_; }
    int size() const { return static_cast<int>(assignment_.size()); }
    int color_of(int v) const { return assignment_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& assignment() const { return assignment_; }

    /// classes()[i] is color class i+1.
    const std::vector<VertexSet>& classes() const { return classes_; }
    const VertexSet& class_of(int color) const { return classes_[static_cast<std::size_t>(color - 1)]; }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> assignment_;
    std::vector<VertexSet> classes_;
    int k_ = 0;
};

/// True iff no edge is monochromatic. Throws std::invalid_argument when the
/// coloring does not cover exactly V(g).
bool is_proper(const Graph& g, const Coloring& c);

/// CN(cls) = { v : cls is a subset of N(v) }. Throws on an empty class.
VertexSet common_neighborhood(const Graph& g, const VertexSet& cls);

/// pn(V_i; c) = vertices adjacent to all of V_i and to no other full class.
/// `color` is 1-based. Throws std::invalid_argument on a bad index.
VertexSet private_neighborhood(const Graph& g, const Coloring& c, int color);

/// Proper and every vertex is adjacent to every vertex of some class.
bool is_total_dominator_coloring(const Graph& g, const Coloring& c);

/// Proper and every vertex's closed neighborhood contains some full class.
bool is_dominator_coloring(const Graph& g, const Coloring& c);

/// For a total dominator coloring, the common neighborhoods of the classes
/// of size <= max_degree must cover V. Throws std::domain_error when c is
/// not a total dominator coloring of g.
bool verify_cn_cover(const Graph& g, const Coloring& c);

struct ChromaticResult {
    int value = 0;
    Coloring witness;
};

/// Exact chromatic number by iterative-deepening backtracking with first-use
/// color canonicalization; the witness is the lexicographically least
/// canonical proper coloring with `value` classes.
ChromaticResult chromatic_number_exact(const Graph& g);

/// Greedy clique built by descending degree; a chromatic lower bound.
std::vector<int> greedy_clique(const Graph& g);

} // namespace tdc
