#include "tdc/domination.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdc {

bool is_total_dominating_set(const Graph& g, const VertexSet& s) {
    for (int v = 0; v < g.order(); ++v)
        if (!g.neighbors(v).intersects(s)) return false;
    return true;
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
    for (int v = 0; v < g.order(); ++v)
        if (!s.test(v) && !g.neighbors(v).intersects(s)) return false;
    return true;
}

namespace {

// Visits all k-subsets of 0..n-1 in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    if (k > n) return;
    for (;;) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

template <typename Pred>
DominationResult enumerate_minimum_sets(const Graph& g, DominationKind kind, Pred&& pred,
                                        bool all_witnesses) {
    int n = g.order();
    for (int k = 0; k <= n; ++k) {
        std::vector<std::vector<int>> found;
        for_each_subset(n, k, [&](const std::vector<int>& idx) {
            if (!all_witnesses && !found.empty()) return;
            VertexSet s(n);
            for (int v : idx) s.set(v);
            if (pred(s)) found.push_back(idx);
        });
        if (!found.empty()) return {k, std::move(found), kind};
    }
    throw std::domain_error("no feasible set exists");
}

} // namespace

DominationResult gamma_t_exact(const Graph& g) {
    if (g.order() == 0 || g.has_isolated_vertex())
        throw std::domain_error("gamma_t: graph has an isolated vertex, no total dominating set");
    return enumerate_minimum_sets(
        g, DominationKind::TotalDomination,
        [&](const VertexSet& s) { return is_total_dominating_set(g, s); }, true);
}

DominationResult gamma_exact(const Graph& g) {
    return enumerate_minimum_sets(
        g, DominationKind::Domination, [&](const VertexSet& s) { return is_dominating_set(g, s); },
        true);
}

int gamma_t_value(const Graph& g) {
    if (g.order() == 0 || g.has_isolated_vertex())
        throw std::domain_error("gamma_t: graph has an isolated vertex, no total dominating set");
    return enumerate_minimum_sets(
               g, DominationKind::TotalDomination,
               [&](const VertexSet& s) { return is_total_dominating_set(g, s); }, false)
        .value;
}

ProductBoundCheck check_product_bound(const Graph& g, const Graph& h) {
    int gt_g = gamma_t_value(g);
    int gt_h = gamma_t_value(h);
    int rhs = std::min(gt_g * h.order(), gt_h * g.order());
    int lhs = gamma_t_value(cartesian_product(g, h));
    return {lhs, rhs, lhs <= rhs};
}

} // namespace tdc
