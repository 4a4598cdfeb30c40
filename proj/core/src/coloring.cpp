#include "tdc/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tdc {

Coloring::Coloring(std::vector<int> assignment) : assignment_(std::move(assignment)) {
    int n = static_cast<int>(assignment_.size());
    for (int c : assignment_) {
        if (c < 1) throw std::invalid_argument("color indices are 1-based");
        k_ = std::max(k_, c);
    }
    classes_.assign(static_cast<std::size_t>(k_), VertexSet(n));
    for (int v = 0; v < n; ++v) classes_[static_cast<std::size_t>(assignment_[static_cast<std::size_t>(v)] - 1)].set(v);
    for (const auto& cls : classes_)
        if (cls.empty()) throw std::invalid_argument("color classes must be contiguous and non-empty");
}

namespace {

void require_matching(const Graph& g, const Coloring& c) {
    if (c.size() != g.order())
        throw std::invalid_argument("coloring does not cover exactly V(g)");
}

} // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    require_matching(g, c);
    for (auto [u, v] : g.edges())
        if (c.color_of(u) == c.color_of(v)) return false;
    return true;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& cls) {
    if (cls.empty()) throw std::invalid_argument("common_neighborhood: class must be non-empty");
    if (cls.capacity() != g.order())
        throw std::invalid_argument("common_neighborhood: class is not over V(g)");
    VertexSet cn(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (cls.is_subset_of(g.neighbors(v))) cn.set(v);
    return cn;
}

VertexSet private_neighborhood(const Graph& g, const Coloring& c, int color) {
    require_matching(g, c);
    if (color < 1 || color > c.k())
        throw std::invalid_argument("private_neighborhood: class index out of range");
    VertexSet pn(g.order());
    for (int v = 0; v < g.order(); ++v) {
        if (!c.class_of(color).is_subset_of(g.neighbors(v))) continue;
        bool dominates_other = false;
        for (int j = 1; j <= c.k(); ++j)
            if (j != color && c.class_of(j).is_subset_of(g.neighbors(v))) {
                dominates_other = true;
                break;
            }
        if (!dominates_other) pn.set(v);
    }
    return pn;
}

bool is_total_dominator_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    for (int v = 0; v < g.order(); ++v) {
        bool dominated = false;
        for (int j = 1; j <= c.k() && !dominated; ++j)
            dominated = c.class_of(j).is_subset_of(g.neighbors(v));
        if (!dominated) return false;
    }
    return true;
}

bool is_dominator_coloring(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c)) return false;
    for (int v = 0; v < g.order(); ++v) {
        VertexSet closed = g.neighbors(v);
        closed.set(v);
        bool dominated = false;
        for (int j = 1; j <= c.k() && !dominated; ++j)
            dominated = c.class_of(j).is_subset_of(closed);
        if (!dominated) return false;
    }
    return true;
}

bool verify_cn_cover(const Graph& g, const Coloring& c) {
    if (!is_total_dominator_coloring(g, c))
        throw std::domain_error("verify_cn_cover: coloring is not a total dominator coloring");
    int max_deg = g.max_degree();
    VertexSet cover(g.order());
    for (int j = 1; j <= c.k(); ++j)
        if (c.class_of(j).count() <= max_deg) cover |= common_neighborhood(g, c.class_of(j));
    return cover == VertexSet::full(g.order());
}

std::vector<int> greedy_clique(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

namespace {

// Backtracking search for a proper coloring with at most k colors in
// canonical (first-use) order; returns the first complete assignment found,
// which is the lexicographically least one.
class ProperColoringSearch {
public:
    ProperColoringSearch(const Graph& g, int k) : g_(g), k_(k), color_(static_cast<std::size_t>(g.order()), 0) {}

    bool run() { return extend(0, 0); }

    std::vector<int> take_assignment() { return std::move(color_); }

private:
    bool extend(int v, int used) {
        if (v == g_.order()) return true;
        int limit = std::min(used + 1, k_);
        for (int c = 1; c <= limit; ++c) {
            bool clash = false;
            const VertexSet& nb = g_.neighbors(v);
            for (int u = nb.first(); u != -1 && u < v; u = nb.next(u))
                if (color_[static_cast<std::size_t>(u)] == c) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            color_[static_cast<std::size_t>(v)] = c;
            if (extend(v + 1, std::max(used, c))) return true;
        }
        color_[static_cast<std::size_t>(v)] = 0;
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<int> color_;
};

} // namespace

ChromaticResult chromatic_number_exact(const Graph& g) {
    int n = g.order();
    if (n == 0) return {0, Coloring{}};
    int lb = std::max<int>(1, static_cast<int>(greedy_clique(g).size()));
    for (int k = lb; k <= n; ++k) {
        ProperColoringSearch search(g, k);
        if (search.run()) return {k, Coloring(search.take_assignment())};
    }
    throw std::logic_error("chromatic_number_exact: unreachable");
}

} // namespace tdc
