#include "tdc/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "tdc/domination.hpp"

namespace tdc {

namespace {

// Backtracking search for a proper coloring with at most k classes in which
// every vertex fully dominates some class inside its target set (open
// neighborhood for total dominator colorings, closed for dominator
// colorings). Vertices are assigned in index order with first-use color
// canonicalization, so the first complete assignment found is the
// lexicographically least optimal witness.
class DominatedColoringSearch {
public:
    enum class Outcome { Found, Exhausted, Budget };

    DominatedColoringSearch(const Graph& g, const std::vector<VertexSet>& targets,
                            std::uint64_t node_budget)
        : g_(g), targets_(targets), budget_(node_budget) {}

    Outcome run(int k) {
        k_ = k;
        color_.assign(static_cast<std::size_t>(g_.order()), 0);
        members_.assign(static_cast<std::size_t>(k), VertexSet(g_.order()));
        budget_hit_ = false;
        bool found = extend(0, 0);
        if (found) return Outcome::Found;
        return budget_hit_ ? Outcome::Budget : Outcome::Exhausted;
    }

    const std::vector<int>& assignment() const { return color_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // A vertex v is still satisfiable iff some existing class already lies
    // inside target(v), or a class could still be opened/completed there,
    // which needs a spare color index and an uncolored vertex in target(v).
    // Vertices 0..next-1 are colored. At next == n this is exactly the
    // domination predicate.
    bool all_satisfiable(int next, int used) const {
        for (int v = 0; v < g_.order(); ++v) {
            const VertexSet& target = targets_[static_cast<std::size_t>(v)];
            bool ok = false;
            for (int c = 0; c < used && !ok; ++c)
                ok = members_[static_cast<std::size_t>(c)].is_subset_of(target);
            if (!ok && used < k_ && target.next(next - 1) != -1) ok = true;
            if (!ok) return false;
        }
        return true;
    }

    bool extend(int v, int used) {
        ++nodes_;
        if (budget_ != 0 && nodes_ > budget_) {
            budget_hit_ = true;
            return false;
        }
        if (!all_satisfiable(v, used)) return false;
        if (v == g_.order()) return true;
        int limit = std::min(used + 1, k_);
        for (int c = 1; c <= limit; ++c) {
            if (members_[static_cast<std::size_t>(c - 1)].intersects(g_.neighbors(v)))
                continue; // not proper
            color_[static_cast<std::size_t>(v)] = c;
            members_[static_cast<std::size_t>(c - 1)].set(v);
            if (extend(v + 1, std::max(used, c))) return true;
            members_[static_cast<std::size_t>(c - 1)].reset(v);
            if (budget_hit_) break;
        }
        color_[static_cast<std::size_t>(v)] = 0;
        return false;
    }

    const Graph& g_;
    const std::vector<VertexSet>& targets_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
    int k_ = 0;
    std::vector<int> color_;
    std::vector<VertexSet> members_;
};

std::vector<VertexSet> open_targets(const Graph& g) {
    std::vector<VertexSet> t;
    t.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) t.push_back(g.neighbors(v));
    return t;
}

std::vector<VertexSet> closed_targets(const Graph& g) {
    std::vector<VertexSet> t = open_targets(g);
    for (int v = 0; v < g.order(); ++v) t[static_cast<std::size_t>(v)].set(v);
    return t;
}

// Above this order the exact chi/gamma_t seeding becomes the bottleneck, so
// the sweep falls back to coarse bounds and relies on the node budget.
constexpr int kSeedingMaxOrder = 20;

struct SweepBounds {
    int lower = 1;
    int upper = 1;
};

// gamma_t + chi(G - S) for up to `cap` minimum total dominating sets. Valid
// for any graph with min degree >= 1; connectivity is not needed by the
// construction.
int gamma_t_chi_seed(const Graph& g, const DominationResult& gt, std::size_t cap) {
    int best = g.order();
    std::size_t limit = std::min(cap, gt.witnesses.size());
    for (std::size_t i = 0; i < limit; ++i) {
        VertexSet s(g.order());
        for (int v : gt.witnesses[i]) s.set(v);
        auto rest = s.complement().to_vector();
        int chi_rest = chromatic_number_exact(induced_subgraph(g, rest)).value;
        best = std::min(best, gt.value + chi_rest);
    }
    return best;
}

SweepBounds tdc_sweep_bounds(const Graph& g) {
    SweepBounds b;
    b.upper = g.order(); // all-singletons is a TDC whenever min degree >= 1
    if (g.order() <= kSeedingMaxOrder) {
        auto gt = gamma_t_exact(g);
        b.lower = std::max(chromatic_number_exact(g).value, gt.value);
        b.upper = std::min(b.upper, gamma_t_chi_seed(g, gt, 32));
    } else {
        b.lower = std::max<int>(2, static_cast<int>(greedy_clique(g).size()));
    }
    return b;
}

SweepBounds dc_sweep_bounds(const Graph& g) {
    SweepBounds b;
    b.upper = g.order(); // all-singletons is always a dominator coloring
    if (g.order() <= kSeedingMaxOrder)
        b.lower = chromatic_number_exact(g).value;
    else
        b.lower = std::max<int>(1, static_cast<int>(greedy_clique(g).size()));
    return b;
}

SolveReport run_sweep(const Graph& g, const std::vector<VertexSet>& targets,
                      const SweepBounds& bounds, const SolveOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    SolveReport rep;
    rep.lower_bound_used = bounds.lower;
    rep.upper_bound_used = bounds.upper;

    DominatedColoringSearch search(g, targets, opts.node_budget);
    for (int k = bounds.lower; k <= bounds.upper; ++k) {
        auto outcome = search.run(k);
        rep.nodes_explored = search.nodes();
        if (outcome == DominatedColoringSearch::Outcome::Found) {
            rep.value = k;
            rep.witness = Coloring(search.assignment());
            break;
        }
        if (outcome == DominatedColoringSearch::Outcome::Budget) {
            rep.budget_exhausted = true;
            rep.lower_bound_used = k; // all smaller k were exhausted
            break;
        }
    }
    rep.elapsed = std::chrono::steady_clock::now() - start;
    if (!rep.value && !rep.budget_exhausted)
        throw std::logic_error("solver sweep passed a constructive upper bound");
    return rep;
}

} // namespace

SolveReport tdc_exact(const Graph& g, const SolveOptions& opts) {
    if (g.order() == 0 || g.has_isolated_vertex())
        throw std::domain_error("tdc_exact: graph has an isolated vertex, no coloring exists");
    auto rep = run_sweep(g, open_targets(g), tdc_sweep_bounds(g), opts);
    if (rep.witness && !is_total_dominator_coloring(g, *rep.witness))
        throw std::logic_error("tdc_exact: witness failed validation");
    return rep;
}

SolveReport dc_exact(const Graph& g, const SolveOptions& opts) {
    if (g.order() == 0) {
        SolveReport rep;
        rep.value = 0;
        rep.witness = Coloring{};
        return rep;
    }
    auto rep = run_sweep(g, closed_targets(g), dc_sweep_bounds(g), opts);
    if (rep.witness && !is_dominator_coloring(g, *rep.witness))
        throw std::logic_error("dc_exact: witness failed validation");
    return rep;
}

int tdc_lower_bound(const Graph& g) {
    return std::max(chromatic_number_exact(g).value, gamma_t_value(g));
}

namespace {

struct Alpha0Search {
    const Graph& g;
    VertexSet current;
    std::vector<int> current_members;
    Alpha0Result best;

    explicit Alpha0Search(const Graph& graph) : g(graph), current(graph.order()) {}

    void consider() {
        // Isolated vertices of G[V-S] must each see all of S.
        for (int v = 0; v < g.order(); ++v) {
            if (current.test(v)) continue;
            if (g.neighbors(v).is_subset_of(current) && !current.is_subset_of(g.neighbors(v)))
                return;
        }
        int cnt = static_cast<int>(current_members.size());
        if (cnt > best.value || (cnt == best.value && current_members < best.witness)) {
            best.value = cnt;
            best.witness = current_members;
        }
    }

    void recurse(int v) {
        if (v == g.order()) {
            consider();
            return;
        }
        if (!current.intersects(g.neighbors(v))) {
            current.set(v);
            current_members.push_back(v);
            recurse(v + 1);
            current_members.pop_back();
            current.reset(v);
        }
        recurse(v + 1);
    }
};

} // namespace

Alpha0Result alpha0(const Graph& g) {
    Alpha0Search search(g);
    search.best.value = -1;
    search.recurse(0);
    return search.best;
}

Alpha0Bound ub_alpha0(const Graph& g) {
    if (!is_connected(g) || g.order() == 0 || g.has_isolated_vertex())
        throw std::invalid_argument("ub_alpha0: requires a connected graph with min degree >= 1");
    auto a0 = alpha0(g);
    int n = g.order();
    VertexSet s(n);
    for (int v : a0.witness) s.set(v);
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    int next = 1;
    for (int v = 0; v < n; ++v)
        if (!s.test(v)) assignment[static_cast<std::size_t>(v)] = next++;
    for (int v : a0.witness) assignment[static_cast<std::size_t>(v)] = next;
    Alpha0Bound out{n + 1 - a0.value, a0.witness, Coloring(assignment)};
    if (!is_total_dominator_coloring(g, out.witness))
        throw std::logic_error("ub_alpha0: constructed coloring is not a total dominator coloring");
    return out;
}

GammaTChiBound ub_gamma_t_chi(const Graph& g) {
    if (!is_connected(g) || g.order() == 0 || g.has_isolated_vertex())
        throw std::invalid_argument(
            "ub_gamma_t_chi: requires a connected graph with min degree >= 1");
    auto gt = gamma_t_exact(g);
    int n = g.order();
    GammaTChiBound out;
    out.gamma_t = gt.value;
    out.chi_off_set = n + 1;
    ChromaticResult best_chi;
    for (const auto& witness : gt.witnesses) {
        VertexSet s(n);
        for (int v : witness) s.set(v);
        auto rest = s.complement().to_vector();
        auto chi = chromatic_number_exact(induced_subgraph(g, rest));
        if (chi.value < out.chi_off_set) {
            out.chi_off_set = chi.value;
            out.best_set = witness;
            best_chi = chi;
        }
    }
    out.bound = out.gamma_t + out.chi_off_set;

    VertexSet s(n);
    for (int v : out.best_set) s.set(v);
    auto rest = s.complement().to_vector();
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < rest.size(); ++i)
        assignment[static_cast<std::size_t>(rest[i])] = best_chi.witness.color_of(static_cast<int>(i));
    int next = out.chi_off_set + 1;
    for (int v : out.best_set) assignment[static_cast<std::size_t>(v)] = next++;
    out.witness = Coloring(assignment);
    if (!is_total_dominator_coloring(g, out.witness))
        throw std::logic_error(
            "ub_gamma_t_chi: constructed coloring is not a total dominator coloring");
    return out;
}

PartiteBound ub_partite(const Graph& g, const std::vector<std::vector<int>>& parts) {
    int n = g.order();
    VertexSet seen(n);
    for (const auto& part : parts) {
        VertexSet p(n);
        for (int v : part) {
            if (v < 0 || v >= n) throw std::invalid_argument("ub_partite: vertex out of range");
            if (seen.test(v)) throw std::invalid_argument("ub_partite: parts overlap");
            seen.set(v);
            p.set(v);
        }
        for (int v : part)
            if (p.intersects(g.neighbors(v)))
                throw std::invalid_argument("ub_partite: part is not independent");
    }
    if (seen != VertexSet::full(n))
        throw std::invalid_argument("ub_partite: parts do not cover V");

    for (const auto& part : parts)
        if (part.empty()) throw std::invalid_argument("ub_partite: empty part");

    PartiteBound out;
    int delta = g.min_degree();
    int n_prime = 0;
    std::size_t chosen = parts.size();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        int sz = static_cast<int>(parts[i].size());
        if (delta >= sz && sz > n_prime) {
            n_prime = sz;
            chosen = i;
        }
    }
    if (chosen != parts.size()) {
        out.n_prime = n_prime;
        out.size_bound = n - n_prime + 1;
        VertexSet s(n);
        for (int v : parts[chosen]) s.set(v);
        std::vector<int> assignment(static_cast<std::size_t>(n), 0);
        int next = 1;
        for (int v = 0; v < n; ++v)
            if (!s.test(v)) assignment[static_cast<std::size_t>(v)] = next++;
        for (int v : parts[chosen]) assignment[static_cast<std::size_t>(v)] = next;
        out.witness = Coloring(assignment);
        if (!is_total_dominator_coloring(g, *out.witness))
            throw std::logic_error(
                "ub_partite: constructed coloring is not a total dominator coloring");
    }
    if (n > 0 && !g.has_isolated_vertex())
        out.corollary_bound = gamma_t_value(g) + static_cast<int>(parts.size());
    return out;
}

std::optional<UniversalValue> universal_vertex_value(const Graph& g) {
    int n = g.order();
    if (n < 2) throw std::invalid_argument("universal_vertex_value: requires n >= 2");
    if (g.max_degree() != n - 1) return std::nullopt;
    std::vector<int> universal, rest;
    for (int v = 0; v < n; ++v)
        (g.degree(v) == n - 1 ? universal : rest).push_back(v);
    auto chi_rest = chromatic_number_exact(induced_subgraph(g, rest));
    UniversalValue out;
    out.universal_count = static_cast<int>(universal.size());
    out.value = out.universal_count + chi_rest.value;
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < rest.size(); ++i)
        assignment[static_cast<std::size_t>(rest[i])] = chi_rest.witness.color_of(static_cast<int>(i));
    int next = chi_rest.value + 1;
    for (int v : universal) assignment[static_cast<std::size_t>(v)] = next++;
    out.witness = Coloring(assignment);
    if (!is_total_dominator_coloring(g, out.witness))
        throw std::logic_error(
            "universal_vertex_value: constructed coloring is not a total dominator coloring");
    return out;
}

ComponentBounds component_bounds(const Graph& g, const SolveOptions& opts) {
    ComponentBounds out;
    auto comps = connected_components(g);
    int omega = static_cast<int>(comps.size());
    int max_value = 0, sum = 0, non_cb = 0;
    out.solved = true;
    for (const auto& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        if (sub.has_isolated_vertex())
            throw std::domain_error("component_bounds: component with an isolated vertex");
        auto rep = tdc_exact(sub, opts);
        if (!rep.value) {
            out.solved = false;
            return out;
        }
        out.component_values.push_back(*rep.value);
        max_value = std::max(max_value, *rep.value);
        sum += *rep.value;
        if (!is_complete_bipartite(sub)) ++non_cb;
    }
    out.lower = max_value + 2 * omega - 2;
    out.upper = sum;
    out.equality_expected = non_cb <= 1;
    return out;
}

int BoundsRecord::best_upper(int n) const {
    int best = n;
    for (const auto& b : {components_ub, alpha0_ub, gamma_t_chi_ub, partite_ub,
                          partite_corollary_ub, universal_value})
        if (b) best = std::min(best, *b);
    return best;
}

BoundsRecord bounds_report(const Graph& g, const SolveOptions& opts, bool include_exact) {
    if (g.order() == 0 || g.has_isolated_vertex())
        throw std::domain_error("bounds_report: requires min degree >= 1");
    BoundsRecord rec;

    auto gt = gamma_t_exact(g);
    rec.gamma_t = gt.value;
    rec.gamma_t_set = gt.witnesses.front();

    auto dc = dc_exact(g, opts);
    if (dc.value) {
        rec.chi_d = *dc.value;
        rec.dc_witness = dc.witness;
        rec.obs_lb = std::max(*dc.value, gt.value);
    } else {
        rec.obs_lb = std::max(chromatic_number_exact(g).value, gt.value);
    }

    auto comp = component_bounds(g, opts);
    if (comp.solved) {
        rec.components_lb = comp.lower;
        rec.components_ub = comp.upper;
        rec.component_values = comp.component_values;
    }

    if (is_connected(g)) {
        auto a0 = ub_alpha0(g);
        rec.alpha0_ub = a0.bound;
        rec.alpha0_set = a0.independent_set;
        rec.alpha0_witness = a0.witness;

        auto gtc = ub_gamma_t_chi(g);
        rec.gamma_t_chi_ub = gtc.bound;
        rec.gamma_t_chi_set = gtc.best_set;
        rec.gamma_t_chi_witness = gtc.witness;

        auto chi = chromatic_number_exact(g);
        std::vector<std::vector<int>> parts;
        for (int c = 1; c <= chi.value; ++c)
            parts.push_back(chi.witness.class_of(c).to_vector());
        auto pb = ub_partite(g, parts);
        if (pb.size_bound) {
            rec.partite_ub = pb.size_bound;
            rec.partite_parts = parts;
            rec.partite_witness = pb.witness;
        }
        rec.partite_corollary_ub = pb.corollary_bound;

        if (g.order() >= 2) {
            if (auto uni = universal_vertex_value(g)) {
                rec.universal_value = uni->value;
                rec.universal_witness = uni->witness;
            }
        }
    }

    if (include_exact) {
        auto rep = tdc_exact(g, opts);
        rec.exact_value = rep.value;
        rec.exact_witness = rep.witness;
    }
    return rec;
}

} // namespace tdc
