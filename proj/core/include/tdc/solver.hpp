#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "tdc/coloring.hpp"
#include "tdc/graph.hpp"

namespace tdc {

struct SolveOptions {
    /// Maximum search nodes across the whole solve; 0 = unlimited. When the
    /// budget runs out the report carries bounds only, never a guessed value.
    std::uint64_t node_budget = 0;
};

struct SolveReport {
    /// Empty iff the node budget was exhausted.
    std::optional<int> value;
    std::optional<Coloring> witness;
    int lower_bound_used = 0;
    int upper_bound_used = 0;
    std::uint64_t nodes_explored = 0;
    std::chrono::duration<double> elapsed{0};
    bool budget_exhausted = false;
};

/// Exact total dominator chromatic number with a canonical witness (the
/// lexicographically least first-use assignment among optima). Iterates the
/// class count k upward from max(chi, gamma_t), capped by constructive upper
/// bounds. Throws std::domain_error when g has an isolated vertex.
SolveReport tdc_exact(const Graph& g, const SolveOptions& opts = {});

/// Exact dominator chromatic number, same search over closed neighborhoods.
SolveReport dc_exact(const Graph& g, const SolveOptions& opts = {});

/// max(chi(g), gamma_t(g)).
int tdc_lower_bound(const Graph& g);

struct Alpha0Result {
    int value = 0;
    std::vector<int> witness;
};

/// Maximum independent S such that G[V-S] has no isolated vertex, or each of
/// its isolated vertices is adjacent to all of S. Ties broken toward the
/// lexicographically least witness.
Alpha0Result alpha0(const Graph& g);

struct Alpha0Bound {
    int bound = 0;  // n + 1 - alpha0
    std::vector<int> independent_set;
    Coloring witness;  // singletons off S, one shared color on S
};

/// Requires a connected graph with min degree >= 1; the constructed witness
/// is validated as a total dominator coloring (std::logic_error otherwise).
Alpha0Bound ub_alpha0(const Graph& g);

struct GammaTChiBound {
    int bound = 0;  // gamma_t + min over gamma_t-sets S of chi(G[V-S])
    int gamma_t = 0;
    int chi_off_set = 0;
    std::vector<int> best_set;
    Coloring witness;  // proper coloring off S plus singletons on S
};

/// Enumerates every minimum total dominating set and minimizes the chromatic
/// number of the rest. Requires connected, min degree >= 1.
GammaTChiBound ub_gamma_t_chi(const Graph& g);

struct PartiteBound {
    /// n - n' + 1 where n' = max{|part| : min_degree >= |part|}; absent when
    /// no part qualifies.
    std::optional<int> size_bound;
    std::optional<int> n_prime;
    std::optional<Coloring> witness;
    /// gamma_t + p (present whenever min degree >= 1).
    std::optional<int> corollary_bound;
};

/// `parts` must partition V(g) into independent sets.
PartiteBound ub_partite(const Graph& g, const std::vector<std::vector<int>>& parts);

struct UniversalValue {
    int value = 0;  // number of universal vertices + chi of the rest
    int universal_count = 0;
    Coloring witness;
};

/// When max degree = n-1, the exact value chi_dt = chi_d = chi obtained from
/// the universal-vertex construction; absent otherwise. Requires n >= 2.
std::optional<UniversalValue> universal_vertex_value(const Graph& g);

struct ComponentBounds {
    bool solved = false;  // false when a component solve ran out of budget
    int lower = 0;        // max component value + 2*omega - 2
    int upper = 0;        // sum of component values
    std::vector<int> component_values;
    /// True when at most one component is not complete bipartite; then the
    /// lower bound is attained.
    bool equality_expected = false;
};

/// Exact per-component values. Every component must have min degree >= 1.
ComponentBounds component_bounds(const Graph& g, const SolveOptions& opts = {});

/// Named bounds with their certificates. Entries are absent when their
/// preconditions do not apply (connectivity for the three constructive upper
/// bounds, max degree = n-1 for the universal value).
struct BoundsRecord {
    std::optional<int> obs_lb;  // max(chi_d, gamma_t)
    std::optional<int> components_lb, components_ub;
    std::optional<int> alpha0_ub;
    std::optional<int> gamma_t_chi_ub;
    std::optional<int> partite_ub;            // n - n' + 1 over the chi-partition
    std::optional<int> partite_corollary_ub;  // gamma_t + chi(g)
    std::optional<int> universal_value;

    // certificates
    int gamma_t = 0;
    std::vector<int> gamma_t_set;
    std::optional<int> chi_d;
    std::optional<Coloring> dc_witness;
    std::optional<std::vector<int>> alpha0_set;
    std::optional<Coloring> alpha0_witness;
    std::optional<std::vector<int>> gamma_t_chi_set;
    std::optional<Coloring> gamma_t_chi_witness;
    std::optional<std::vector<std::vector<int>>> partite_parts;
    std::optional<Coloring> partite_witness;
    std::optional<Coloring> universal_witness;
    std::vector<int> component_values;

    std::optional<int> exact_value;
    std::optional<Coloring> exact_witness;

    /// Smallest applicable upper bound (includes n).
    int best_upper(int n) const;
};

/// Aggregates every applicable bound; with `include_exact` also runs
/// tdc_exact so callers can check the sandwich. Requires min degree >= 1.
BoundsRecord bounds_report(const Graph& g, const SolveOptions& opts = {},
                           bool include_exact = false);

} // namespace tdc
