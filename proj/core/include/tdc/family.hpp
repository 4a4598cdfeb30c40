#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

enum class Family {
    Path,
    Cycle,
    Complete,
    CompleteMultipartite,
    Wheel,
    Star,
    ComplementCycle,
    ComplementPath,
    RandomTree,
    RandomGraph,
};

/// Parameterized graph family. Parameter layout by kind:
///   Path, Cycle, Complete, ComplementCycle, ComplementPath: {n}
///   CompleteMultipartite: {n_1, ..., n_p}
///   Wheel: {n}  (rim length; the graph has order n+1, hub is vertex n)
///   Star:  {k}  (k leaves; order k+1, hub is vertex k)
///   RandomTree: {n, seed}
///   RandomGraph: {n, p_num, p_den, seed}  (edge probability p_num/p_den)
struct FamilySpec {
    Family kind;
    std::vector<long long> params;
};

/// Canonical labelings: paths/cycles are consecutive (i ~ i+1, cycles wrap);
/// wheel and star hubs are the last vertex; multipartite parts occupy
/// consecutive label blocks. Throws std::invalid_argument when a parameter is
/// outside the family's domain.
Graph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_multipartite(const std::vector<long long>& part_sizes);
Graph wheel_graph(int rim);
Graph star_graph(int leaves);

/// Uniform draw from [0, bound) by rejection sampling on raw 64-bit output,
/// so results depend only on the mt19937_64 stream (standard-pinned), never
/// on a library distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Tree on n vertices from a Pruefer sequence (n-2 values in 0..n-1).
Graph prufer_decode(int n, const std::vector<int>& seq);

/// Uniform random labelled tree via a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// G(n, p) with p = p_num/p_den, each pair drawn independently.
Graph random_graph(int n, long long p_num, long long p_den, std::uint64_t seed);

/// Parses the CLI shorthand "name:p1,p2,...", e.g. "cycle:10",
/// "multipartite:2,3,4", "random_graph:8,1,2,42".
FamilySpec parse_family_spec(const std::string& text);

std::string family_name(Family kind);
std::string describe(const FamilySpec& spec);

} // namespace tdc
