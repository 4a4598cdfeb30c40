#include <doctest.h>

#include <stdexcept>

#include <random>

#include "oracles.hpp"
#include "tdc/family.hpp"
#include "tdc/solver.hpp"

using namespace tdc;

TEST_CASE("tdc_exact on the named small cases") {
    CHECK(tdc_exact(cycle_graph(4)).value == 2);
    CHECK(tdc_exact(path_graph(5)).value == 4);
    CHECK(tdc_exact(complete_graph(5)).value == 5);
    CHECK(tdc_exact(wheel_graph(6)).value == 3);
    CHECK_THROWS_AS(tdc_exact(disjoint_union(path_graph(2), Graph(1))), std::domain_error);
}

TEST_CASE("dc_exact on the named small cases") {
    CHECK(dc_exact(complete_graph(6)).value == 6);
    CHECK(dc_exact(cycle_graph(4)).value == 2);
    CHECK(dc_exact(star_graph(5)).value == 2);
    // isolated vertices are fine for dominator colorings
    CHECK(dc_exact(Graph(3)).value == 3);
}

TEST_CASE("solver reports carry validated witnesses and consistent bounds") {
    auto rep = tdc_exact(cycle_graph(7));
    REQUIRE(rep.value.has_value());
    CHECK(*rep.value == 5);
    CHECK(rep.witness->k() == 5);
    CHECK(is_total_dominator_coloring(cycle_graph(7), *rep.witness));
    CHECK(rep.lower_bound_used <= *rep.value);
    CHECK(*rep.value <= rep.upper_bound_used);
    CHECK(rep.nodes_explored > 0);
}

TEST_CASE("tdc witness is the lexicographically least optimum") {
    for (const Graph& g : {cycle_graph(5), path_graph(6), wheel_graph(4)}) {
        auto rep = tdc_exact(g);
        std::vector<int> first;
        oracle::for_each_tdc_with_k(g, *rep.value, [&](const std::vector<int>& a) {
            if (first.empty()) first = a; // partitions enumerate in lex order
        });
        REQUIRE_FALSE(first.empty());
        std::vector<int> got = rep.witness->assignment();
        for (auto& c : got) --c;
        CHECK(got == first);
    }
}

TEST_CASE("solver agrees with the partition oracle on random graphs") {
    std::mt19937_64 rng(31);
    int done = 0;
    while (done < 12) {
        int n = 2 + static_cast<int>(uniform_below(rng, 6));
        Graph g = random_graph(n, 2, 3, rng());
        int chi = chromatic_number_exact(g).value;
        auto dc = dc_exact(g);
        CHECK(*dc.value == oracle::naive_dc_number(g));
        CHECK(chi <= *dc.value);
        if (!g.has_isolated_vertex()) {
            auto tdc = tdc_exact(g);
            CHECK(*tdc.value == oracle::naive_tdc_number(g));
            CHECK(*dc.value <= *tdc.value);
            ++done;
        }
    }
}

TEST_CASE("tdc_lower_bound") {
    CHECK(tdc_lower_bound(complete_graph(4)) == 4);
    CHECK(tdc_lower_bound(cycle_graph(6)) == 4);
    CHECK(tdc_lower_bound(complete_multipartite({3, 3})) == 2);
}

TEST_CASE("alpha0") {
    CHECK(alpha0(complete_graph(5)).value == 1);
    auto c6 = alpha0(cycle_graph(6));
    CHECK(c6.value == 2);
    CHECK(c6.witness == std::vector<int>{0, 2}); // lexicographically least
    CHECK(alpha0(complete_multipartite({3, 3})).value == 3);

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_graph(3 + static_cast<int>(uniform_below(rng, 5)), 2, 3, rng());
        CHECK(alpha0(g).value == oracle::naive_alpha0(g));
    }
}

TEST_CASE("ub_alpha0") {
    CHECK(ub_alpha0(complete_multipartite({3, 3})).bound == 4);
    CHECK(ub_alpha0(cycle_graph(6)).bound == 5);
    auto k5 = ub_alpha0(complete_graph(5));
    CHECK(k5.bound == 5);
    CHECK(is_total_dominator_coloring(complete_graph(5), k5.witness));
    CHECK(k5.witness.k() == k5.bound);
    CHECK_THROWS_AS(ub_alpha0(disjoint_union(path_graph(2), path_graph(2))),
                    std::invalid_argument);
}

TEST_CASE("ub_gamma_t_chi") {
    auto k5 = ub_gamma_t_chi(complete_graph(5));
    CHECK(k5.bound == 5); // sharp on complete graphs
    CHECK(k5.gamma_t == 2);

    auto c6 = ub_gamma_t_chi(cycle_graph(6));
    CHECK(c6.bound == 5);
    CHECK(c6.chi_off_set == 1);
    CHECK(is_total_dominator_coloring(cycle_graph(6), c6.witness));
    CHECK(c6.witness.k() == c6.bound);

    CHECK(ub_gamma_t_chi(path_graph(3)).bound == 3); // exact value is 2; not tight here

    // every gamma_t-set of K_{3,3} leaves a K_{2,2}, so the bound is 2 + 2
    CHECK(ub_gamma_t_chi(complete_multipartite({3, 3})).bound == 4);
}

TEST_CASE("ub_partite") {
    Graph k33 = complete_multipartite({3, 3});
    auto b = ub_partite(k33, {{0, 1, 2}, {3, 4, 5}});
    REQUIRE(b.size_bound.has_value());
    CHECK(*b.size_bound == 4);
    CHECK(*b.n_prime == 3);
    CHECK(is_total_dominator_coloring(k33, *b.witness));

    auto c6 = ub_partite(cycle_graph(6), {{0, 2, 4}, {1, 3, 5}});
    CHECK_FALSE(c6.size_bound.has_value()); // min degree 2 < 3
    CHECK(*c6.corollary_bound == 6);        // gamma_t + p = 4 + 2

    auto k4 = ub_partite(complete_graph(4), {{0}, {1}, {2}, {3}});
    CHECK(*k4.size_bound == 4);

    CHECK_THROWS_AS(ub_partite(k33, {{0, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(ub_partite(k33, {{0, 1, 2, 3}, {4, 5}}), std::invalid_argument);
}

TEST_CASE("universal_vertex_value") {
    auto w5 = universal_vertex_value(wheel_graph(5));
    REQUIRE(w5.has_value());
    CHECK(w5->value == 4); // 1 + chi(C_5)
    CHECK(w5->universal_count == 1);
    CHECK(is_total_dominator_coloring(wheel_graph(5), w5->witness));
    CHECK(w5->witness.k() == w5->value);
    CHECK(verify_cn_cover(wheel_graph(5), w5->witness));

    auto k4 = universal_vertex_value(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(k4->value == 4);
    CHECK(k4->universal_count == 4);

    CHECK_FALSE(universal_vertex_value(cycle_graph(6)).has_value());
}

TEST_CASE("when a universal vertex exists, chi_dt = chi_d = chi") {
    for (int rim = 3; rim <= 7; ++rim) {
        Graph w = wheel_graph(rim);
        int chi = chromatic_number_exact(w).value;
        CHECK(*tdc_exact(w).value == chi);
        CHECK(*dc_exact(w).value == chi);
        CHECK(universal_vertex_value(w)->value == chi);
    }
}

TEST_CASE("component bounds") {
    Graph two_c4 = disjoint_union(cycle_graph(4), cycle_graph(4));
    auto b = component_bounds(two_c4);
    CHECK(b.lower == 4);
    CHECK(b.upper == 4);
    CHECK(b.equality_expected);
    CHECK(*tdc_exact(two_c4).value == 4);

    Graph mix = disjoint_union(cycle_graph(4), cycle_graph(6));
    b = component_bounds(mix);
    CHECK(b.lower == 6);
    CHECK(b.upper == 6);
    CHECK(b.equality_expected); // one non-complete-bipartite component
    CHECK(*tdc_exact(mix).value == 6);

    b = component_bounds(cycle_graph(5));
    CHECK(b.lower == b.upper);
    CHECK(b.component_values == std::vector<int>{4});
}

TEST_CASE("bounds_report on K_{3,3}") {
    auto rec = bounds_report(complete_multipartite({3, 3}), {}, true);
    CHECK(*rec.obs_lb == 2);
    CHECK(*rec.alpha0_ub == 4);
    CHECK(*rec.gamma_t_chi_ub == 4);
    CHECK(*rec.partite_ub == 4);
    CHECK(rec.gamma_t == 2);
    CHECK(*rec.exact_value == 2);
    CHECK(*rec.components_lb == 2);
}

TEST_CASE("bounds_report on K_5 collapses to 5") {
    auto rec = bounds_report(complete_graph(5), {}, true);
    CHECK(*rec.obs_lb == 5);
    CHECK(*rec.alpha0_ub == 5);
    CHECK(*rec.gamma_t_chi_ub == 5);
    CHECK(*rec.partite_ub == 5);
    CHECK(*rec.universal_value == 5);
    CHECK(*rec.exact_value == 5);
}

TEST_CASE("bounds_report on C_7") {
    auto rec = bounds_report(cycle_graph(7), {}, true);
    int oracle_dc = oracle::naive_dc_number(cycle_graph(7));
    CHECK(*rec.obs_lb == std::max(oracle_dc, 4)); // gamma_t(C_7) = 4
    CHECK(*rec.exact_value == 5);
    CHECK(*rec.obs_lb <= 5);
    CHECK(rec.best_upper(7) >= 5);
}

TEST_CASE("sandwich holds with certificates on random connected graphs") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 10) {
        int n = 4 + static_cast<int>(uniform_below(rng, 4));
        Graph g = random_graph(n, 1, 2, rng());
        if (g.has_isolated_vertex() || !is_connected(g)) continue;
        auto rec = bounds_report(g, {}, true);
        int value = *rec.exact_value;
        CHECK(*rec.obs_lb <= value);
        CHECK(value <= rec.best_upper(n));
        CHECK(*rec.components_lb == value);
        CHECK(is_total_dominator_coloring(g, *rec.exact_witness));
        if (rec.alpha0_witness) CHECK(is_total_dominator_coloring(g, *rec.alpha0_witness));
        ++done;
    }
}

TEST_CASE("node budget produces a bounds-only report") {
    auto rep = tdc_exact(cycle_graph(12), SolveOptions{5});
    CHECK(rep.budget_exhausted);
    CHECK_FALSE(rep.value.has_value());
    CHECK_FALSE(rep.witness.has_value());
    CHECK(rep.lower_bound_used >= 4);
    CHECK(rep.upper_bound_used <= 12);
}

TEST_CASE("disconnected graphs solve directly") {
    Graph g = disjoint_union(path_graph(3), complete_graph(3));
    auto rep = tdc_exact(g);
    CHECK(*rep.value == oracle::naive_tdc_number(g));
    CHECK(is_total_dominator_coloring(g, *rep.witness));
}
