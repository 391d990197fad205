#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "chiforge/coloring.hpp"
#include "chiforge/graph.hpp"
#include "test_util.hpp"

using namespace chiforge;
using namespace testutil;

namespace {

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (mask >> bit & 1) g.add_edge(u, v);
    return g;
}

// Existential reading of minimality: no strictly smaller weight vector keeps chi.
bool existential_minimal(const WeightLatticeChi& table, const VertexWeights& q) {
    int chi = table.chi(q);
    VertexWeights sub(q.size(), 0);
    while (true) {
        if (sub != q && table.chi(sub) == chi) return false;
        std::size_t i = 0;
        while (i < q.size() && sub[i] == q[i]) sub[i++] = 0;
        if (i == q.size()) return true;
        ++sub[i];
    }
}

}  // namespace

TEST_CASE("clique and independence numbers") {
    CHECK(clique_number(complete_graph(6)) == 6);
    CHECK(clique_number(cycle_graph(5)) == 2);
    CHECK(clique_number(join(empty_graph(1), cycle_graph(5))) == 3);  // wheel
    CHECK(clique_number(empty_graph(4)) == 1);
    CHECK(clique_number(empty_graph(0)) == 0);
    CHECK(independence_number(cycle_graph(5)) == 2);
    CHECK(independence_number(path_graph(5)) == 3);
    CHECK(independence_number(complete_bipartite(3, 4)) == 4);

    CHECK(clique_number_weighted(complete_graph(3), {1, 2, 3}) == 6);
    CHECK(clique_number_weighted(cycle_graph(5), {2, 2, 2, 2, 2}) == 4);
    CHECK(clique_number_weighted(empty_graph(3), {5, 1, 1}) == 5);
    CHECK(clique_number_weighted(cycle_graph(5), {0, 0, 0, 0, 0}) == 0);
    CHECK(clique_number_weighted(cycle_graph(5), {3, 0, 4, 0, 0}) == 4);

    SplitMix64 rng(101);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng.below(8));
        Graph g = random_graph(n, 20 + static_cast<int>(rng.below(61)), rng);
        CHECK(clique_number(g) == brute_clique_number(to_matrix(g)));
        CHECK(independence_number(g) == brute_clique_number(to_matrix(complement(g))));
        VertexWeights q(n);
        for (int& w : q) w = static_cast<int>(rng.below(4));
        int best = 0;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            if (!is_clique(g, s)) continue;
            best = std::max(best, weight_of_set(q, s));
        }
        CHECK(clique_number_weighted(g, q) == best);
    }
}

TEST_CASE("unweighted engines match brute force exhaustively") {
    for (int n = 0; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            int want = brute_chromatic(g);
            CHECK(chi_mis_cover(g) == want);
            CHECK(chi_subset_dp(g) == want);
        }
    }
}

TEST_CASE("unweighted engines match brute force on random graphs") {
    SplitMix64 rng(202);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 6 + static_cast<int>(rng.below(4));
        Graph g = random_graph(n, 15 + static_cast<int>(rng.below(71)), rng);
        int want = brute_chromatic(g);
        auto result = chromatic_number(g);
        CHECK(result.chi == want);
        CHECK(result.certificate.palette == want);
        CHECK(result.certificate.validate(g));
    }
}

TEST_CASE("chromatic numbers of named graphs") {
    CHECK(chromatic_number(empty_graph(0)).chi == 0);
    CHECK(chromatic_number(empty_graph(1)).chi == 1);
    CHECK(chromatic_number(empty_graph(7)).chi == 1);
    CHECK(chromatic_number(path_graph(4)).chi == 2);
    CHECK(chromatic_number(cycle_graph(5)).chi == 3);
    CHECK(chromatic_number(cycle_graph(6)).chi == 2);
    CHECK(chromatic_number(cycle_graph(7)).chi == 3);
    CHECK(chromatic_number(complement(cycle_graph(7))).chi == 4);
    CHECK(chromatic_number(complete_graph(6)).chi == 6);
    CHECK(chromatic_number(complete_bipartite(3, 3)).chi == 2);
    CHECK(chromatic_number(join(empty_graph(1), cycle_graph(5))).chi == 4);  // wheel

    Graph doubled = expansion(cycle_graph(5), {2, 2, 2, 2, 2});
    CHECK(chromatic_number(doubled).chi == 5);
    CHECK(brute_chromatic(doubled) == 5);
    CHECK(clique_number(doubled) == 4);
    CHECK(doubled.max_degree() == 5);

    Graph joined = join(cycle_graph(5), cycle_graph(5));
    CHECK(chromatic_number(joined).chi == 6);
    CHECK(brute_chromatic(joined) == 6);
    CHECK(clique_number(joined) == 4);
}

TEST_CASE("engine a matches subset dp on mid-size graphs") {
    SplitMix64 rng(303);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 13 + static_cast<int>(rng.below(4));
        Graph g = random_graph(n, 30 + static_cast<int>(rng.below(41)), rng);
        CHECK(chi_mis_cover(g) == chi_subset_dp(g));
    }
}

TEST_CASE("subset chi table") {
    Graph g = cycle_graph(5);
    auto dp = chi_table(g);
    CHECK(dp[g.vertices()] == 3);
    CHECK(dp[0] == 0);
    for (int u = 0; u < 5; ++u) CHECK(dp[g.vertices() & ~bits::bit(u)] == 2);  // paths

    SplitMix64 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 1 + static_cast<int>(rng.below(7));
        Graph h = random_graph(n, 50, rng);
        auto table = chi_table(h);
        for (int probe = 0; probe < 8; ++probe) {
            std::uint64_t s = rng.next() & h.vertices();
            CHECK(table[s] == brute_chromatic(matrix_subset(to_matrix(h), s)));
        }
    }
}

TEST_CASE("weighted chromatic routes agree on pinned instances") {
    Graph c5 = cycle_graph(5);
    VertexWeights q{3, 2, 3, 2, 2};
    CHECK(chi_weighted_direct(c5, q).chi == 6);
    CHECK(chi_weighted_via_expansion(c5, q) == 6);
    CHECK(chi_weighted_lattice(c5, q) == 6);
    CHECK(brute_chi_weighted(c5, q) == 6);
    CHECK(chromatic_number_weighted(c5, q).chi == 6);

    CHECK(chromatic_number_weighted(complete_graph(2), {2, 3}).chi == 5);
    CHECK(chromatic_number_weighted(c5, {0, 0, 0, 0, 0}).chi == 0);
    CHECK(chromatic_number_weighted(c5, {1, 1, 1, 1, 1}).chi == 3);
    CHECK(chromatic_number_weighted(c5, {2, 2, 2, 2, 2}).chi == 5);
    CHECK(chromatic_number_weighted(empty_graph(3), {4, 2, 7}).chi == 7);
    CHECK(chromatic_number_weighted(path_graph(3), {2, 3, 2}).chi == 5);
    CHECK(chromatic_number_weighted(c5, {3, 0, 4, 0, 0}).chi == 4);
}

TEST_CASE("weighted chromatic routes agree on random instances") {
    SplitMix64 rng(505);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, 20 + static_cast<int>(rng.below(61)), rng);
        VertexWeights q(n);
        for (int& w : q) w = static_cast<int>(rng.below(4));
        auto direct = chi_weighted_direct(g, q);
        CHECK(direct.certificate.palette == direct.chi);
        CHECK(direct.certificate.validate(g, q));
        CHECK(chi_weighted_via_expansion(g, q) == direct.chi);
        CHECK(chi_weighted_lattice(g, q) == direct.chi);
        // the unpruned oracle only copes with small expansions
        if (weight_total(q) <= 10) CHECK(brute_chi_weighted(g, q) == direct.chi);
    }
}

TEST_CASE("colouring certificates") {
    Graph g = cycle_graph(5);
    auto unit = chromatic_number(g);
    CHECK(unit.certificate.validate(g));
    CHECK(unit.certificate.palette == 3);

    ColoringCertificate bad = unit.certificate;
    bad.colors[1] = bad.colors[0];  // adjacent vertices share a colour
    CHECK_FALSE(bad.validate(g));

    ColoringCertificate wrong_size = unit.certificate;
    wrong_size.colors[2].push_back(wrong_size.palette - 1);
    CHECK_FALSE(wrong_size.validate(g));

    VertexWeights q{2, 1, 2, 1, 1};
    auto weighted = chi_weighted_direct(g, q);
    CHECK(weighted.certificate.validate(g, q));
    for (int u = 0; u < 5; ++u)
        CHECK(static_cast<int>(weighted.certificate.colors[u].size()) == q[u]);

    auto k2 = chromatic_number(complete_graph(2));
    CHECK(certificate_json(k2.certificate) == R"({"colours":[[0],[1]],"k":2})");
    auto parsed = nlohmann::json::parse(certificate_json(weighted.certificate));
    CHECK(parsed["k"].get<int>() == weighted.chi);
    CHECK(parsed["colours"].size() == 5);
}

TEST_CASE("weight lattice table") {
    Graph c5 = cycle_graph(5);
    WeightLatticeChi table(c5, {3, 3, 3, 3, 3});
    CHECK(table.chi({3, 2, 3, 2, 2}) == 6);
    CHECK(table.chi({1, 1, 1, 1, 1}) == 3);
    CHECK(table.chi({0, 0, 0, 0, 0}) == 0);
    CHECK(table.chi({3, 3, 3, 3, 3}) == 8);

    VertexWeights probe(5, 0);
    do {
        CHECK(table.chi(probe) == brute_chi_weighted(c5, probe));
        int i = 0;
        while (i < 5 && probe[i] == 2) probe[i++] = 0;
        if (i == 5) break;
        ++probe[i];
    } while (true);

    CHECK(table.chi_of_subset({3, 2, 3, 2, 2}, bits::bit(0) | bits::bit(2)) ==
          table.chi({3, 0, 3, 0, 0}));
    CHECK(table.chi_of_subset({1, 1, 1, 1, 1}, c5.vertices()) == 3);
    CHECK_THROWS_AS(table.chi({1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(table.chi({4, 0, 0, 0, 0}), std::invalid_argument);

    SplitMix64 rng(606);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));
        Graph g = random_graph(n, 50, rng);
        VertexWeights cap(n);
        for (int& w : cap) w = static_cast<int>(rng.below(4));
        WeightLatticeChi t(g, cap);
        VertexWeights q(n);
        for (int i = 0; i < n; ++i) q[i] = static_cast<int>(rng.below(cap[i] + 1));
        CHECK(t.chi(q) == brute_chi_weighted(g, q));
    }
}

TEST_CASE("closed form for weighted five-cycles") {
    auto even = chi_weighted_c5_closed_form({2, 2, 2, 2, 2});
    CHECK(even.value == 5);
    CHECK(even.bound == 5);
    auto unit = chi_weighted_c5_closed_form({1, 1, 1, 1, 1});
    CHECK(unit.value == 3);
    CHECK(unit.bound == 3);
    auto mixed = chi_weighted_c5_closed_form({3, 2, 3, 2, 2});
    CHECK(mixed.value == 6);
    CHECK(mixed.bound == 6);  // heaviest adjacent pair weighs 5
    auto zero = chi_weighted_c5_closed_form({0, 0, 0, 0, 0});
    CHECK(zero.value == 0);
    CHECK(zero.bound == 0);
    CHECK_THROWS_AS(chi_weighted_c5_closed_form({1, 1, 1}), std::invalid_argument);

    // the alternating ceiling/floor profile meets the bound exactly
    Graph c5 = cycle_graph(5);
    for (int omega = 1; omega <= 8; ++omega) {
        int hi = (omega + 1) / 2, lo = omega / 2;
        VertexWeights q{hi, lo, hi, lo, lo};
        CHECK(clique_number_weighted(c5, q) == omega);
        auto f = chi_weighted_c5_closed_form(q);
        CHECK(f.value == f.bound);
        CHECK(chi_weighted_direct(c5, q).chi == f.value);
    }

    SplitMix64 rng(707);
    for (int trial = 0; trial < 300; ++trial) {
        VertexWeights q(5);
        for (int& w : q) w = static_cast<int>(rng.below(5));
        auto f = chi_weighted_c5_closed_form(q);
        CHECK(f.value == chi_weighted_direct(c5, q).chi);
        CHECK(f.value <= f.bound);
    }
}

TEST_CASE("critical graphs") {
    CHECK(is_critical(empty_graph(1)));
    CHECK(is_critical(complete_graph(4)));
    CHECK(is_critical(complete_graph(6)));
    CHECK(is_critical(cycle_graph(5)));
    CHECK(is_critical(cycle_graph(7)));
    CHECK(is_critical(join(empty_graph(1), cycle_graph(5))));  // wheel
    CHECK_FALSE(is_critical(path_graph(5)));
    CHECK_FALSE(is_critical(cycle_graph(4)));
    CHECK_FALSE(is_critical(cycle_graph(6)));
    CHECK_FALSE(is_critical(join(empty_graph(1), path_graph(4))));  // gem
    CHECK_FALSE(is_critical(empty_graph(2)));
    CHECK_THROWS_AS(is_critical(empty_graph(0)), std::invalid_argument);

    // deleting any vertex of a critical graph drops chi by exactly one
    SplitMix64 rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.below(6));
        Graph g = random_graph(n, 40 + static_cast<int>(rng.below(41)), rng);
        int chi = brute_chromatic(g);
        bool crit = true;
        for (int u = 0; u < n && crit; ++u)
            crit = brute_chromatic(matrix_subset(to_matrix(g), g.vertices() & ~bits::bit(u))) ==
                   chi - 1;
        CHECK(is_critical(g) == crit);
        CHECK(is_critical(g) == is_weight_minimal(g, unit_weights(n)));
    }
}

TEST_CASE("weight minimality on pinned instances") {
    Graph c5 = cycle_graph(5);
    CHECK(is_weight_minimal(c5, {1, 1, 1, 1, 1}));
    CHECK(is_weight_minimal(c5, {2, 1, 2, 1, 1}));
    CHECK_FALSE(is_weight_minimal(c5, {2, 2, 2, 2, 2}));
    CHECK_FALSE(is_weight_minimal(path_graph(5), {1, 1, 1, 1, 1}));
    CHECK(is_weight_minimal(c5, {0, 0, 0, 0, 0}));
    CHECK(is_weight_minimal(complete_graph(3), {1, 2, 3}));

    VertexWeights trimmed = minimalize_weights(c5, {2, 2, 2, 2, 2});
    CHECK(trimmed == VertexWeights{1, 2, 2, 2, 2});
    CHECK(chi_weighted_lattice(c5, trimmed) == 5);
    CHECK(is_weight_minimal(c5, trimmed));
}

TEST_CASE("minimalize keeps chi and reaches a minimal vector") {
    SplitMix64 rng(909);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + static_cast<int>(rng.below(6));
        Graph g = random_graph(n, 20 + static_cast<int>(rng.below(61)), rng);
        VertexWeights q(n);
        for (int& w : q) w = static_cast<int>(rng.below(4));
        VertexWeights m = minimalize_weights(g, q);
        WeightLatticeChi table(g, q);
        CHECK(table.chi(m) == table.chi(q));
        for (int i = 0; i < n; ++i) CHECK(m[i] <= q[i]);
        ChiOracle oracle = [&table](const VertexWeights& v) { return table.chi(v); };
        CHECK(is_weight_minimal(g, m, oracle));
    }
}

TEST_CASE("decrement minimality equals existential minimality") {
    for (int n = 1; n <= 4; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            Graph g = graph_from_mask(n, mask);
            WeightLatticeChi table(g, VertexWeights(n, 2));
            ChiOracle oracle = [&table](const VertexWeights& v) { return table.chi(v); };
            VertexWeights q(n, 0);
            while (true) {
                CHECK(is_weight_minimal(g, q, oracle) == existential_minimal(table, q));
                int i = 0;
                while (i < n && q[i] == 2) q[i++] = 0;
                if (i == n) break;
                ++q[i];
            }
        }
    }

    SplitMix64 rng(1010);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 5 + static_cast<int>(rng.below(2));
        Graph g = random_graph(n, 30 + static_cast<int>(rng.below(41)), rng);
        VertexWeights cap(n, 2);
        WeightLatticeChi table(g, cap);
        ChiOracle oracle = [&table](const VertexWeights& v) { return table.chi(v); };
        for (int probe = 0; probe < 20; ++probe) {
            VertexWeights q(n);
            for (int& w : q) w = static_cast<int>(rng.below(3));
            CHECK(is_weight_minimal(g, q, oracle) == existential_minimal(table, q));
        }
    }
}

TEST_CASE("degree-clique ceiling") {
    CHECK(reed_ceiling(cycle_graph(5)) == 3);
    CHECK(reed_bound_holds(cycle_graph(5)));
    CHECK(reed_ceiling(complete_graph(5)) == 5);
    CHECK(reed_bound_holds(complete_graph(5)));
    CHECK(reed_ceiling(complete_bipartite(3, 3)) == 3);

    Graph doubled = expansion(cycle_graph(5), {2, 2, 2, 2, 2});
    CHECK(reed_ceiling(doubled) == 5);
    CHECK(reed_bound_holds(doubled));  // tight: chi is also 5

    SplitMix64 rng(1111);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng.below(8));
        Graph g = random_graph(n, 30 + static_cast<int>(rng.below(51)), rng);
        CHECK(reed_ceiling(g) == (g.max_degree() + clique_number(g) + 2) / 2);
    }
}

TEST_CASE("solver budgets") {
    CHECK_THROWS_AS(chromatic_number(empty_graph(kSolverMaxVertices + 1)), BudgetError);
    CHECK_THROWS_AS(chi_table(empty_graph(21)), BudgetError);
    CHECK_THROWS_AS(chi_weighted_direct(complete_graph(2), {20, 20}), BudgetError);
    CHECK_THROWS_AS(chi_weighted_via_expansion(complete_graph(2), {20, 20}), BudgetError);
    CHECK_THROWS_AS(WeightLatticeChi(complete_graph(8), VertexWeights(8, 20)), BudgetError);
    CHECK_THROWS_AS(chi_weighted_direct(complete_graph(2), {2, -1}), std::invalid_argument);
    CHECK(chi_mis_cover(cycle_graph(kSolverMaxVertices)) == 2);
    CHECK(chi_subset_dp(cycle_graph(18)) == 2);
}
