#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rt/constructions.hpp"
#include "rt/graph.hpp"
#include "rt/random.hpp"

#include "oracles.hpp"

using namespace rt;

TEST_CASE("prop15 layout and colour degree at the paper's sizes") {
    auto lay = prop15_layout(13, 3);
    CHECK(lay.x_size == 6);
    CHECK(lay.y_size == 3);
    CHECK(lay.z_size == 4);
    CHECK(degree_profile(build_prop15(13, 3)).min_colour_degree == 6);

    lay = prop15_layout(15, 4);
    CHECK(lay.x_size == 6);
    CHECK(lay.y_size == 5);
    CHECK(lay.z_size == 4);
    CHECK(degree_profile(build_prop15(15, 4)).min_colour_degree == 8);
}

TEST_CASE("prop15 closed-form colour degree across the full valid grid") {
    int pairs = 0;
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; 3 * k <= n; ++k) {
            EdgeColouredGraph g;
            try {
                g = build_prop15(n, k);
            } catch (const std::invalid_argument&) {
                continue;
            }
            ++pairs;
            CHECK(g.n() == n);
            CHECK(degree_profile(g).min_colour_degree == (n + 12 * k) / 7 - 1);
        }
    CHECK(pairs > 0);
}

TEST_CASE("prop15 rejects bad parameters with the failing condition") {
    CHECK_THROWS_WITH_AS(build_prop15(14, 3), "need n == 2k (mod 7)", std::invalid_argument);
    CHECK_THROWS_AS(build_prop15(23, 8), std::invalid_argument);  // k > n/3
    CHECK_THROWS_AS(build_prop15(9, 1), std::invalid_argument);   // Y empty
    CHECK_THROWS_AS(build_prop15(100, 3), std::invalid_argument);  // k < n/9
}

TEST_CASE("prop15: rainbow triangles through X always use two Y vertices") {
    for (auto [n, k] : {std::pair{13, 3}, std::pair{21, 7}}) {
        auto g = build_prop15(n, k);
        auto lay = prop15_layout(n, k);
        for (const auto& t : oracle::rainbow_cliques(g, 3)) {
            bool meets_x = t[0] < lay.x_size;
            if (!meets_x) continue;
            int in_y = 0;
            for (int v : t)
                if (v >= lay.x_size && v < lay.x_size + lay.y_size) ++in_y;
            CHECK(in_y == 2);
        }
    }
}

TEST_CASE("prop16 sizes and colour degree") {
    auto lay = prop16_layout(3, 3);
    CHECK(lay.n == 21);
    CHECK(degree_profile(build_prop16(3, 3)).min_colour_degree == 14);

    lay = prop16_layout(4, 4);
    CHECK(lay.n == 56);
    CHECK(degree_profile(build_prop16(4, 4)).min_colour_degree == 43);

    CHECK(degree_profile(build_prop16(3, 6)).min_colour_degree == 29);

    CHECK_THROWS_AS(build_prop16(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_prop16(3, 4), std::invalid_argument);  // m not divisible by r
}

TEST_CASE("prop16: rainbow K_r through X uses r-1 Y vertices") {
    auto g = build_prop16(3, 3);
    auto lay = prop16_layout(3, 3);
    for (const auto& t : oracle::rainbow_cliques(g, 3)) {
        if (t[0] >= lay.x_size) continue;
        int in_y = 0;
        for (int v : t)
            if (v >= lay.x_size && v < lay.x_size + lay.y_size) ++in_y;
        CHECK(in_y == 2);
    }
}

TEST_CASE("proper bipartite construction") {
    auto g = build_proper_bipartite(6);
    CHECK(degree_profile(g).min_colour_degree == 3);
    CHECK(oracle::rainbow_cliques(g, 3).empty());  // triangle-free

    auto tiny = build_proper_bipartite(2);
    CHECK(tiny.edge_count() == 1);
    CHECK(tiny.min_colour_degree() == 1);

    auto g8 = build_proper_bipartite(8);
    for (int v = 0; v < 8; ++v) CHECK(g8.colour_degree(v) == 4);
    // Proper: colour degree equals degree everywhere.
    for (int v = 0; v < 8; ++v) CHECK(g8.colour_degree(v) == g8.degree(v));

    CHECK_THROWS_AS(build_proper_bipartite(5), std::invalid_argument);
}

TEST_CASE("rainbow complete") {
    auto k3 = build_rainbow_complete(3);
    std::vector<int> all{0, 1, 2};
    auto rep = induced_check(k3, all);
    CHECK(rep.complete);
    CHECK(rep.rainbow);
    CHECK(build_rainbow_complete(1).edge_count() == 0);
    CHECK(degree_profile(build_rainbow_complete(6)).min_colour_degree == 5);
}

TEST_CASE("random coloured graphs") {
    const long full = 10 * 9 / 2;
    auto rainbow = random_coloured(10, 1.0, full, 42, true);
    CHECK(rainbow.edge_count() == full);
    CHECK(rainbow.min_colour_degree() == 9);  // injective colouring of K_10

    CHECK(random_coloured(10, 0.0, 5, 42).edge_count() == 0);

    auto a = random_coloured(12, 0.6, 7, 123);
    auto b = random_coloured(12, 0.6, 7, 123);
    CHECK(a == b);
    auto c = random_coloured(12, 0.6, 7, 124);
    CHECK_FALSE(a == c);

    CHECK_THROWS_AS(random_coloured(10, 0.5, 3, 1, true), std::invalid_argument);
}

TEST_CASE("random digraph with repaired out-degree") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto d = random_digraph_min_out(9, 6, 0.3, seed);
        CHECK(d.min_out_degree() >= 6);
        auto again = random_digraph_min_out(9, 6, 0.3, seed);
        CHECK(d == again);
    }
}
