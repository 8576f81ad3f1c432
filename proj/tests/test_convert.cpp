#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "rt/constructions.hpp"
#include "rt/convert.hpp"
#include "rt/random.hpp"

#include "oracles.hpp"

using namespace rt;

TEST_CASE("conversion of a rainbow K_4 is the complete digraph") {
    auto res = convert(build_rainbow_complete(4));
    CHECK(res.h.arc_count() == 12);
    CHECK(res.h.min_out_degree() == 3);
    CHECK(res.guarantees.all());
}

TEST_CASE("conversion of a monochromatic star orients leaves inward") {
    EdgeColouredGraph star(6);
    for (int leaf = 1; leaf < 6; ++leaf) star.add_edge(0, leaf, 9);
    auto res = convert(star);
    CHECK(res.h.arc_count() == 5);  // 5 leaves in, no back-arc: 5^2 > 6
    for (int leaf = 1; leaf < 6; ++leaf) {
        CHECK(res.h.has_arc(leaf, 0));
        CHECK_FALSE(res.h.has_arc(0, leaf));
    }
    CHECK(res.guarantees.all());
}

TEST_CASE("small stars get a back-arc to the least leaf") {
    // Critical by hand: every deletion drops some colour degree below 2.
    EdgeColouredGraph g(4);
    g.add_edge(0, 1, 10);
    g.add_edge(0, 2, 10);  // two-leaf star at 0, 2^2 <= 4
    g.add_edge(0, 3, 11);
    g.add_edge(1, 3, 12);
    g.add_edge(2, 3, 12);
    CHECK(critical_subgraph(g) == g);
    auto res = convert(g);
    CHECK(res.h.has_arc(1, 0));
    CHECK(res.h.has_arc(2, 0));
    CHECK(res.h.has_arc(0, 1));  // back-arc to the least leaf only
    CHECK_FALSE(res.h.has_arc(0, 2));
    CHECK(res.guarantees.all());
}

TEST_CASE("conversion bound on the extremal construction") {
    auto g = build_prop15(13, 3);
    auto res = convert(g);
    // delta^c - sqrt(n) = 6 - sqrt(13), so min out-degree must be >= 3.
    CHECK(res.h.min_out_degree() >= 3);
    CHECK(res.guarantees.all());
    CHECK(verify_conversion(g, res.h).all());
}

TEST_CASE("verify_conversion on edge cases") {
    EdgeColouredGraph empty(5);
    auto res = convert(empty);
    CHECK(res.h.arc_count() == 0);
    CHECK(res.guarantees.all());

    auto kn = build_rainbow_complete(7);
    auto res2 = convert(kn);
    CHECK(res2.guarantees.max_colour_path_pairs == 0);
    CHECK(res2.guarantees.all());
}

TEST_CASE("conversion guarantees on random instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        int n = 5 + static_cast<int>(seed % 14);
        auto g = random_coloured(n, 0.7, 1 + static_cast<long>(seed % 9), seed);
        auto res = convert(g);
        CHECK(res.guarantees.all());
        // Out-neighbourhood colours pairwise distinct, recounted by hand.
        for (int u = 0; u < n; ++u) {
            std::set<long> colours;
            int outs = 0;
            for (int v = 0; v < n; ++v)
                if (v != u && res.h.has_arc(u, v)) {
                    ++outs;
                    colours.insert(g.colour_of(u, v));
                }
            CHECK(static_cast<int>(colours.size()) == outs);
        }
        // Stars recorded by the conversion split the critical subgraph.
        long star_edges = 0;
        for (const auto& s : res.stars) star_edges += static_cast<long>(s.leaves.size());
        CHECK(star_edges == critical_subgraph(g).edge_count());
    }
}

TEST_CASE("bad triple counts and the appendix bounds") {
    auto kn = build_rainbow_complete(8);
    auto res = convert(kn);
    CHECK(count_bad_triples(kn, res.h) == 0);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        int n = 6 + static_cast<int>(seed % 15);
        auto g = random_coloured(n, 0.8, 1 + static_cast<long>(seed % 6), seed);
        auto res2 = convert(g);
        long total = count_bad_triples(g, res2.h);
        CHECK(total <= 3L * n * n);
        for (int v = 0; v < n; ++v) {
            long through = count_bad_triples(g, res2.h, v);
            CHECK(through * through <= 9L * n * n * n);  // through <= 3 n^{3/2}
        }
    }
}

TEST_CASE("family classification for triples") {
    Digraph complete(3);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v)
            if (u != v) complete.add_arc(u, v);
    std::vector<int> s{0, 1, 2};
    auto rep = classify_family(complete, s, 3, 1, true);
    CHECK(rep.member);
    CHECK(rep.contains_c3);

    Digraph j3(3);
    j3.add_arc(0, 1);
    j3.add_arc(0, 2);
    j3.add_arc(1, 2);
    j3.add_arc(2, 1);
    rep = classify_family(j3, s, 3, 1, true);
    CHECK(rep.member);
    CHECK(rep.contains_j3);
    CHECK_FALSE(rep.contains_c3);

    Digraph trans(3);
    trans.add_arc(0, 1);
    trans.add_arc(0, 2);
    trans.add_arc(1, 2);
    rep = classify_family(trans, s, 3, 1, true);
    CHECK_FALSE(rep.member);

    std::vector<int> wrong{0, 1};
    CHECK_THROWS_AS((void)classify_family(complete, wrong, 3, 1, true), std::invalid_argument);
}

TEST_CASE("triple family membership is exactly C_3 or J_3 over all 64 digraphs") {
    // All 2^6 digraphs on three labelled vertices.
    const std::pair<int, int> arcs[6] = {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}};
    std::vector<int> s{0, 1, 2};
    for (int mask = 0; mask < 64; ++mask) {
        Digraph d(3);
        for (int b = 0; b < 6; ++b)
            if (mask >> b & 1) d.add_arc(arcs[b].first, arcs[b].second);
        auto rep = classify_family(d, s, 3, 1, true);
        CHECK(rep.member == (rep.complete_base && rep.min_out_degree >= 1));
        if (rep.complete_base)
            CHECK(rep.member == (rep.contains_c3 || rep.contains_j3));
        else
            CHECK_FALSE(rep.member);
    }
}

TEST_CASE("starred family drops the base requirement") {
    Digraph d(3);  // double edge 0<->1, arc 2->0: min out-degree 1, base not complete
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    d.add_arc(2, 0);
    std::vector<int> s{0, 1, 2};
    CHECK_FALSE(classify_family(d, s, 3, 1, true).member);
    CHECK(classify_family(d, s, 3, 1, false).member);
}

TEST_CASE("pair density matrix validation and round trip") {
    PairDensityMatrix m;
    m.k = 3;
    m.d.assign(9, Rational(0));
    m.dpm.assign(9, Rational(0));
    m.set_density(0, 1, make_rational(1, 2));
    m.set_density(1, 0, make_rational(1, 3));
    m.set_double_density(0, 1, make_rational(1, 4));
    m.set_density(1, 2, make_rational(3, 10));
    m.validate();

    auto again = parse_pdm_string(write_pdm(m));
    CHECK(again.k == 3);
    CHECK(again.density(1, 0) == make_rational(1, 3));
    CHECK(again.double_density(1, 0) == make_rational(1, 4));
    CHECK(write_pdm(again) == write_pdm(m));

    m.set_double_density(1, 2, make_rational(2, 5));  // exceeds min(d, d')
    CHECK_THROWS_AS(m.validate(), std::invalid_argument);

    CHECK_THROWS_AS(parse_pdm_string("pdm 2\nd 0 2 1/2\n"), ParseError);
    CHECK_THROWS_AS(parse_pdm_string("d 0 1 1/2\n"), ParseError);
}

TEST_CASE("reduced digraph sampler branches") {
    PairDensityMatrix m;
    m.k = 2;
    m.d.assign(4, Rational(0));
    m.dpm.assign(4, Rational(0));
    m.set_density(0, 1, make_rational(1, 2));
    m.set_density(1, 0, make_rational(1, 2));
    m.set_double_density(0, 1, make_rational(1, 2));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto d = sample_reduced_digraph(m, seed);
        CHECK(d.has_arc(0, 1));
        CHECK(d.has_arc(1, 0));
    }
    // Double-edge branch is not the reinterpreted one; strict mode passes.
    CHECK_NOTHROW(sample_reduced_digraph(m, 1, true));

    PairDensityMatrix one_way;
    one_way.k = 2;
    one_way.d.assign(4, Rational(0));
    one_way.dpm.assign(4, Rational(0));
    one_way.set_density(0, 1, make_rational(3, 10));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto d = sample_reduced_digraph(one_way, seed);
        CHECK(d.has_arc(0, 1));
        CHECK_FALSE(d.has_arc(1, 0));
    }
    CHECK_THROWS_AS(sample_reduced_digraph(one_way, 1, true), std::runtime_error);

    PairDensityMatrix zero;
    zero.k = 3;
    zero.d.assign(9, Rational(0));
    zero.dpm.assign(9, Rational(0));
    CHECK(sample_reduced_digraph(zero, 7).arc_count() == 0);

    CHECK(sample_reduced_digraph(m, 42) == sample_reduced_digraph(m, 42));
}

TEST_CASE("reduced digraph sampler frequency matches the density ratio") {
    PairDensityMatrix m;
    m.k = 2;
    m.d.assign(4, Rational(0));
    m.dpm.assign(4, Rational(0));
    m.set_density(0, 1, make_rational(3, 10));
    m.set_density(1, 0, make_rational(1, 10));
    // P(0->1) = (3/10)/(4/10) = 3/4.
    const int samples = 10000;
    int forward = 0;
    for (int i = 0; i < samples; ++i)
        if (sample_reduced_digraph(m, 1000 + i).has_arc(0, 1)) ++forward;
    const double p = 0.75;
    const double sigma = std::sqrt(p * (1 - p) * samples);
    CHECK(std::abs(forward - p * samples) <= 3 * sigma);
}
