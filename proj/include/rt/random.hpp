#pragma once

#include <cstdint>
#include <random>

#include "rt/graph.hpp"

namespace rt {

/// All generators use mt19937_64 with a fixed traversal order, so output is
/// a pure function of the arguments on every platform.

/// Each pair kept independently with probability p; colour uniform in [0,q).
/// With injective=true, edges receive pairwise distinct colours drawn from
/// [0,q) (q must cover the edge count).
EdgeColouredGraph random_coloured(int n, double p, long q, std::uint64_t seed,
                                  bool injective = false);

Digraph random_digraph(int n, double p, std::uint64_t seed);

/// Arc-density p sample followed by arc repair: any vertex short of dmin
/// receives uniformly chosen missing out-arcs until it reaches dmin. This is
/// close to, but not exactly, uniform over digraphs with min out-degree dmin;
/// the desk checks only need a seeded, degree-constrained source.
Digraph random_digraph_min_out(int n, int dmin, double p, std::uint64_t seed);

/// Every pair oriented one way, uniformly.
Digraph random_tournament(int n, std::uint64_t seed);

Digraph random_tournament_min_out(int n, int dmin, std::uint64_t seed, int max_tries = 100000);

/// Deterministic coin with P(true) = p, via a 53-bit threshold.
bool coin(std::mt19937_64& rng, double p);

}  // namespace rt
