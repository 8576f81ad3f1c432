#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rt/graph.hpp"

namespace rt {

/// Lexicographically least S with G[S] a rainbow K_r, or nullopt after
/// exhausting the search space.
std::optional<std::vector<int>> find_rainbow_clique(const EdgeColouredGraph& g, int r);

enum class Thm13Kind {
    hypothesis_not_met,     // delta^c < n/2
    exceptional_bipartite,  // properly coloured K_{n/2,n/2}
    exceptional_k4,
    exceptional_k4_minus_e,
    rainbow_triangle,
    counterexample,  // would falsify the theorem; used as a test oracle
};

struct Thm13Verdict {
    Thm13Kind kind;
    std::array<int, 3> triangle{-1, -1, -1};
};

std::string to_string(Thm13Kind k);

/// Requires n >= 3. The n=4 underlying K_4 / K_4-e cases with delta^c >= 2
/// are flagged exceptional without further colour analysis.
Thm13Verdict theorem13_verdict(const EdgeColouredGraph& g);

/// True iff the underlying graph is a complete balanced bipartite graph and
/// the colouring is proper.
bool is_properly_coloured_balanced_bipartite(const EdgeColouredGraph& g);

struct TransversalResult {
    bool precondition_ok = false;
    std::string precondition_error;
    bool found = false;
    std::vector<int> clique;            // one vertex per part when found
    std::vector<std::vector<int>> parts;
};

/// Rainbow K_r with one vertex per part of a properly coloured complete
/// r-partite graph (parts recovered as complement components, each of size
/// >= r^3). Search failure on valid input would falsify the underlying
/// extraction lemma and is reported rather than asserted.
TransversalResult rainbow_transversal(const EdgeColouredGraph& g);

/// Lexicographically least triple T with complete base and min out-degree
/// >= 1 in D[T], or nullopt.
std::optional<std::array<int, 3>> find_directed_triangle(const Digraph& d);

}  // namespace rt
