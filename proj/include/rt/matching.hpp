#pragma once

#include <utility>
#include <vector>

#include "rt/graph.hpp"

namespace rt {

struct MatchingResult {
    int size = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Exact maximum matching (Edmonds blossom).
MatchingResult max_matching(const Graph& g);

/// Largest t guaranteed by e > max{C(2t-1,2), C(n,2) - C(n-t+1,2)}, or 0.
long eg_bound(long n, long e);

}  // namespace rt
