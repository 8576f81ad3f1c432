#pragma once

#include "rt/graph.hpp"

namespace rt {

/// Three-part extremal graph with no rainbow-triangle tiling of size k.
/// Parts X, Y, Z have sizes 6(n-2k)/7, (18k-2n)/7-1, 3(n-2k)/7+1 and occupy
/// the vertex ranges [0,|X|), [|X|,|X|+|Y|), [|X|+|Y|, n) in that order.
/// X spans a rainbow balanced complete bipartite graph, Y u Z a rainbow
/// complete graph, and each edge between x in X and y in Y carries a colour
/// reserved for y alone. Minimum colour degree comes out to (n+12k)/7-1.
/// Requires n/9 <= k <= n/3, n == 2k (mod 7) and positive part sizes;
/// violations are reported with the failing condition.
EdgeColouredGraph build_prop15(int n, int k);

struct Prop15Layout {
    int x_size, y_size, z_size;
};
Prop15Layout prop15_layout(int n, int k);

/// Generalisation for K_r: parts of sizes (r-1)m, (r-1)^2 m - 1, (r-2)m + 1
/// on (r^2-2)m vertices, X a rainbow complete (r-1)-partite graph with
/// classes of size m, Y u Z rainbow complete, X-Y edges coloured per Y
/// vertex. Minimum colour degree (r^2-r-1)m-1 and no perfect rainbow-K_r
/// tiling. Requires r >= 3 and m == 0 (mod r).
EdgeColouredGraph build_prop16(int r, int m);

struct Prop16Layout {
    int x_size, y_size, z_size, n;
};
Prop16Layout prop16_layout(int r, int m);

/// Properly coloured K_{n/2,n/2}: colour classes are the n/2 perfect
/// matchings of the round-robin (Latin square) decomposition, so every
/// vertex sees all n/2 colours and the graph has no triangle at all.
EdgeColouredGraph build_proper_bipartite(int n);

/// K_n with pairwise distinct colours.
EdgeColouredGraph build_rainbow_complete(int n);

}  // namespace rt
