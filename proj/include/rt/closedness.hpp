#pragma once

#include <utility>
#include <vector>

#include "rt/graph.hpp"
#include "rt/rational.hpp"

namespace rt {

/// Number of (x,y;K_r)-connectors of length s: sets S disjoint from {x,y}
/// with |S| = rs-1 such that both G[S u {x}] and G[S u {y}] have perfect
/// rainbow-K_r-tilings. Supported for s in {1,2} (exhaustive enumeration).
long count_connectors(const EdgeColouredGraph& g, int x, int y, int r, int s);

struct ClosednessReport {
    int r = 0;
    int s = 0;
    long min_count = 0;
    std::pair<int, int> worst_pair{-1, -1};
    Rational eta;  // min_count / n^{rs-1}; a finite-n ratio, no asymptotic claim
};

ClosednessReport closedness_report(const EdgeColouredGraph& g, int r, int s);

/// Weak s-connectivity relation of a digraph, computed as the least fixpoint
/// of: seeds (pairs joined through a common K_{3,1} pair of anchors, s = 1),
/// overlap-union at cost 2s, composition through two K_{3,1} triples at cost
/// 2s+1, and single-vertex extension at cost 3s+2, never exceeding s_max.
/// The recorded value is an upper bound on the smallest witnessing s.
struct WeakClosure {
    int n = 0;
    int s_max = 0;
    std::vector<int> certified;  // n*n; 0 = not certified, else smallest derived s

    int at(int x, int y) const { return certified[static_cast<std::size_t>(x) * n + y]; }
    bool pair_certified(int x, int y) const { return at(x, y) > 0; }
    /// Connected components of the certified relation (size >= 2).
    std::vector<std::vector<int>> classes() const;
};

WeakClosure weak_closure(const Digraph& d, int s_max);

/// Ground-truth oracle for s in {1,2}: direct enumeration over vertex
/// multisets W of size 3s-1 such that both {x} u W and {x'} u W partition
/// into K_{3,1} triples. W may contain the opposite anchor; the anchor-free
/// variant is reported alongside.
struct WeakPairWitness {
    bool found = false;
    std::vector<int> witness;  // multiset, ascending
    bool anchor_free_found = false;
    std::vector<int> anchor_free_witness;
};

WeakPairWitness verify_weak_pair(const Digraph& d, int x, int xp, int s);

}  // namespace rt
