#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rt/graph.hpp"

namespace rt {

/// Subset-scan kernels. Each scan comes in a serial reference version and an
/// OpenMP version that splits the range by first vertex; the parallel output
/// is bucket-concatenated in first-vertex order, so both produce the same
/// lexicographically sorted result. The dispatching name picks the parallel
/// version on multi-core hosts.

struct EnumerationResult {
    std::vector<std::vector<int>> sets;  // each sorted ascending, list in lex order
    bool capped = false;                 // true when enumeration stopped at the cap
};

constexpr std::size_t kDefaultCopyCap = 1000000;

/// Vertex sets S with G[S] a rainbow K_r.
EnumerationResult rainbow_cliques_serial(const EdgeColouredGraph& g, int r,
                                         std::size_t cap = kDefaultCopyCap);
EnumerationResult rainbow_cliques_parallel(const EdgeColouredGraph& g, int r,
                                           std::size_t cap = kDefaultCopyCap);
EnumerationResult rainbow_cliques(const EdgeColouredGraph& g, int r,
                                  std::size_t cap = kDefaultCopyCap);

/// Vertex sets S with G[S] a K_q.
EnumerationResult cliques_serial(const Graph& g, int q, std::size_t cap = kDefaultCopyCap);
EnumerationResult cliques_parallel(const Graph& g, int q, std::size_t cap = kDefaultCopyCap);
EnumerationResult cliques(const Graph& g, int q, std::size_t cap = kDefaultCopyCap);

/// Membership of D[S] in the digraph family with min out-degree >= min_out
/// (and complete base graph when require_complete_base).
bool family_member(const Digraph& d, std::span<const int> s, int min_out,
                   bool require_complete_base);

/// r-sets S with family_member(D, S, min_out, require_complete_base).
EnumerationResult family_sets_serial(const Digraph& d, int r, int min_out,
                                     bool require_complete_base,
                                     std::size_t cap = kDefaultCopyCap);
EnumerationResult family_sets_parallel(const Digraph& d, int r, int min_out,
                                       bool require_complete_base,
                                       std::size_t cap = kDefaultCopyCap);
EnumerationResult family_sets(const Digraph& d, int r, int min_out, bool require_complete_base,
                              std::size_t cap = kDefaultCopyCap);

/// Triples S with H[S] in K_{3,1}(H) whose G[S] is not a rainbow triangle.
struct BadTripleCounts {
    long total = 0;
    std::vector<long> per_vertex;
};

BadTripleCounts bad_triples_serial(const EdgeColouredGraph& g, const Digraph& h);
BadTripleCounts bad_triples_parallel(const EdgeColouredGraph& g, const Digraph& h);
BadTripleCounts bad_triples(const EdgeColouredGraph& g, const Digraph& h);

}  // namespace rt
