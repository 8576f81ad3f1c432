#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rt/graph.hpp"
#include "rt/rational.hpp"

namespace rt {

enum class WitnessKind { rainbow_clique, family, clique };

/// Vertex-disjoint family of r-sets; each part is certified for its kind.
struct TilingWitness {
    WitnessKind kind = WitnessKind::rainbow_clique;
    int r = 0;
    int family_min_out = 0;      // family kind only
    bool complete_base = true;   // family kind only (false = starred family)
    std::vector<std::vector<int>> parts;
    int cover() const { return r * static_cast<int>(parts.size()); }
};

bool certify_witness(const TilingWitness& w, const EdgeColouredGraph& g);
bool certify_witness(const TilingWitness& w, const Digraph& d);
bool certify_witness(const TilingWitness& w, const Graph& g);

struct PackingOptions {
    long node_budget = 10000000;
    std::size_t copy_cap;            // RT_MAX_COPIES env or 10^6
    bool use_lp_bound = true;        // fractional LP upper bound at the root
    std::size_t lp_bound_max_copies = 2000;
    PackingOptions();
};

struct PackingOutcome {
    int size = 0;
    std::vector<int> chosen;  // indices into the copy list
    bool optimal = false;
    bool budget_exhausted = false;
    long nodes = 0;
};

/// Maximum set packing over an explicit list of r-sets by branch and bound:
/// greedy initial solution, fractional-LP bound at the root, branching on
/// the lowest-index free vertex with copies in lexicographic order. With
/// require_perfect the skip branch is disabled and only full covers count.
/// early_exit_target stops the search once a packing of that size is found.
PackingOutcome max_set_packing(int n, int r, const std::vector<std::vector<int>>& copies,
                               const PackingOptions& opt = {}, int early_exit_target = -1,
                               bool require_perfect = false);

struct TilingResult {
    int size = 0;
    TilingWitness witness;
    bool optimal = false;
    bool budget_exhausted = false;
    bool copies_capped = false;
    long nodes = 0;
};

TilingResult max_rainbow_tiling(const EdgeColouredGraph& g, int r,
                                const PackingOptions& opt = {});

enum class PerfectOutcome { yes, no, unknown };
std::string to_string(PerfectOutcome o);

struct PerfectTilingResult {
    PerfectOutcome outcome = PerfectOutcome::unknown;
    TilingWitness witness;
    long nodes = 0;
    bool copies_capped = false;
};

/// Requires r | n.
PerfectTilingResult has_perfect_rainbow_tiling(const EdgeColouredGraph& g, int r,
                                               const PackingOptions& opt = {});

/// Perfect tiling by members of the digraph family with min out-degree >= s;
/// starred=true drops the complete-base requirement. Requires r | n.
PerfectTilingResult perfect_family_tiling(const Digraph& d, int r, int s, bool starred,
                                          const PackingOptions& opt = {});

TilingResult max_clique_tiling(const Graph& g, int q, const PackingOptions& opt = {});

/// Edge count that guarantees alpha*n vertex-disjoint triangles:
/// max{(1+2a-a^2)/4, 1/4+2a^2, 2a(1-a), 1/2-3a+9a^2} n^2 + gamma n^2,
/// exact rational. Requires 0 < alpha <= 1/3, gamma >= 0.
Rational abhp_bound(long n, const Rational& alpha, const Rational& gamma);

}  // namespace rt
