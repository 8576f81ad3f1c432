#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rt/graph.hpp"
#include "rt/kernels.hpp"
#include "rt/rational.hpp"

namespace rt {

struct Star {
    long colour;
    int centre;
    std::vector<int> leaves;  // ascending
};

/// The four conversion guarantees, re-counted from (G, H) alone. Square-root
/// comparisons are exact integer tests (count <= sqrt(n) iff count^2 <= n).
struct ConversionGuarantees {
    int min_out_degree = 0;
    int min_colour_degree = 0;
    long ceil_sqrt_n = 0;
    bool base_subgraph = false;              // base(H) subset of G
    bool out_degree_bound = false;           // delta+(H) >= delta^c(G) - ceil(sqrt(n))
    bool out_neighbourhoods_rainbow = false; // G[u, N+(u)] rainbow for all u
    long max_same_colour_in = 0;
    bool same_colour_in_bound = false;       // |{w in N-(u): c(uw)=c(uv)}| <= sqrt(n)
    long max_colour_path_pairs = 0;
    bool colour_path_pair_bound = false;     // pairs (x,y): xv,vy arcs, c(xv)=c(vy), <= n

    bool all() const {
        return base_subgraph && out_degree_bound && out_neighbourhoods_rainbow &&
               same_colour_in_bound && colour_path_pair_bound;
    }
};

struct ConversionResult {
    Digraph h;
    std::vector<Star> stars;  // grouped by colour, ascending
    ConversionGuarantees guarantees;
};

/// Edge-coloured graph to digraph: take the critical subgraph, orient every
/// monochromatic star's edges leaf -> centre, and for stars of size s with
/// s^2 <= n add one arc from the centre back to its smallest-index leaf.
ConversionResult convert(const EdgeColouredGraph& g);

/// Independent recount of the four guarantees from (g, h).
ConversionGuarantees verify_conversion(const EdgeColouredGraph& g, const Digraph& h);

/// Triples S with H[S] in K_{3,1}(H) but G[S] not a rainbow triangle,
/// counted globally (bound 3n^2) or through one vertex (bound 3n^{3/2}).
long count_bad_triples(const EdgeColouredGraph& g, const Digraph& h,
                       std::optional<int> through = std::nullopt);

struct FamilyMembership {
    bool member = false;
    bool complete_base = false;
    int min_out_degree = 0;
    bool contains_c3 = false;  // filled for 3-sets
    bool contains_j3 = false;  // filled for 3-sets
};

/// D[S] against the family with min out-degree >= s (complete base required
/// when require_complete_base; otherwise the starred family).
FamilyMembership classify_family(const Digraph& d, std::span<const int> s, int r, int min_out,
                                 bool require_complete_base);

/// Cluster pair densities of a regular partition; d is an ordered-pair
/// density, dpm the double-edge density of the unordered pair.
struct PairDensityMatrix {
    int k = 0;
    std::vector<Rational> d;    // k*k, diagonal zero
    std::vector<Rational> dpm;  // k*k symmetric

    Rational density(int i, int j) const { return d[static_cast<std::size_t>(i) * k + j]; }
    Rational double_density(int i, int j) const {
        return dpm[static_cast<std::size_t>(i) * k + j];
    }
    void set_density(int i, int j, const Rational& q);
    void set_double_density(int i, int j, const Rational& q);
    /// 0 <= dpm(i,j) <= min(d(i,j), d(j,i)) <= 1; throws on violation.
    void validate() const;
};

PairDensityMatrix parse_pdm(std::istream& in);
PairDensityMatrix parse_pdm_string(const std::string& text);
std::string write_pdm(const PairDensityMatrix& m);
PairDensityMatrix load_pdm(const std::string& path);

/// One random reduced digraph: for each i<j, both arcs when the double-edge
/// density is positive; otherwise a single arc, i->j with probability
/// d(i,j)/(d(i,j)+d(j,i)); nothing when all three densities vanish. The
/// single-arc branch reinterprets the source's self-density condition as a
/// pair-density condition; with strict=true the sampler refuses that branch
/// instead. Exact rational Bernoulli draws, deterministic under seed.
Digraph sample_reduced_digraph(const PairDensityMatrix& m, std::uint64_t seed,
                               bool strict = false);

}  // namespace rt
