#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rt/graph.hpp"
#include "rt/kernels.hpp"
#include "rt/rational.hpp"

namespace rt {

/// r-uniform hypergraph whose edges are the K_{r,r-2} copies of a digraph.
struct CopyHypergraph {
    int n = 0;
    int r = 0;
    std::vector<std::vector<int>> edges;  // sorted r-sets, lex order
};

/// Exhaustive r-set scan with the complete-base family test. Throws when the
/// copy cap is exceeded.
CopyHypergraph build_copy_hypergraph(const Digraph& d, int r,
                                     std::size_t cap = kDefaultCopyCap);

// ---------------------------------------------------------------------------
// Exact-rational simplex (dense tableau, Bland's rule). No floating point
// anywhere on the LP path: the Farkas certificate's strict inequalities are
// brittle under rounding.

struct LpResult {
    Rational value;
    std::vector<Rational> x;  // primal values, one per column
    std::vector<Rational> y;  // duals, one per row
};

/// max c.x subject to Ax = b, x >= 0, starting from the given basis whose
/// columns form an identity in A (slack or artificial start). a is row-major
/// m x cols. Throws on unbounded.
LpResult simplex_max(int m, int cols, const std::vector<Rational>& a,
                     const std::vector<Rational>& b, const std::vector<Rational>& c,
                     std::vector<int> basis);

// ---------------------------------------------------------------------------

struct FractionalMatching {
    bool perfect = false;
    Rational value;
    std::vector<Rational> weight;  // one per hypergraph edge
};

/// max sum of edge weights subject to per-vertex load <= 1. Perfect iff the
/// optimum equals n/r, in which case every load is exactly 1.
FractionalMatching solve_fractional_matching(const CopyHypergraph& f);

/// Vertex weighting with every edge summing to >= 1, minimum exactly 0 and
/// total < n/r, witnessing that no perfect fractional matching exists. The
/// raw Farkas vector comes from the dual of the phase-one LP for the
/// equality system; it is then scaled to minimum -1, capped at r-1 and
/// mapped through (w+1)/r. Throws std::logic_error when the instance is
/// perfect.
struct DualCertificate {
    std::vector<Rational> omega;
};

DualCertificate farkas_certificate(const CopyHypergraph& f);

struct CertificateReport {
    bool edge_sums_ok = false;  // sum over every edge >= 1
    bool min_zero_ok = false;   // min omega == 0
    bool total_ok = false;      // sum omega < n/r
    bool range_ok = false;      // omega in [0,1]
    bool link_ok = true;        // r=3: link-matching inequality at every vertex
    bool valid() const { return edge_sums_ok && min_zero_ok && total_ok && range_ok && link_ok; }
};

CertificateReport verify_certificate(const CopyHypergraph& f, const std::vector<Rational>& omega);

/// r=3 only: edge {x,y} iff {v,x,y} is a hypergraph edge.
Graph link_graph(const CopyHypergraph& f, int v);

struct LinkInequalityReport {
    int matching_size = 0;
    Rational lhs;  // total certificate weight
    Rational rhs;  // matching_size * (1 - omega(v))
    bool holds = false;
};

/// Summing the edge constraints over a maximum matching of the link graph of
/// v gives sum(omega) >= nu * (1 - omega(v)); checks that literally.
LinkInequalityReport certificate_link_inequality(const CopyHypergraph& f,
                                                 const std::vector<Rational>& omega, int v);

struct DeskCheckInstance {
    std::uint64_t seed = 0;
    Digraph digraph;
    std::vector<Rational> certificate;
};

struct DeskCheckStats {
    int r = 0;
    int n = 0;
    int trials = 0;
    int min_out_degree = 0;  // degree floor the samples were repaired to
    int feasible = 0;
    std::vector<DeskCheckInstance> infeasible;  // saved with certificates
};

/// Samples random digraphs with min out-degree at the r-threshold (plus
/// margin) and reports how many admit perfect fractional (r,r-2)-tilings.
DeskCheckStats desk_check_thresholds(int r, int n, int trials, const Rational& margin,
                                     std::uint64_t seed);

}  // namespace rt
