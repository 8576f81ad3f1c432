#pragma once

#include <cstdint>
#include <span>
#include <tuple>
#include <vector>

namespace rt {

/// Undirected simple graph with an integer colour on every edge.
/// Vertices are dense indices 0..n-1; colour ids are arbitrary non-negative
/// integers and need not be contiguous. Values are cheap to copy at the
/// instance sizes this library targets; treat them as immutable once built
/// and share read-only across threads.
class EdgeColouredGraph {
public:
    EdgeColouredGraph() = default;
    explicit EdgeColouredGraph(int n);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }

    /// Rejects loops, duplicate edges, out-of-range ids, negative colours.
    void add_edge(int u, int v, long colour);
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return colour_of(u, v) >= 0; }
    /// Colour of uv, or -1 when the edge is absent.
    long colour_of(int u, int v) const { return col_[idx(u, v)]; }

    int degree(int v) const;
    /// Number of distinct colours on edges incident to v.
    int colour_degree(int v) const;
    int min_colour_degree() const;

    /// Edges as (u, v, colour) with u < v, lexicographically sorted.
    std::vector<std::tuple<int, int, long>> edges() const;

    bool operator==(const EdgeColouredGraph&) const = default;

private:
    std::size_t idx(int u, int v) const;
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<long> col_;  // n*n matrix, -1 = absent
};

/// Plain undirected simple graph.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const { return edge_count_; }
    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[idx(u, v)] != 0; }
    int degree(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t idx(int u, int v) const;
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
};

/// Loop-free directed graph; (u,v) and (v,u) may coexist (a double edge).
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n);

    int n() const { return n_; }
    int arc_count() const { return arc_count_; }
    void add_arc(int u, int v);
    void remove_arc(int u, int v);
    bool has_arc(int u, int v) const { return adj_[idx(u, v)] != 0; }

    int out_degree(int v) const;
    int in_degree(int v) const;
    int min_out_degree() const;

    /// Arcs (u, v), lexicographically sorted.
    std::vector<std::pair<int, int>> arcs() const;

    /// Underlying undirected graph: uv present iff at least one arc.
    Graph base_graph() const;

    bool operator==(const Digraph&) const = default;

private:
    std::size_t idx(int u, int v) const;
    int n_ = 0;
    int arc_count_ = 0;
    std::vector<std::uint8_t> adj_;
};

struct DegreeProfile {
    std::vector<int> colour_degree;  // d^c(v)
    std::vector<int> degree;         // d(v)
    int min_colour_degree = 0;       // delta^c
    int max_degree = 0;              // Delta
};

DegreeProfile degree_profile(const EdgeColouredGraph& g);

struct InducedReport {
    bool complete = false;
    bool rainbow = false;  // pairwise distinct colours on G[S]
    bool proper = false;   // no two adjacent edges of G[S] share a colour
};

/// Inspects G[S]. Throws std::out_of_range on bad vertex ids.
InducedReport induced_check(const EdgeColouredGraph& g, std::span<const int> s);

/// Spanning subgraph with the same minimum colour degree from which no
/// further edge can be removed without decreasing it. Candidate edges are
/// dropped in lexicographic (u,v) order, rescanning until a fixpoint, so the
/// result is deterministic. Every colour class of the result is a disjoint
/// union of stars.
EdgeColouredGraph critical_subgraph(const EdgeColouredGraph& g);

/// t-blowup: vertex v becomes the class {v*t, ..., v*t+t-1}; copies of an
/// edge inherit its colour, so the blowup of a rainbow graph is not rainbow
/// for t >= 2. No edges inside a class. Throws when n*t exceeds max_vertices.
EdgeColouredGraph blowup(const EdgeColouredGraph& g, int t, int max_vertices = 100000);
Digraph blowup(const Digraph& d, int t, int max_vertices = 100000);

/// Graph on V(D) with xy present iff both arcs xy and yx are present.
Graph double_edge_graph(const Digraph& d);

/// G[S] relabelled to 0..|S|-1 in the order given.
EdgeColouredGraph induced_subgraph(const EdgeColouredGraph& g, std::span<const int> s);
Digraph induced_subdigraph(const Digraph& d, std::span<const int> s);

}  // namespace rt
