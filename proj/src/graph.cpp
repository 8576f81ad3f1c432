#include "rt/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace rt {

namespace {

void check_vertex(int v, int n) {
    if (v < 0 || v >= n)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0," +
                                std::to_string(n) + ")");
}

void check_pair(int u, int v, int n) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
}

}  // namespace

EdgeColouredGraph::EdgeColouredGraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    col_.assign(static_cast<std::size_t>(n) * n, -1);
}

std::size_t EdgeColouredGraph::idx(int u, int v) const {
    check_pair(u, v, n_);
    return static_cast<std::size_t>(u) * n_ + v;
}

void EdgeColouredGraph::add_edge(int u, int v, long colour) {
    if (colour < 0) throw std::invalid_argument("negative colour id");
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    col_[idx(u, v)] = colour;
    col_[idx(v, u)] = colour;
    ++edge_count_;
}

void EdgeColouredGraph::remove_edge(int u, int v) {
    if (!has_edge(u, v))
        throw std::invalid_argument("missing edge " + std::to_string(u) + "-" + std::to_string(v));
    col_[idx(u, v)] = -1;
    col_[idx(v, u)] = -1;
    --edge_count_;
}

int EdgeColouredGraph::degree(int v) const {
    check_vertex(v, n_);
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(u, v)) ++d;
    return d;
}

int EdgeColouredGraph::colour_degree(int v) const {
    check_vertex(v, n_);
    std::set<long> colours;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(u, v)) colours.insert(colour_of(u, v));
    return static_cast<int>(colours.size());
}

int EdgeColouredGraph::min_colour_degree() const {
    if (n_ == 0) return 0;
    int m = colour_degree(0);
    for (int v = 1; v < n_; ++v) m = std::min(m, colour_degree(v));
    return m;
}

std::vector<std::tuple<int, int, long>> EdgeColouredGraph::edges() const {
    std::vector<std::tuple<int, int, long>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v, colour_of(u, v));
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

std::size_t Graph::idx(int u, int v) const {
    check_pair(u, v, n_);
    return static_cast<std::size_t>(u) * n_ + v;
}

void Graph::add_edge(int u, int v) {
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[idx(u, v)] = 1;
    adj_[idx(v, u)] = 1;
    ++edge_count_;
}

int Graph::degree(int v) const {
    check_vertex(v, n_);
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_edge(u, v)) ++d;
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Digraph::Digraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

std::size_t Digraph::idx(int u, int v) const {
    check_pair(u, v, n_);
    return static_cast<std::size_t>(u) * n_ + v;
}

void Digraph::add_arc(int u, int v) {
    if (has_arc(u, v))
        throw std::invalid_argument("duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
    adj_[idx(u, v)] = 1;
    ++arc_count_;
}

void Digraph::remove_arc(int u, int v) {
    if (!has_arc(u, v))
        throw std::invalid_argument("missing arc " + std::to_string(u) + "->" + std::to_string(v));
    adj_[idx(u, v)] = 0;
    --arc_count_;
}

int Digraph::out_degree(int v) const {
    check_vertex(v, n_);
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_arc(v, u)) ++d;
    return d;
}

int Digraph::in_degree(int v) const {
    check_vertex(v, n_);
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (u != v && has_arc(u, v)) ++d;
    return d;
}

int Digraph::min_out_degree() const {
    if (n_ == 0) return 0;
    int m = out_degree(0);
    for (int v = 1; v < n_; ++v) m = std::min(m, out_degree(v));
    return m;
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(arc_count_);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (u != v && has_arc(u, v)) out.emplace_back(u, v);
    return out;
}

Graph Digraph::base_graph() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_arc(u, v) || has_arc(v, u)) g.add_edge(u, v);
    return g;
}

DegreeProfile degree_profile(const EdgeColouredGraph& g) {
    DegreeProfile p;
    p.colour_degree.resize(g.n());
    p.degree.resize(g.n());
    for (int v = 0; v < g.n(); ++v) {
        p.colour_degree[v] = g.colour_degree(v);
        p.degree[v] = g.degree(v);
    }
    p.min_colour_degree = g.n() ? *std::min_element(p.colour_degree.begin(), p.colour_degree.end()) : 0;
    p.max_degree = g.n() ? *std::max_element(p.degree.begin(), p.degree.end()) : 0;
    return p;
}

InducedReport induced_check(const EdgeColouredGraph& g, std::span<const int> s) {
    for (int v : s) check_vertex(v, g.n());
    InducedReport rep;
    rep.complete = true;
    rep.rainbow = true;
    rep.proper = true;
    const int k = static_cast<int>(s.size());
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (s[i] == s[j]) throw std::invalid_argument("repeated vertex in induced_check");
            if (!g.has_edge(s[i], s[j])) rep.complete = false;
        }
    }
    // Pairwise colour comparison over the edges of G[S]; adjacency of two
    // edges means they share an endpoint.
    std::vector<std::tuple<int, int, long>> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(s[i], s[j])) es.emplace_back(s[i], s[j], g.colour_of(s[i], s[j]));
    for (std::size_t a = 0; a < es.size(); ++a) {
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            if (std::get<2>(es[a]) != std::get<2>(es[b])) continue;
            rep.rainbow = false;
            auto [u1, v1, c1] = es[a];
            auto [u2, v2, c2] = es[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) rep.proper = false;
        }
    }
    return rep;
}

EdgeColouredGraph critical_subgraph(const EdgeColouredGraph& g) {
    EdgeColouredGraph h = g;
    const int target = g.min_colour_degree();
    const int n = g.n();
    // Deleting uv only touches the endpoints, and d^c drops there exactly
    // when the edge carries the last incident edge of its colour.
    std::vector<std::map<long, int>> mult(n);
    std::vector<int> dc(n, 0);
    for (auto [u, v, c] : h.edges()) {
        if (mult[u][c]++ == 0) ++dc[u];
        if (mult[v][c]++ == 0) ++dc[v];
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [u, v, c] : h.edges()) {
            const int du = dc[u] - (mult[u][c] == 1 ? 1 : 0);
            const int dv = dc[v] - (mult[v][c] == 1 ? 1 : 0);
            if (du < target || dv < target) continue;
            h.remove_edge(u, v);
            if (--mult[u][c] == 0) --dc[u];
            if (--mult[v][c] == 0) --dc[v];
            changed = true;
        }
    }
    return h;
}

EdgeColouredGraph blowup(const EdgeColouredGraph& g, int t, int max_vertices) {
    if (t < 1) throw std::invalid_argument("blowup factor must be >= 1");
    if (static_cast<long>(g.n()) * t > max_vertices)
        throw std::invalid_argument("blowup exceeds vertex limit");
    EdgeColouredGraph out(g.n() * t);
    for (auto [u, v, c] : g.edges())
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) out.add_edge(u * t + i, v * t + j, c);
    return out;
}

Digraph blowup(const Digraph& d, int t, int max_vertices) {
    if (t < 1) throw std::invalid_argument("blowup factor must be >= 1");
    if (static_cast<long>(d.n()) * t > max_vertices)
        throw std::invalid_argument("blowup exceeds vertex limit");
    Digraph out(d.n() * t);
    for (auto [u, v] : d.arcs())
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) out.add_arc(u * t + i, v * t + j);
    return out;
}

Graph double_edge_graph(const Digraph& d) {
    Graph g(d.n());
    for (int u = 0; u < d.n(); ++u)
        for (int v = u + 1; v < d.n(); ++v)
            if (d.has_arc(u, v) && d.has_arc(v, u)) g.add_edge(u, v);
    return g;
}

EdgeColouredGraph induced_subgraph(const EdgeColouredGraph& g, std::span<const int> s) {
    EdgeColouredGraph out(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j]))
                out.add_edge(static_cast<int>(i), static_cast<int>(j), g.colour_of(s[i], s[j]));
    return out;
}

Digraph induced_subdigraph(const Digraph& d, std::span<const int> s) {
    Digraph out(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (i != j && d.has_arc(s[i], s[j]))
                out.add_arc(static_cast<int>(i), static_cast<int>(j));
    return out;
}

}  // namespace rt
