#include "rt/rainbow_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "rt/kernels.hpp"

namespace rt {

namespace {

// Lexicographic DFS; stops at the first completed set.
bool first_rainbow(const EdgeColouredGraph& g, int r, int from, std::vector<int>& cur,
                   std::vector<long>& used, std::vector<int>& out) {
    if (static_cast<int>(cur.size()) == r) {
        out = cur;
        return true;
    }
    const int need = r - static_cast<int>(cur.size());
    for (int v = from; v + need <= g.n(); ++v) {
        bool ok = true;
        std::size_t base = used.size();
        for (int u : cur) {
            long c = g.colour_of(u, v);
            if (c < 0 || std::find(used.begin(), used.end(), c) != used.end()) {
                ok = false;
                break;
            }
            used.push_back(c);
        }
        if (ok) {
            cur.push_back(v);
            if (first_rainbow(g, r, v + 1, cur, used, out)) return true;
            cur.pop_back();
        }
        used.resize(base);
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_rainbow_clique(const EdgeColouredGraph& g, int r) {
    if (r < 2) throw std::invalid_argument("clique order must be >= 2");
    std::vector<int> cur, out;
    std::vector<long> used;
    if (first_rainbow(g, r, 0, cur, used, out)) return out;
    return std::nullopt;
}

bool is_properly_coloured_balanced_bipartite(const EdgeColouredGraph& g) {
    const int n = g.n();
    if (n < 2 || n % 2 != 0) return false;
    // In K_{n/2,n/2} the side of vertex 0 is exactly 0 plus its non-neighbours.
    std::vector<int> side_a{0}, side_b;
    for (int v = 1; v < n; ++v)
        (g.has_edge(0, v) ? side_b : side_a).push_back(v);
    if (side_a.size() != side_b.size()) return false;
    for (std::size_t i = 0; i < side_a.size(); ++i)
        for (std::size_t j = i + 1; j < side_a.size(); ++j)
            if (g.has_edge(side_a[i], side_a[j])) return false;
    for (std::size_t i = 0; i < side_b.size(); ++i)
        for (std::size_t j = i + 1; j < side_b.size(); ++j)
            if (g.has_edge(side_b[i], side_b[j])) return false;
    for (int a : side_a)
        for (int b : side_b)
            if (!g.has_edge(a, b)) return false;
    // Proper: edges at a common vertex never repeat a colour.
    for (int v = 0; v < n; ++v)
        if (g.colour_degree(v) != g.degree(v)) return false;
    return true;
}

std::string to_string(Thm13Kind k) {
    switch (k) {
        case Thm13Kind::hypothesis_not_met: return "hypothesis_not_met";
        case Thm13Kind::exceptional_bipartite: return "exceptional_bipartite";
        case Thm13Kind::exceptional_k4: return "exceptional_k4";
        case Thm13Kind::exceptional_k4_minus_e: return "exceptional_k4_minus_e";
        case Thm13Kind::rainbow_triangle: return "rainbow_triangle";
        case Thm13Kind::counterexample: return "counterexample";
    }
    return "?";
}

Thm13Verdict theorem13_verdict(const EdgeColouredGraph& g) {
    const int n = g.n();
    if (n < 3) throw std::invalid_argument("theorem13_verdict needs n >= 3");
    if (2 * g.min_colour_degree() < n) return {Thm13Kind::hypothesis_not_met};
    if (is_properly_coloured_balanced_bipartite(g)) return {Thm13Kind::exceptional_bipartite};
    if (n == 4) {
        int m = g.edge_count();
        if (m == 6) return {Thm13Kind::exceptional_k4};
        if (m == 5) return {Thm13Kind::exceptional_k4_minus_e};
    }
    if (auto s = find_rainbow_clique(g, 3))
        return {Thm13Kind::rainbow_triangle, {(*s)[0], (*s)[1], (*s)[2]}};
    return {Thm13Kind::counterexample};
}

namespace {

// Parts of a complete multipartite graph are the connected components of the
// complement.
std::vector<std::vector<int>> complement_components(const EdgeColouredGraph& g) {
    const int n = g.n();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> parts;
    for (int v = 0; v < n; ++v) {
        if (comp[v] >= 0) continue;
        int id = static_cast<int>(parts.size());
        parts.emplace_back();
        std::vector<int> stack{v};
        comp[v] = id;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            parts[id].push_back(u);
            for (int w = 0; w < n; ++w)
                if (w != u && !g.has_edge(u, w) && comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(parts[id].begin(), parts[id].end());
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

bool transversal_search(const EdgeColouredGraph& g, const std::vector<std::vector<int>>& parts,
                        std::size_t i, std::vector<int>& cur, std::vector<long>& used) {
    if (i == parts.size()) return true;
    for (int v : parts[i]) {
        bool ok = true;
        std::size_t base = used.size();
        for (int u : cur) {
            long c = g.colour_of(u, v);
            if (c < 0 || std::find(used.begin(), used.end(), c) != used.end()) {
                ok = false;
                break;
            }
            used.push_back(c);
        }
        if (ok) {
            cur.push_back(v);
            if (transversal_search(g, parts, i + 1, cur, used)) return true;
            cur.pop_back();
        }
        used.resize(base);
    }
    return false;
}

}  // namespace

TransversalResult rainbow_transversal(const EdgeColouredGraph& g) {
    TransversalResult res;
    res.parts = complement_components(g);
    const int r = static_cast<int>(res.parts.size());
    if (r < 2) {
        res.precondition_error = "fewer than two parts";
        return res;
    }
    for (const auto& part : res.parts)
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (g.has_edge(part[i], part[j])) {
                    res.precondition_error = "not complete multipartite";
                    return res;
                }
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            for (int u : res.parts[a])
                for (int v : res.parts[b])
                    if (!g.has_edge(u, v)) {
                        res.precondition_error = "not complete multipartite";
                        return res;
                    }
    for (int v = 0; v < g.n(); ++v)
        if (g.colour_degree(v) != g.degree(v)) {
            res.precondition_error = "colouring not proper";
            return res;
        }
    const long rcubed = static_cast<long>(r) * r * r;
    for (const auto& part : res.parts)
        if (static_cast<long>(part.size()) < rcubed) {
            res.precondition_error = "part smaller than r^3";
            return res;
        }
    res.precondition_ok = true;
    std::vector<int> cur;
    std::vector<long> used;
    res.found = transversal_search(g, res.parts, 0, cur, used);
    if (res.found) res.clique = cur;
    return res;
}

std::optional<std::array<int, 3>> find_directed_triangle(const Digraph& d) {
    for (int i = 0; i < d.n(); ++i)
        for (int j = i + 1; j < d.n(); ++j)
            for (int k = j + 1; k < d.n(); ++k) {
                const int t[3] = {i, j, k};
                if (family_member(d, t, 1, true)) return std::array<int, 3>{i, j, k};
            }
    return std::nullopt;
}

}  // namespace rt
