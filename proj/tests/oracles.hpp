#pragma once

// Brute-force oracles for the test suites. These stay deliberately
// independent of the solver implementations they check: no pruning, no
// bounds, no shared helpers beyond the graph accessors.

#include <algorithm>
#include <optional>
#include <vector>

#include "rt/graph.hpp"

namespace oracle {

inline void all_subsets(int n, int k, int from, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = from; v < n; ++v) {
        cur.push_back(v);
        all_subsets(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    all_subsets(n, k, 0, cur, out);
    return out;
}

inline bool rainbow_complete(const rt::EdgeColouredGraph& g, const std::vector<int>& s) {
    std::vector<long> cols;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            long c = g.colour_of(s[i], s[j]);
            if (c < 0) return false;
            cols.push_back(c);
        }
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

inline std::vector<std::vector<int>> rainbow_cliques(const rt::EdgeColouredGraph& g, int r) {
    std::vector<std::vector<int>> out;
    for (const auto& s : subsets(g.n(), r))
        if (rainbow_complete(g, s)) out.push_back(s);
    return out;
}

// Plain exhaustive maximum set packing: try every copy at every position.
inline void packing_rec(const std::vector<std::vector<int>>& sets, std::size_t from,
                        std::vector<char>& used, int current, int& best) {
    best = std::max(best, current);
    for (std::size_t i = from; i < sets.size(); ++i) {
        bool free = true;
        for (int v : sets[i])
            if (used[v]) {
                free = false;
                break;
            }
        if (!free) continue;
        for (int v : sets[i]) used[v] = 1;
        packing_rec(sets, i + 1, used, current + 1, best);
        for (int v : sets[i]) used[v] = 0;
    }
}

inline int max_packing(int n, const std::vector<std::vector<int>>& sets) {
    std::vector<char> used(n, 0);
    int best = 0;
    packing_rec(sets, 0, used, 0, best);
    return best;
}

// Exhaustive maximum matching by branching on the lowest incident vertex.
inline int max_matching_rec(const rt::Graph& g, std::vector<char>& used) {
    int v = -1;
    for (int u = 0; u < g.n(); ++u)
        if (!used[u]) {
            bool has = false;
            for (int w = 0; w < g.n(); ++w)
                if (w != u && !used[w] && g.has_edge(u, w)) {
                    has = true;
                    break;
                }
            if (has) {
                v = u;
                break;
            }
        }
    if (v < 0) return 0;
    used[v] = 1;
    int best = max_matching_rec(g, used);  // leave v unmatched
    for (int w = 0; w < g.n(); ++w) {
        if (w == v || used[w] || !g.has_edge(v, w)) continue;
        used[w] = 1;
        best = std::max(best, 1 + max_matching_rec(g, used));
        used[w] = 0;
    }
    used[v] = 0;
    return best;
}

inline int max_matching(const rt::Graph& g) {
    std::vector<char> used(g.n(), 0);
    return max_matching_rec(g, used);
}

inline rt::Graph petersen() {
    rt::Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

}  // namespace oracle
