#include "rt/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace rt {

namespace {

bool use_parallel(int n) { return omp_get_max_threads() > 1 && n >= 16; }

// Extends partial rainbow cliques in lex order. `used` holds the colours of
// all edges inside the current set.
void extend_rainbow(const EdgeColouredGraph& g, int r, int from, std::vector<int>& cur,
                    std::vector<long>& used, std::vector<std::vector<int>>& out,
                    std::size_t limit, bool& capped) {
    if (capped) return;
    if (static_cast<int>(cur.size()) == r) {
        if (out.size() == limit) {
            capped = true;
            return;
        }
        out.push_back(cur);
        return;
    }
    const int need = r - static_cast<int>(cur.size());
    for (int v = from; v + need <= g.n(); ++v) {
        bool ok = true;
        std::size_t base = used.size();
        for (int u : cur) {
            long c = g.colour_of(u, v);
            if (c < 0) {
                ok = false;
                break;
            }
            if (std::find(used.begin(), used.end(), c) != used.end()) {
                ok = false;
                break;
            }
            used.push_back(c);
        }
        if (ok) {
            cur.push_back(v);
            extend_rainbow(g, r, v + 1, cur, used, out, limit, capped);
            cur.pop_back();
            if (capped) {
                used.resize(base);
                return;
            }
        }
        used.resize(base);
    }
}

void extend_clique(const Graph& g, int q, int from, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out, std::size_t limit, bool& capped) {
    if (capped) return;
    if (static_cast<int>(cur.size()) == q) {
        if (out.size() == limit) {
            capped = true;
            return;
        }
        out.push_back(cur);
        return;
    }
    const int need = q - static_cast<int>(cur.size());
    for (int v = from; v + need <= g.n(); ++v) {
        bool ok = true;
        for (int u : cur)
            if (!g.has_edge(u, v)) {
                ok = false;
                break;
            }
        if (ok) {
            cur.push_back(v);
            extend_clique(g, q, v + 1, cur, out, limit, capped);
            cur.pop_back();
            if (capped) return;
        }
    }
}

// Partial sets are only pruned on the complete-base condition (monotone);
// the out-degree test runs on full r-sets.
void extend_family(const Digraph& d, int r, int min_out, bool complete_base, int from,
                   std::vector<int>& cur, std::vector<std::vector<int>>& out, std::size_t limit,
                   bool& capped) {
    if (capped) return;
    if (static_cast<int>(cur.size()) == r) {
        if (family_member(d, cur, min_out, false)) {  // base already ensured when pruning
            if (out.size() == limit) {
                capped = true;
                return;
            }
            out.push_back(cur);
        }
        return;
    }
    const int need = r - static_cast<int>(cur.size());
    for (int v = from; v + need <= d.n(); ++v) {
        bool ok = true;
        if (complete_base) {
            for (int u : cur)
                if (!d.has_arc(u, v) && !d.has_arc(v, u)) {
                    ok = false;
                    break;
                }
        }
        if (ok) {
            cur.push_back(v);
            extend_family(d, r, min_out, complete_base, v + 1, cur, out, limit, capped);
            cur.pop_back();
            if (capped) return;
        }
    }
}

template <typename PerFirstVertex>
EnumerationResult parallel_by_first_vertex(int n, std::size_t cap, PerFirstVertex per_vertex) {
    std::vector<std::vector<std::vector<int>>> buckets(std::max(n, 0));
    std::vector<char> bucket_capped(std::max(n, 0), 0);
#pragma omp parallel for schedule(dynamic)
    for (int v0 = 0; v0 < n; ++v0) {
        bool capped = false;
        per_vertex(v0, buckets[v0], capped);
        bucket_capped[v0] = capped ? 1 : 0;
    }
    EnumerationResult res;
    for (int v0 = 0; v0 < n; ++v0) {
        for (auto& s : buckets[v0]) {
            if (res.sets.size() == cap) {
                res.capped = true;
                return res;
            }
            res.sets.push_back(std::move(s));
        }
        if (bucket_capped[v0]) {
            res.capped = true;
            return res;
        }
    }
    return res;
}

}  // namespace

EnumerationResult rainbow_cliques_serial(const EdgeColouredGraph& g, int r, std::size_t cap) {
    if (r < 2) throw std::invalid_argument("clique order must be >= 2");
    EnumerationResult res;
    std::vector<int> cur;
    std::vector<long> used;
    extend_rainbow(g, r, 0, cur, used, res.sets, cap, res.capped);
    return res;
}

EnumerationResult rainbow_cliques_parallel(const EdgeColouredGraph& g, int r, std::size_t cap) {
    if (r < 2) throw std::invalid_argument("clique order must be >= 2");
    return parallel_by_first_vertex(
        g.n(), cap, [&](int v0, std::vector<std::vector<int>>& out, bool& capped) {
            std::vector<int> cur{v0};
            std::vector<long> used;
            extend_rainbow(g, r, v0 + 1, cur, used, out, cap + 1, capped);
        });
}

EnumerationResult rainbow_cliques(const EdgeColouredGraph& g, int r, std::size_t cap) {
    return use_parallel(g.n()) ? rainbow_cliques_parallel(g, r, cap)
                               : rainbow_cliques_serial(g, r, cap);
}

EnumerationResult cliques_serial(const Graph& g, int q, std::size_t cap) {
    if (q < 2) throw std::invalid_argument("clique order must be >= 2");
    EnumerationResult res;
    std::vector<int> cur;
    extend_clique(g, q, 0, cur, res.sets, cap, res.capped);
    return res;
}

EnumerationResult cliques_parallel(const Graph& g, int q, std::size_t cap) {
    if (q < 2) throw std::invalid_argument("clique order must be >= 2");
    return parallel_by_first_vertex(
        g.n(), cap, [&](int v0, std::vector<std::vector<int>>& out, bool& capped) {
            std::vector<int> cur{v0};
            extend_clique(g, q, v0 + 1, cur, out, cap + 1, capped);
        });
}

EnumerationResult cliques(const Graph& g, int q, std::size_t cap) {
    return use_parallel(g.n()) ? cliques_parallel(g, q, cap) : cliques_serial(g, q, cap);
}

bool family_member(const Digraph& d, std::span<const int> s, int min_out,
                   bool require_complete_base) {
    const int r = static_cast<int>(s.size());
    if (require_complete_base) {
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (!d.has_arc(s[i], s[j]) && !d.has_arc(s[j], s[i])) return false;
    }
    for (int i = 0; i < r; ++i) {
        int out = 0;
        for (int j = 0; j < r; ++j)
            if (j != i && d.has_arc(s[i], s[j])) ++out;
        if (out < min_out) return false;
    }
    return true;
}

EnumerationResult family_sets_serial(const Digraph& d, int r, int min_out,
                                     bool require_complete_base, std::size_t cap) {
    if (r < 2) throw std::invalid_argument("family order must be >= 2");
    EnumerationResult res;
    std::vector<int> cur;
    extend_family(d, r, min_out, require_complete_base, 0, cur, res.sets, cap, res.capped);
    return res;
}

EnumerationResult family_sets_parallel(const Digraph& d, int r, int min_out,
                                       bool require_complete_base, std::size_t cap) {
    if (r < 2) throw std::invalid_argument("family order must be >= 2");
    return parallel_by_first_vertex(
        d.n(), cap, [&](int v0, std::vector<std::vector<int>>& out, bool& capped) {
            std::vector<int> cur{v0};
            extend_family(d, r, min_out, require_complete_base, v0 + 1, cur, out, cap + 1, capped);
        });
}

EnumerationResult family_sets(const Digraph& d, int r, int min_out, bool require_complete_base,
                              std::size_t cap) {
    return use_parallel(d.n()) ? family_sets_parallel(d, r, min_out, require_complete_base, cap)
                               : family_sets_serial(d, r, min_out, require_complete_base, cap);
}

namespace {

// A triple is bad when H[{i,j,k}] has complete base and min out-degree >= 1
// but two of the three G-edges share a colour.
inline bool bad_triple(const EdgeColouredGraph& g, const Digraph& h, int i, int j, int k) {
    const int t[3] = {i, j, k};
    if (!family_member(h, t, 1, true)) return false;
    long cij = g.colour_of(i, j), cik = g.colour_of(i, k), cjk = g.colour_of(j, k);
    if (cij < 0 || cik < 0 || cjk < 0) return true;  // not even a triangle in G
    return cij == cik || cij == cjk || cik == cjk;
}

}  // namespace

BadTripleCounts bad_triples_serial(const EdgeColouredGraph& g, const Digraph& h) {
    BadTripleCounts counts;
    counts.per_vertex.assign(g.n(), 0);
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            for (int k = j + 1; k < g.n(); ++k)
                if (bad_triple(g, h, i, j, k)) {
                    ++counts.total;
                    ++counts.per_vertex[i];
                    ++counts.per_vertex[j];
                    ++counts.per_vertex[k];
                }
    return counts;
}

BadTripleCounts bad_triples_parallel(const EdgeColouredGraph& g, const Digraph& h) {
    const int n = g.n();
    const int nt = omp_get_max_threads();
    std::vector<BadTripleCounts> local(nt);
    for (auto& l : local) l.per_vertex.assign(n, 0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
        BadTripleCounts& l = local[omp_get_thread_num()];
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (bad_triple(g, h, i, j, k)) {
                    ++l.total;
                    ++l.per_vertex[i];
                    ++l.per_vertex[j];
                    ++l.per_vertex[k];
                }
    }
    BadTripleCounts counts;
    counts.per_vertex.assign(n, 0);
    for (const auto& l : local) {
        counts.total += l.total;
        for (int v = 0; v < n; ++v) counts.per_vertex[v] += l.per_vertex[v];
    }
    return counts;
}

BadTripleCounts bad_triples(const EdgeColouredGraph& g, const Digraph& h) {
    return use_parallel(g.n()) ? bad_triples_parallel(g, h) : bad_triples_serial(g, h);
}

}  // namespace rt
