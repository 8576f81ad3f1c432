#include "rt/closedness.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "rt/kernels.hpp"
#include "rt/tiling.hpp"

namespace rt {

namespace {

// All k-subsets of pool, lexicographic.
std::vector<std::vector<int>> subsets_of(const std::vector<int>& pool, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i + (k - cur.size()) <= pool.size(); ++i) {
            cur.push_back(pool[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

bool side_tileable(const EdgeColouredGraph& g, const std::vector<int>& s, int anchor, int r) {
    std::vector<int> verts = s;
    verts.push_back(anchor);
    std::sort(verts.begin(), verts.end());
    if (static_cast<int>(verts.size()) == r) {
        InducedReport rep = induced_check(g, verts);
        return rep.complete && rep.rainbow;
    }
    EdgeColouredGraph sub = induced_subgraph(g, verts);
    PackingOptions opt;
    opt.use_lp_bound = false;  // instances here are tiny
    return has_perfect_rainbow_tiling(sub, r, opt).outcome == PerfectOutcome::yes;
}

}  // namespace

long count_connectors(const EdgeColouredGraph& g, int x, int y, int r, int s) {
    if (s != 1 && s != 2) throw std::invalid_argument("connector length supports s in {1,2}");
    if (r < 2) throw std::invalid_argument("need r >= 2");
    if (x == y) throw std::invalid_argument("need x != y");
    if (x < 0 || x >= g.n() || y < 0 || y >= g.n()) throw std::out_of_range("vertex out of range");
    std::vector<int> pool;
    for (int v = 0; v < g.n(); ++v)
        if (v != x && v != y) pool.push_back(v);
    const int size = r * s - 1;
    if (size > static_cast<int>(pool.size())) return 0;
    const auto cands = subsets_of(pool, size);
    long count = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : count)
    for (std::size_t i = 0; i < cands.size(); ++i)
        if (side_tileable(g, cands[i], x, r) && side_tileable(g, cands[i], y, r)) ++count;
    return count;
}

ClosednessReport closedness_report(const EdgeColouredGraph& g, int r, int s) {
    ClosednessReport rep;
    rep.r = r;
    rep.s = s;
    rep.min_count = std::numeric_limits<long>::max();
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y) {
            long c = count_connectors(g, x, y, r, s);
            if (c < rep.min_count) {
                rep.min_count = c;
                rep.worst_pair = {x, y};
            }
        }
    if (rep.worst_pair.first < 0) {
        rep.min_count = 0;
        return rep;
    }
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(g.n()),
                  static_cast<unsigned long>(r * s - 1));
    rep.eta = Rational(rep.min_count) / Rational(denom);
    return rep;
}

std::vector<std::vector<int>> WeakClosure::classes() const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (pair_certified(x, y)) parent[find(x)] = find(y);
    std::vector<std::vector<int>> by_root(n);
    for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& cls : by_root)
        if (cls.size() >= 2) out.push_back(std::move(cls));
    return out;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

struct ClosureState {
    int n;
    int s_max;
    std::vector<int> best;  // n*n, kInf = not derived; diagonal included
    bool changed = false;

    int& at(int x, int y) { return best[static_cast<std::size_t>(x) * n + y]; }
    int get(int x, int y) const { return best[static_cast<std::size_t>(x) * n + y]; }

    void offer(int x, int y, int s) {
        if (s > s_max) return;
        if (s < get(x, y)) {
            at(x, y) = s;
            at(y, x) = s;
            changed = true;
        }
    }
};

}  // namespace

WeakClosure weak_closure(const Digraph& d, int s_max) {
    if (s_max < 1) throw std::invalid_argument("need s_max >= 1");
    const int n = d.n();
    ClosureState st{n, s_max, std::vector<int>(static_cast<std::size_t>(n) * n, kInf), false};

    const auto triples = family_sets(d, 3, 1, true).sets;

    // anchors[a*n+b] = vertices x with {x,a,b} a complete-base triple of
    // min out-degree >= 1.
    std::vector<std::vector<int>> anchors(static_cast<std::size_t>(n) * n);
    for (const auto& t : triples)
        for (int i = 0; i < 3; ++i) {
            int x = t[i], a = t[(i + 1) % 3], b = t[(i + 2) % 3];
            anchors[static_cast<std::size_t>(std::min(a, b)) * n + std::max(a, b)].push_back(x);
        }

    // Seeds: both anchors of a common pair (diagonal included; a vertex is
    // weakly 1-connected to itself through any triple containing it).
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const auto& xs = anchors[static_cast<std::size_t>(a) * n + b];
            for (int x : xs)
                for (int y : xs) st.offer(x, y, 1);
        }

    auto certified = [&](int x, int y) { return st.get(x, y) <= s_max; };

    do {
        st.changed = false;

        // Overlap union: {x,z} and {z,x'} merge at twice the larger cost.
        for (int z = 0; z < n; ++z)
            for (int x = 0; x < n; ++x) {
                if (!certified(x, z)) continue;
                for (int y = 0; y < n; ++y) {
                    if (x == y || !certified(z, y)) continue;
                    st.offer(x, y, 2 * std::max(st.get(x, z), st.get(z, y)));
                }
            }

        // Composition through two triples: anchors x, x' become connected
        // when the remaining vertices pair up as certified pairs.
        for (const auto& t1 : triples)
            for (const auto& t2 : triples)
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        const int x = t1[i], x2 = t2[j];
                        if (x == x2) continue;
                        const int y1 = t1[(i + 1) % 3], z1 = t1[(i + 2) % 3];
                        const int y2 = t2[(j + 1) % 3], z2 = t2[(j + 2) % 3];
                        for (int flip = 0; flip < 2; ++flip) {
                            const int p = flip ? z2 : y2, q = flip ? y2 : z2;
                            if (certified(y1, p) && certified(z1, q))
                                st.offer(x, x2,
                                         2 * std::max(st.get(y1, p), st.get(z1, q)) + 1);
                        }
                    }

        // Single-vertex extension: x joins a fully certified class C that
        // contains a triple, through any triple {x,u,u'} with u,u' in C.
        WeakClosure snapshot{n, s_max, {}};
        snapshot.certified.assign(static_cast<std::size_t>(n) * n, 0);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (x != y && certified(x, y)) snapshot.certified[static_cast<std::size_t>(x) * n + y] = st.get(x, y);
        for (const auto& cls : snapshot.classes()) {
            int s_class = 0;
            bool complete_relation = true;
            for (std::size_t i = 0; i < cls.size() && complete_relation; ++i)
                for (std::size_t j = i + 1; j < cls.size(); ++j) {
                    if (!certified(cls[i], cls[j])) {
                        complete_relation = false;
                        break;
                    }
                    s_class = std::max(s_class, st.get(cls[i], cls[j]));
                }
            if (!complete_relation) continue;
            std::vector<char> in_class(n, 0);
            for (int v : cls) in_class[v] = 1;
            bool has_triple = false;
            for (const auto& t : triples)
                if (in_class[t[0]] && in_class[t[1]] && in_class[t[2]]) {
                    has_triple = true;
                    break;
                }
            if (!has_triple) continue;
            const int cost = 3 * s_class + 2;
            if (cost > s_max) continue;
            for (const auto& t : triples)
                for (int i = 0; i < 3; ++i) {
                    const int x = t[i], u = t[(i + 1) % 3], u2 = t[(i + 2) % 3];
                    if (in_class[x] || !in_class[u] || !in_class[u2]) continue;
                    for (int w : cls) st.offer(x, w, cost);
                }
        }
    } while (st.changed);

    WeakClosure out;
    out.n = n;
    out.s_max = s_max;
    out.certified.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && st.get(x, y) <= s_max)
                out.certified[static_cast<std::size_t>(x) * n + y] = st.get(x, y);
    return out;
}

namespace {

bool triple_ok(const Digraph& d, int a, int b, int c) {
    if (a == b || a == c || b == c) return false;
    const int t[3] = {a, b, c};
    return family_member(d, t, 1, true);
}

// Can {anchor} u W (a multiset of size 3s-1) be split into s K_{3,1} triples?
bool side_partitions(const Digraph& d, int anchor, const std::vector<int>& w, int s) {
    if (s == 1) return w.size() == 2 && triple_ok(d, anchor, w[0], w[1]);
    // s == 2: pick the two companions of the anchor, remaining three form the
    // second triple.
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (!triple_ok(d, anchor, w[i], w[j])) continue;
            std::vector<int> rest;
            for (std::size_t k = 0; k < w.size(); ++k)
                if (k != i && k != j) rest.push_back(w[k]);
            if (triple_ok(d, rest[0], rest[1], rest[2])) return true;
        }
    return false;
}

}  // namespace

WeakPairWitness verify_weak_pair(const Digraph& d, int x, int xp, int s) {
    if (s != 1 && s != 2) throw std::invalid_argument("oracle supports s in {1,2}");
    if (x == xp) throw std::invalid_argument("need distinct vertices");
    const int n = d.n();
    WeakPairWitness res;
    const int size = 3 * s - 1;
    // Non-decreasing multisets with multiplicity <= 2 (three copies could
    // never sit in distinct triples alongside an anchor).
    std::vector<int> w(size, 0);
    auto rec = [&](auto&& self, int pos, int from) -> bool {
        if (pos == size) {
            if (!side_partitions(d, x, w, s) || !side_partitions(d, xp, w, s)) return false;
            if (!res.found) {
                res.found = true;
                res.witness = w;
            }
            bool anchor_free = std::find(w.begin(), w.end(), x) == w.end() &&
                               std::find(w.begin(), w.end(), xp) == w.end();
            if (anchor_free && !res.anchor_free_found) {
                res.anchor_free_found = true;
                res.anchor_free_witness = w;
            }
            return res.found && res.anchor_free_found;
        }
        for (int v = from; v < n; ++v) {
            if (pos >= 2 && w[pos - 1] == v && w[pos - 2] == v) continue;  // multiplicity cap
            w[pos] = v;
            if (self(self, pos + 1, v)) return true;
        }
        return false;
    };
    rec(rec, 0, 0);
    return res;
}

}  // namespace rt
