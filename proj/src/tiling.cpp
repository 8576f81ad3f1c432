#include "rt/tiling.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>

#include "rt/kernels.hpp"
#include "rt/lp.hpp"

namespace rt {

PackingOptions::PackingOptions() {
    copy_cap = kDefaultCopyCap;
    if (const char* env = std::getenv("RT_MAX_COPIES")) {
        long v = std::atol(env);
        if (v > 0) copy_cap = static_cast<std::size_t>(v);
    }
}

std::string to_string(PerfectOutcome o) {
    switch (o) {
        case PerfectOutcome::yes: return "yes";
        case PerfectOutcome::no: return "no";
        case PerfectOutcome::unknown: return "unknown";
    }
    return "?";
}

bool certify_witness(const TilingWitness& w, const EdgeColouredGraph& g) {
    if (w.kind != WitnessKind::rainbow_clique) return false;
    std::vector<char> seen(g.n(), 0);
    for (const auto& part : w.parts) {
        if (static_cast<int>(part.size()) != w.r) return false;
        for (int v : part) {
            if (v < 0 || v >= g.n() || seen[v]) return false;
            seen[v] = 1;
        }
        InducedReport rep = induced_check(g, part);
        if (!rep.complete || !rep.rainbow) return false;
    }
    return true;
}

bool certify_witness(const TilingWitness& w, const Digraph& d) {
    if (w.kind != WitnessKind::family) return false;
    std::vector<char> seen(d.n(), 0);
    for (const auto& part : w.parts) {
        if (static_cast<int>(part.size()) != w.r) return false;
        for (int v : part) {
            if (v < 0 || v >= d.n() || seen[v]) return false;
            seen[v] = 1;
        }
        if (!family_member(d, part, w.family_min_out, w.complete_base)) return false;
    }
    return true;
}

bool certify_witness(const TilingWitness& w, const Graph& g) {
    if (w.kind != WitnessKind::clique) return false;
    std::vector<char> seen(g.n(), 0);
    for (const auto& part : w.parts) {
        if (static_cast<int>(part.size()) != w.r) return false;
        for (int v : part) {
            if (v < 0 || v >= g.n() || seen[v]) return false;
            seen[v] = 1;
        }
        for (std::size_t i = 0; i < part.size(); ++i)
            for (std::size_t j = i + 1; j < part.size(); ++j)
                if (!g.has_edge(part[i], part[j])) return false;
    }
    return true;
}

namespace {

struct PackingContext {
    int n = 0;
    int r = 0;
    const std::vector<std::vector<int>>* copies = nullptr;
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<int>> by_vertex;
    long budget = 0;
    long nodes = 0;
    bool exhausted = false;
    bool perfect = false;
    int target = -1;  // stop as soon as a packing of this size is found
    int upper_bound = 0;
    int best_size = -1;
    std::vector<int> best;
    std::vector<int> cur;

    bool done() const {
        return exhausted || (best_size >= 0 && best_size == target) ||
               (!perfect && best_size >= upper_bound);
    }

    void consider_current(int covered) {
        if (perfect && covered != n) return;
        if (static_cast<int>(cur.size()) > best_size) {
            best_size = static_cast<int>(cur.size());
            best = cur;
        }
    }

    void search(std::uint64_t mask, int covered) {
        consider_current(covered);
        if (done()) return;
        if (++nodes > budget) {
            exhausted = true;
            return;
        }
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!(mask >> u & 1)) {
                v = u;
                break;
            }
        if (v < 0) return;
        const int free = n - std::popcount(mask);
        if (perfect) {
            if (covered + free < n) return;  // skipped vertices cannot happen here
        } else if (static_cast<int>(cur.size()) + free / r <= best_size) {
            return;  // cannot beat the incumbent
        }
        for (int idx : by_vertex[v]) {
            if (masks[idx] & mask) continue;
            cur.push_back(idx);
            search(mask | masks[idx], covered + r);
            cur.pop_back();
            if (done()) return;
        }
        if (!perfect) search(mask | (std::uint64_t{1} << v), covered);
    }
};

}  // namespace

PackingOutcome max_set_packing(int n, int r, const std::vector<std::vector<int>>& copies,
                               const PackingOptions& opt, int early_exit_target,
                               bool require_perfect) {
    if (n > 64) throw std::invalid_argument("set packing supports n <= 64");
    if (r < 1) throw std::invalid_argument("set size must be positive");
    PackingContext ctx;
    ctx.n = n;
    ctx.r = r;
    ctx.copies = &copies;
    ctx.budget = opt.node_budget;
    ctx.perfect = require_perfect;
    ctx.target = early_exit_target;
    ctx.masks.reserve(copies.size());
    ctx.by_vertex.assign(n, {});
    for (int i = 0; i < static_cast<int>(copies.size()); ++i) {
        std::uint64_t m = 0;
        for (int v : copies[i]) {
            if (v < 0 || v >= n) throw std::out_of_range("copy vertex out of range");
            m |= std::uint64_t{1} << v;
        }
        ctx.masks.push_back(m);
        for (int v : copies[i]) ctx.by_vertex[v].push_back(i);
    }

    ctx.upper_bound = r > 0 ? n / r : 0;
    if (opt.use_lp_bound && !copies.empty() && copies.size() <= opt.lp_bound_max_copies) {
        FractionalMatching fm = solve_fractional_matching(CopyHypergraph{n, r, copies});
        ctx.upper_bound = std::min<int>(ctx.upper_bound,
                                        static_cast<int>(floor_to_long(fm.value)));
    }

    if (!require_perfect) {
        // Greedy over the lexicographic copy order seeds the incumbent.
        std::uint64_t mask = 0;
        std::vector<int> greedy;
        for (int i = 0; i < static_cast<int>(copies.size()); ++i)
            if (!(ctx.masks[i] & mask)) {
                mask |= ctx.masks[i];
                greedy.push_back(i);
            }
        ctx.best_size = static_cast<int>(greedy.size());
        ctx.best = std::move(greedy);
    }

    if (!ctx.done()) ctx.search(0, 0);

    PackingOutcome out;
    out.size = std::max(ctx.best_size, 0);
    out.chosen = ctx.best;
    out.budget_exhausted = ctx.exhausted;
    out.optimal = !ctx.exhausted;
    out.nodes = ctx.nodes;
    if (require_perfect) out.optimal = out.optimal || ctx.best_size == ctx.target;
    return out;
}

namespace {

TilingWitness witness_from(const std::vector<std::vector<int>>& copies,
                           const std::vector<int>& chosen, WitnessKind kind, int r, int min_out,
                           bool complete_base) {
    TilingWitness w;
    w.kind = kind;
    w.r = r;
    w.family_min_out = min_out;
    w.complete_base = complete_base;
    for (int idx : chosen) w.parts.push_back(copies[idx]);
    return w;
}

}  // namespace

TilingResult max_rainbow_tiling(const EdgeColouredGraph& g, int r, const PackingOptions& opt) {
    if (r < 2) throw std::invalid_argument("clique order must be >= 2");
    EnumerationResult copies = rainbow_cliques(g, r, opt.copy_cap);
    PackingOutcome out = max_set_packing(g.n(), r, copies.sets, opt);
    TilingResult res;
    res.size = out.size;
    res.witness = witness_from(copies.sets, out.chosen, WitnessKind::rainbow_clique, r, 0, true);
    // A capped copy list still yields a valid packing, but optimality would
    // rest on unseen copies.
    res.optimal = out.optimal && !copies.capped;
    res.budget_exhausted = out.budget_exhausted;
    res.copies_capped = copies.capped;
    res.nodes = out.nodes;
    return res;
}

namespace {

PerfectTilingResult perfect_from_copies(int n, int r, const std::vector<std::vector<int>>& copies,
                                        bool capped, WitnessKind kind, int min_out,
                                        bool complete_base, const PackingOptions& opt) {
    PackingOutcome out = max_set_packing(n, r, copies, opt, n / r, true);
    PerfectTilingResult res;
    res.nodes = out.nodes;
    res.copies_capped = capped;
    if (out.size == n / r) {
        res.outcome = PerfectOutcome::yes;
        res.witness = witness_from(copies, out.chosen, kind, r, min_out, complete_base);
    } else if (out.budget_exhausted || capped) {
        res.outcome = PerfectOutcome::unknown;
    } else {
        res.outcome = PerfectOutcome::no;
    }
    return res;
}

}  // namespace

PerfectTilingResult has_perfect_rainbow_tiling(const EdgeColouredGraph& g, int r,
                                               const PackingOptions& opt) {
    if (r < 2) throw std::invalid_argument("clique order must be >= 2");
    if (g.n() % r != 0) throw std::invalid_argument("perfect tiling needs r | n");
    EnumerationResult copies = rainbow_cliques(g, r, opt.copy_cap);
    return perfect_from_copies(g.n(), r, copies.sets, copies.capped,
                               WitnessKind::rainbow_clique, 0, true, opt);
}

PerfectTilingResult perfect_family_tiling(const Digraph& d, int r, int s, bool starred,
                                          const PackingOptions& opt) {
    if (r < 2 || s < 0 || s >= r) throw std::invalid_argument("need 0 <= s < r");
    if (d.n() % r != 0) throw std::invalid_argument("perfect tiling needs r | n");
    EnumerationResult copies = family_sets(d, r, s, !starred, opt.copy_cap);
    return perfect_from_copies(d.n(), r, copies.sets, copies.capped, WitnessKind::family, s,
                               !starred, opt);
}

TilingResult max_clique_tiling(const Graph& g, int q, const PackingOptions& opt) {
    if (q < 2) throw std::invalid_argument("clique order must be >= 2");
    EnumerationResult copies = cliques(g, q, opt.copy_cap);
    PackingOutcome out = max_set_packing(g.n(), q, copies.sets, opt);
    TilingResult res;
    res.size = out.size;
    res.witness = witness_from(copies.sets, out.chosen, WitnessKind::clique, q, 0, true);
    res.optimal = out.optimal && !copies.capped;
    res.budget_exhausted = out.budget_exhausted;
    res.copies_capped = copies.capped;
    res.nodes = out.nodes;
    return res;
}

Rational abhp_bound(long n, const Rational& alpha, const Rational& gamma) {
    if (alpha <= 0 || alpha > make_rational(1, 3))
        throw std::invalid_argument("need 0 < alpha <= 1/3");
    if (gamma < 0) throw std::invalid_argument("need gamma >= 0");
    const Rational a = alpha;
    const Rational e1 = (1 + 2 * a - a * a) / 4;
    const Rational e2 = make_rational(1, 4) + 2 * a * a;
    const Rational e3 = 2 * a * (1 - a);
    const Rational e4 = make_rational(1, 2) - 3 * a + 9 * a * a;
    Rational best = std::max(std::max(e1, e2), std::max(e3, e4));
    return (best + gamma) * n * n;
}

}  // namespace rt
