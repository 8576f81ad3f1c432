#include "rt/lp.hpp"

#include <algorithm>
#include <stdexcept>

#include "rt/matching.hpp"
#include "rt/random.hpp"
#include "rt/thresholds.hpp"

namespace rt {

CopyHypergraph build_copy_hypergraph(const Digraph& d, int r, std::size_t cap) {
    if (r < 3) throw std::invalid_argument("need r >= 3");
    EnumerationResult e = family_sets(d, r, r - 2, true, cap);
    if (e.capped) throw std::runtime_error("copy cap exceeded while building hypergraph");
    return CopyHypergraph{d.n(), r, std::move(e.sets)};
}

LpResult simplex_max(int m, int cols, const std::vector<Rational>& a,
                     const std::vector<Rational>& b, const std::vector<Rational>& c,
                     std::vector<int> basis) {
    if (static_cast<int>(basis.size()) != m) throw std::invalid_argument("basis size mismatch");
    std::vector<Rational> t = a;        // working tableau, row-major m x cols
    std::vector<Rational> rhs = b;
    const std::vector<int> init_basis = basis;
    auto at = [&](int i, int j) -> Rational& { return t[static_cast<std::size_t>(i) * cols + j]; };

    std::vector<Rational> red(cols);
    while (true) {
        // Reduced costs: c_j - c_B . T_j.
        for (int j = 0; j < cols; ++j) {
            Rational z = c[j];
            for (int i = 0; i < m; ++i)
                if (at(i, j) != 0 && c[basis[i]] != 0) z -= c[basis[i]] * at(i, j);
            red[j] = z;
        }
        int enter = -1;
        for (int j = 0; j < cols; ++j)
            if (red[j] > 0) {
                enter = j;  // Bland: lowest index
                break;
            }
        if (enter < 0) break;
        int leave = -1;
        Rational best_ratio;
        for (int i = 0; i < m; ++i) {
            if (at(i, enter) <= 0) continue;
            Rational ratio = rhs[i] / at(i, enter);
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave < 0) throw std::runtime_error("LP unbounded");
        // Pivot on (leave, enter).
        const Rational piv = at(leave, enter);
        for (int j = 0; j < cols; ++j) at(leave, j) /= piv;
        rhs[leave] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave || at(i, enter) == 0) continue;
            const Rational f = at(i, enter);
            for (int j = 0; j < cols; ++j)
                if (at(leave, j) != 0) at(i, j) -= f * at(leave, j);
            rhs[i] -= f * rhs[leave];
        }
        basis[leave] = enter;
    }

    LpResult res;
    res.x.assign(cols, Rational(0));
    for (int i = 0; i < m; ++i) res.x[basis[i]] = rhs[i];
    res.value = 0;
    for (int i = 0; i < m; ++i)
        if (c[basis[i]] != 0) res.value += c[basis[i]] * rhs[i];
    res.y.assign(m, Rational(0));
    for (int i = 0; i < m; ++i) res.y[i] = c[init_basis[i]] - red[init_basis[i]];
    return res;
}

namespace {

// Columns: one per hypergraph edge, then one per vertex (slack/artificial).
void incidence_columns(const CopyHypergraph& f, std::vector<Rational>& a, int cols) {
    const int m = f.n;
    a.assign(static_cast<std::size_t>(m) * cols, Rational(0));
    for (int e = 0; e < static_cast<int>(f.edges.size()); ++e)
        for (int v : f.edges[e]) a[static_cast<std::size_t>(v) * cols + e] = 1;
    const int ne = static_cast<int>(f.edges.size());
    for (int v = 0; v < m; ++v) a[static_cast<std::size_t>(v) * cols + ne + v] = 1;
}

}  // namespace

FractionalMatching solve_fractional_matching(const CopyHypergraph& f) {
    const int ne = static_cast<int>(f.edges.size());
    const int cols = ne + f.n;
    std::vector<Rational> a;
    incidence_columns(f, a, cols);
    std::vector<Rational> b(f.n, Rational(1));
    std::vector<Rational> c(cols, Rational(0));
    for (int e = 0; e < ne; ++e) c[e] = 1;
    std::vector<int> basis(f.n);
    for (int v = 0; v < f.n; ++v) basis[v] = ne + v;
    LpResult lp = simplex_max(f.n, cols, a, b, c, basis);
    FractionalMatching res;
    res.value = lp.value;
    res.weight.assign(lp.x.begin(), lp.x.begin() + ne);
    res.perfect = f.r > 0 && lp.value == make_rational(f.n, f.r);
    return res;
}

DualCertificate farkas_certificate(const CopyHypergraph& f) {
    const int ne = static_cast<int>(f.edges.size());
    const int cols = ne + f.n;
    std::vector<Rational> a;
    incidence_columns(f, a, cols);
    std::vector<Rational> b(f.n, Rational(1));
    // Phase one for { sum_{e owns v} y_e = 1, y >= 0 }: minimise the artificials.
    std::vector<Rational> c(cols, Rational(0));
    for (int v = 0; v < f.n; ++v) c[ne + v] = -1;
    std::vector<int> basis(f.n);
    for (int v = 0; v < f.n; ++v) basis[v] = ne + v;
    LpResult lp = simplex_max(f.n, cols, a, b, c, basis);
    if (lp.value == 0)
        throw std::logic_error("farkas_certificate needs a non-perfect instance");

    // Dual of the phase-one LP is the raw Farkas vector: edge sums >= 0 and
    // a negative total.
    std::vector<Rational> raw = lp.y;
    Rational total(0);
    for (const auto& w : raw) total += w;
    for (const auto& e : f.edges) {
        Rational s(0);
        for (int v : e) s += raw[v];
        if (s < 0) throw std::logic_error("raw Farkas vector violates an edge constraint");
    }
    if (total >= 0) throw std::logic_error("raw Farkas vector has nonnegative total");

    Rational low = raw[0];
    for (const auto& w : raw) low = std::min(low, w);
    // low < 0 because the total is negative; rescale so the minimum is -1.
    for (auto& w : raw) w /= -low;
    const Rational cap(f.r - 1);
    for (auto& w : raw) w = std::min(w, cap);
    DualCertificate cert;
    cert.omega.reserve(raw.size());
    for (auto& w : raw) cert.omega.push_back((w + 1) / f.r);
    return cert;
}

CertificateReport verify_certificate(const CopyHypergraph& f, const std::vector<Rational>& omega) {
    CertificateReport rep;
    if (static_cast<int>(omega.size()) != f.n) return rep;
    rep.edge_sums_ok = true;
    for (const auto& e : f.edges) {
        Rational s(0);
        for (int v : e) s += omega[v];
        if (s < 1) rep.edge_sums_ok = false;
    }
    rep.range_ok = true;
    Rational low(omega.empty() ? 0 : 1), total(0);
    for (const auto& w : omega) {
        if (w < 0 || w > 1) rep.range_ok = false;
        low = std::min(low, w);
        total += w;
    }
    rep.min_zero_ok = !omega.empty() && low == 0;
    rep.total_ok = f.r > 0 && total < make_rational(f.n, f.r);
    if (f.r == 3) {
        for (int v = 0; v < f.n && rep.link_ok; ++v)
            if (!certificate_link_inequality(f, omega, v).holds) rep.link_ok = false;
    }
    return rep;
}

Graph link_graph(const CopyHypergraph& f, int v) {
    if (f.r != 3) throw std::invalid_argument("link graph requires r = 3");
    if (v < 0 || v >= f.n) throw std::out_of_range("vertex out of range");
    Graph g(f.n);
    for (const auto& e : f.edges) {
        if (std::find(e.begin(), e.end(), v) == e.end()) continue;
        int a = -1, b = -1;
        for (int u : e)
            if (u != v) (a < 0 ? a : b) = u;
        if (!g.has_edge(a, b)) g.add_edge(a, b);
    }
    return g;
}

LinkInequalityReport certificate_link_inequality(const CopyHypergraph& f,
                                                 const std::vector<Rational>& omega, int v) {
    LinkInequalityReport rep;
    rep.matching_size = max_matching(link_graph(f, v)).size;
    for (const auto& w : omega) rep.lhs += w;
    rep.rhs = Rational(rep.matching_size) * (Rational(1) - omega[v]);
    rep.holds = rep.lhs >= rep.rhs;
    return rep;
}

DeskCheckStats desk_check_thresholds(int r, int n, int trials, const Rational& margin,
                                     std::uint64_t seed) {
    if (n % r != 0) throw std::invalid_argument("need r | n");
    DeskCheckStats stats;
    stats.r = r;
    stats.n = n;
    stats.trials = trials;
    stats.min_out_degree = min_out_degree_at_threshold(r, n, margin);
    const double base_density[4] = {0.80, 0.85, 0.90, 0.95};
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(t) * 0x9e3779b97f4a7c15ULL;
        Digraph d = random_digraph_min_out(n, stats.min_out_degree, base_density[t % 4], s);
        CopyHypergraph f = build_copy_hypergraph(d, r);
        FractionalMatching fm = solve_fractional_matching(f);
        if (fm.perfect) {
            ++stats.feasible;
        } else {
            DeskCheckInstance inst;
            inst.seed = s;
            inst.digraph = d;
            inst.certificate = farkas_certificate(f).omega;
            stats.infeasible.push_back(std::move(inst));
        }
    }
    return stats;
}

}  // namespace rt
