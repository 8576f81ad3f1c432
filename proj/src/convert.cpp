#include "rt/convert.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rt/io.hpp"

namespace rt {

namespace {

// Splits one colour class of an edge-coloured-critical graph into its stars.
// Criticality guarantees each monochromatic component is a star; anything
// else means the critical subgraph is broken, which is a logic error here.
std::vector<Star> stars_of_colour(long colour, const std::vector<std::pair<int, int>>& edges,
                                  int n) {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    std::map<int, Star> by_centre;
    for (auto [u, v] : edges) {
        int centre, leaf;
        if (deg[u] > 1 && deg[v] > 1)
            throw std::logic_error("colour class is not a union of stars");
        if (deg[u] > 1) {
            centre = u;
            leaf = v;
        } else if (deg[v] > 1) {
            centre = v;
            leaf = u;
        } else {
            centre = std::min(u, v);  // isolated edge: pick a centre deterministically
            leaf = std::max(u, v);
        }
        auto& star = by_centre[centre];
        star.colour = colour;
        star.centre = centre;
        star.leaves.push_back(leaf);
    }
    std::vector<Star> out;
    for (auto& [c, star] : by_centre) {
        std::sort(star.leaves.begin(), star.leaves.end());
        out.push_back(std::move(star));
    }
    return out;
}

}  // namespace

ConversionResult convert(const EdgeColouredGraph& g) {
    const int n = g.n();
    EdgeColouredGraph crit = critical_subgraph(g);
    std::map<long, std::vector<std::pair<int, int>>> by_colour;
    for (auto [u, v, c] : crit.edges()) by_colour[c].emplace_back(u, v);

    ConversionResult res;
    res.h = Digraph(n);
    for (auto& [colour, edges] : by_colour)
        for (auto& star : stars_of_colour(colour, edges, n)) {
            for (int leaf : star.leaves)
                res.h.add_arc(leaf, star.centre);
            const long s = static_cast<long>(star.leaves.size());
            if (s * s <= n) res.h.add_arc(star.centre, star.leaves.front());
            res.stars.push_back(std::move(star));
        }
    res.guarantees = verify_conversion(g, res.h);
    return res;
}

ConversionGuarantees verify_conversion(const EdgeColouredGraph& g, const Digraph& h) {
    const int n = g.n();
    if (h.n() != n) throw std::invalid_argument("vertex count mismatch");
    ConversionGuarantees rep;
    rep.min_out_degree = n ? h.min_out_degree() : 0;
    rep.min_colour_degree = g.min_colour_degree();
    rep.ceil_sqrt_n = ceil_sqrt(n);

    rep.base_subgraph = true;
    for (auto [u, v] : h.arcs())
        if (!g.has_edge(u, v)) rep.base_subgraph = false;

    rep.out_degree_bound = rep.min_out_degree >= rep.min_colour_degree - rep.ceil_sqrt_n;

    rep.out_neighbourhoods_rainbow = true;
    for (int u = 0; u < n; ++u) {
        std::set<long> seen;
        for (int v = 0; v < n; ++v) {
            if (v == u || !h.has_arc(u, v)) continue;
            long c = g.colour_of(u, v);
            if (c < 0 || !seen.insert(c).second) rep.out_neighbourhoods_rainbow = false;
        }
    }

    rep.same_colour_in_bound = true;
    for (auto [u, v] : h.arcs()) {
        const long cuv = g.colour_of(u, v);
        long count = 0;
        for (int w = 0; w < n; ++w)
            if (w != u && h.has_arc(w, u) && g.colour_of(u, w) == cuv) ++count;
        rep.max_same_colour_in = std::max(rep.max_same_colour_in, count);
        if (count * count > n) rep.same_colour_in_bound = false;
    }

    rep.colour_path_pair_bound = true;
    for (int v = 0; v < n; ++v) {
        long pairs = 0;
        for (int x = 0; x < n; ++x) {
            if (x == v || !h.has_arc(x, v)) continue;
            for (int y = 0; y < n; ++y) {
                if (y == v || !h.has_arc(v, y)) continue;
                if (g.colour_of(x, v) == g.colour_of(v, y)) ++pairs;
            }
        }
        rep.max_colour_path_pairs = std::max(rep.max_colour_path_pairs, pairs);
        if (pairs > n) rep.colour_path_pair_bound = false;
    }
    return rep;
}

long count_bad_triples(const EdgeColouredGraph& g, const Digraph& h, std::optional<int> through) {
    if (g.n() != h.n()) throw std::invalid_argument("vertex count mismatch");
    BadTripleCounts counts = bad_triples(g, h);
    if (through) {
        if (*through < 0 || *through >= g.n()) throw std::out_of_range("vertex out of range");
        return counts.per_vertex[*through];
    }
    return counts.total;
}

FamilyMembership classify_family(const Digraph& d, std::span<const int> s, int r, int min_out,
                                 bool require_complete_base) {
    if (static_cast<int>(s.size()) != r)
        throw std::invalid_argument("vertex set size does not match r");
    if (min_out < 0 || min_out >= r) throw std::invalid_argument("need 0 <= s < r");
    FamilyMembership rep;
    rep.complete_base = true;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (!d.has_arc(s[i], s[j]) && !d.has_arc(s[j], s[i])) rep.complete_base = false;
    rep.min_out_degree = r;
    for (int i = 0; i < r; ++i) {
        int out = 0;
        for (int j = 0; j < r; ++j)
            if (j != i && d.has_arc(s[i], s[j])) ++out;
        rep.min_out_degree = std::min(rep.min_out_degree, out);
    }
    rep.member = rep.min_out_degree >= min_out && (!require_complete_base || rep.complete_base);
    if (r == 3) {
        const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
        for (auto& p : perms) {
            int x = s[p[0]], y = s[p[1]], z = s[p[2]];
            if (d.has_arc(x, y) && d.has_arc(y, z) && d.has_arc(z, x)) rep.contains_c3 = true;
            if (d.has_arc(x, y) && d.has_arc(x, z) && d.has_arc(y, z) && d.has_arc(z, y))
                rep.contains_j3 = true;
        }
    }
    return rep;
}

void PairDensityMatrix::set_density(int i, int j, const Rational& q) {
    if (i == j) throw std::invalid_argument("diagonal density");
    d[static_cast<std::size_t>(i) * k + j] = q;
}

void PairDensityMatrix::set_double_density(int i, int j, const Rational& q) {
    if (i == j) throw std::invalid_argument("diagonal density");
    dpm[static_cast<std::size_t>(i) * k + j] = q;
    dpm[static_cast<std::size_t>(j) * k + i] = q;
}

void PairDensityMatrix::validate() const {
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            if (density(i, j) < 0 || density(i, j) > 1)
                throw std::invalid_argument("density outside [0,1]");
            if (double_density(i, j) < 0 ||
                double_density(i, j) > std::min(density(i, j), density(j, i)))
                throw std::invalid_argument("double-edge density exceeds pair density");
        }
}

PairDensityMatrix parse_pdm(std::istream& in) {
    std::string line;
    int lineno = 0;
    PairDensityMatrix m;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag) || tag[0] == '#') continue;
        if (!have_header) {
            if (tag != "pdm") throw ParseError("expected 'pdm <k>' header", lineno);
            if (!(ss >> m.k) || m.k < 0) throw ParseError("bad cluster count", lineno);
            m.d.assign(static_cast<std::size_t>(m.k) * m.k, Rational(0));
            m.dpm.assign(static_cast<std::size_t>(m.k) * m.k, Rational(0));
            have_header = true;
            continue;
        }
        int i, j;
        std::string frac;
        if (!(ss >> i >> j >> frac)) throw ParseError("expected '<tag> <i> <j> <p/q>'", lineno);
        if (i < 0 || i >= m.k || j < 0 || j >= m.k || i == j)
            throw ParseError("cluster index out of range", lineno);
        Rational q;
        try {
            q = parse_rational(frac);
        } catch (const std::exception& e) {
            throw ParseError(e.what(), lineno);
        }
        if (tag == "d")
            m.set_density(i, j, q);
        else if (tag == "dpm")
            m.set_double_density(i, j, q);
        else
            throw ParseError("unknown tag '" + tag + "'", lineno);
    }
    if (!have_header) throw ParseError("missing 'pdm <k>' header");
    m.validate();
    return m;
}

PairDensityMatrix parse_pdm_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_pdm(ss);
}

std::string write_pdm(const PairDensityMatrix& m) {
    std::ostringstream out;
    out << "pdm " << m.k << "\n";
    for (int i = 0; i < m.k; ++i)
        for (int j = 0; j < m.k; ++j)
            if (i != j && m.density(i, j) != 0)
                out << "d " << i << " " << j << " " << m.density(i, j).get_str() << "\n";
    for (int i = 0; i < m.k; ++i)
        for (int j = i + 1; j < m.k; ++j)
            if (m.double_density(i, j) != 0)
                out << "dpm " << i << " " << j << " " << m.double_density(i, j).get_str() << "\n";
    return out.str();
}

PairDensityMatrix load_pdm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_pdm(in);
}

Digraph sample_reduced_digraph(const PairDensityMatrix& m, std::uint64_t seed, bool strict) {
    m.validate();
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(static_cast<unsigned long>(seed));
    Digraph out(m.k);
    for (int i = 0; i < m.k; ++i)
        for (int j = i + 1; j < m.k; ++j) {
            if (m.double_density(i, j) > 0) {
                out.add_arc(i, j);
                out.add_arc(j, i);
                continue;
            }
            const Rational total = m.density(i, j) + m.density(j, i);
            if (total == 0) continue;
            if (strict)
                throw std::runtime_error(
                    "strict mode: single-arc branch reached for pair (" + std::to_string(i) +
                    "," + std::to_string(j) + ")");
            // P(i->j) = d(i,j)/total, drawn exactly: uniform in [0, den) < num.
            const Rational p = m.density(i, j) / total;
            const mpz_class draw = rng.get_z_range(p.get_den());
            if (draw < p.get_num())
                out.add_arc(i, j);
            else
                out.add_arc(j, i);
        }
    return out;
}

}  // namespace rt
