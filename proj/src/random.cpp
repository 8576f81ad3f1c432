#include "rt/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rt {

bool coin(std::mt19937_64& rng, double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    const auto threshold = static_cast<std::uint64_t>(std::llround(p * 9007199254740992.0));  // 2^53
    return (rng() >> 11) < threshold;
}

EdgeColouredGraph random_coloured(int n, double p, long q, std::uint64_t seed, bool injective) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability outside [0,1]");
    if (q < 1) throw std::invalid_argument("palette size must be >= 1");
    std::mt19937_64 rng(seed);
    EdgeColouredGraph g(n);
    std::vector<std::pair<int, int>> kept;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, p)) kept.emplace_back(u, v);
    if (!injective) {
        for (auto [u, v] : kept) g.add_edge(u, v, static_cast<long>(rng() % static_cast<std::uint64_t>(q)));
        return g;
    }
    if (q < static_cast<long>(kept.size()))
        throw std::invalid_argument("palette too small for injective colouring");
    std::vector<long> palette(q);
    std::iota(palette.begin(), palette.end(), 0L);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::size_t j = i + rng() % (palette.size() - i);
        std::swap(palette[i], palette[j]);
        g.add_edge(kept[i].first, kept[i].second, palette[i]);
    }
    return g;
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("arc probability outside [0,1]");
    std::mt19937_64 rng(seed);
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng, p)) d.add_arc(u, v);
    return d;
}

Digraph random_digraph_min_out(int n, int dmin, double p, std::uint64_t seed) {
    if (dmin > n - 1) throw std::invalid_argument("min out-degree larger than n-1");
    std::mt19937_64 rng(seed);
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng, p)) d.add_arc(u, v);
    for (int v = 0; v < n; ++v) {
        std::vector<int> missing;
        for (int u = 0; u < n; ++u)
            if (u != v && !d.has_arc(v, u)) missing.push_back(u);
        int deficit = dmin - d.out_degree(v);
        for (int i = 0; i < deficit; ++i) {
            std::size_t j = i + rng() % (missing.size() - i);
            std::swap(missing[i], missing[j]);
            d.add_arc(v, missing[i]);
        }
    }
    return d;
}

Digraph random_tournament(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Digraph d(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng, 0.5))
                d.add_arc(u, v);
            else
                d.add_arc(v, u);
        }
    return d;
}

Digraph random_tournament_min_out(int n, int dmin, std::uint64_t seed, int max_tries) {
    for (int t = 0; t < max_tries; ++t) {
        Digraph d = random_tournament(n, seed + static_cast<std::uint64_t>(t) * 0x9e3779b97f4a7c15ULL);
        if (d.min_out_degree() >= dmin) return d;
    }
    throw std::runtime_error("no tournament with requested min out-degree found");
}

}  // namespace rt
