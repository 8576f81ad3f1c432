#include "rt/matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <stdexcept>

namespace rt {

MatchingResult max_matching(const Graph& g) {
    if (g.n() == 0) return {};
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(g.n());
    for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.n());
    bool ok = boost::checked_edmonds_maximum_cardinality_matching(bg, &mate[0]);
    if (!ok) throw std::logic_error("matching verification failed");
    MatchingResult res;
    const auto null_v = boost::graph_traits<BoostGraph>::null_vertex();
    for (int v = 0; v < g.n(); ++v)
        if (mate[v] != null_v && v < static_cast<int>(mate[v]))
            res.edges.emplace_back(v, static_cast<int>(mate[v]));
    res.size = static_cast<int>(res.edges.size());
    return res;
}

namespace {

long choose2(long x) { return x < 2 ? 0 : x * (x - 1) / 2; }

}  // namespace

long eg_bound(long n, long e) {
    if (n < 0 || e < 0 || e > choose2(n)) throw std::invalid_argument("bad edge count");
    long t = 0;
    // Both expressions grow with t, so the guarantee region is an interval.
    while (t + 1 <= n / 2) {
        long next = t + 1;
        long bound = std::max(choose2(2 * next - 1), choose2(n) - choose2(n - next + 1));
        if (e > bound)
            t = next;
        else
            break;
    }
    return t;
}

}  // namespace rt
