#include "rt/constructions.hpp"

#include <stdexcept>
#include <string>

namespace rt {

namespace {

[[noreturn]] void reject(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

Prop15Layout prop15_layout(int n, int k) {
    if ((n - 2 * k) % 7 != 0) reject("need n == 2k (mod 7)");
    if (9 * k < n) reject("need n/9 <= k");
    if (3 * k > n) reject("need k <= n/3");
    const int t = (n - 2 * k) / 7;
    Prop15Layout lay{6 * t, 2 * (k - t) - 1, 3 * t + 1};
    if (lay.x_size <= 0) reject("part X empty: need n - 2k >= 7");
    if (lay.x_size % 2 != 0) reject("part X must split evenly");
    if (lay.y_size <= 0) reject("part Y empty: need 18k - 2n >= 14");
    if (lay.z_size <= 0) reject("part Z empty");
    return lay;
}

EdgeColouredGraph build_prop15(int n, int k) {
    const auto lay = prop15_layout(n, k);
    EdgeColouredGraph g(n);
    const int x0 = 0, y0 = lay.x_size, z0 = lay.x_size + lay.y_size;
    // Disjoint colour ranges per component keep the "colour of y appears
    // nowhere else" requirement true by construction.
    long next = 0;
    std::vector<long> y_colour(lay.y_size);
    for (int i = 0; i < lay.y_size; ++i) y_colour[i] = next++;
    const int half = lay.x_size / 2;
    for (int i = 0; i < half; ++i)
        for (int j = 0; j < half; ++j) g.add_edge(x0 + i, x0 + half + j, next++);
    for (int u = y0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, next++);
    for (int x = x0; x < x0 + lay.x_size; ++x)
        for (int i = 0; i < lay.y_size; ++i) g.add_edge(x, y0 + i, y_colour[i]);
    (void)z0;
    return g;
}

Prop16Layout prop16_layout(int r, int m) {
    if (r < 3) reject("need r >= 3");
    if (m < 1 || m % r != 0) reject("need m == 0 (mod r), m positive");
    Prop16Layout lay;
    lay.x_size = (r - 1) * m;
    lay.y_size = (r - 1) * (r - 1) * m - 1;
    lay.z_size = (r - 2) * m + 1;
    lay.n = (r * r - 2) * m;
    return lay;
}

EdgeColouredGraph build_prop16(int r, int m) {
    const auto lay = prop16_layout(r, m);
    EdgeColouredGraph g(lay.n);
    const int x0 = 0, y0 = lay.x_size;
    long next = 0;
    std::vector<long> y_colour(lay.y_size);
    for (int i = 0; i < lay.y_size; ++i) y_colour[i] = next++;
    // X: complete (r-1)-partite, classes of size m, rainbow.
    for (int u = 0; u < lay.x_size; ++u)
        for (int v = u + 1; v < lay.x_size; ++v)
            if (u / m != v / m) g.add_edge(x0 + u, x0 + v, next++);
    for (int u = y0; u < lay.n; ++u)
        for (int v = u + 1; v < lay.n; ++v) g.add_edge(u, v, next++);
    for (int x = x0; x < x0 + lay.x_size; ++x)
        for (int i = 0; i < lay.y_size; ++i) g.add_edge(x, y0 + i, y_colour[i]);
    return g;
}

EdgeColouredGraph build_proper_bipartite(int n) {
    if (n < 2 || n % 2 != 0) reject("need even n >= 2");
    const int m = n / 2;
    EdgeColouredGraph g(n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g.add_edge(i, m + j, (i + j) % m);
    return g;
}

EdgeColouredGraph build_rainbow_complete(int n) {
    if (n < 1) reject("need n >= 1");
    EdgeColouredGraph g(n);
    long next = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, next++);
    return g;
}

}  // namespace rt
