#include "rt/thresholds.hpp"

#include <cmath>
#include <stdexcept>

namespace rt {

double ThresholdFormula::approx() const {
    if (!surd) return value.get_d();
    return (surd_add + std::sqrt(surd_radicand.get_d())) / static_cast<double>(surd_den);
}

ThresholdFormula threshold_formula(int r) {
    if (r < 3) throw std::invalid_argument("need r >= 3");
    ThresholdFormula f;
    f.r = r;
    if (r == 3) {
        f.value = make_rational(5, 6);
    } else if (r == 4) {
        f.surd = true;
        f.surd_add = 2;
        f.surd_den = 5;
        f.surd_radicand = make_rational(13, 2);
    } else {
        long d = static_cast<long>(2 * r - 3) * r;
        f.value = Rational(1) - make_rational(1, d);
    }
    f.conjecture = Rational(1) - make_rational(r - 1, static_cast<long>(r) * r - 2);
    return f;
}

bool meets_threshold(int r, long d, long n, const Rational& margin) {
    if (n <= 0) throw std::invalid_argument("need n > 0");
    ThresholdFormula f = threshold_formula(r);
    const Rational dq(d);
    if (!f.surd) return dq >= (f.value + margin) * n;
    // d >= ((a + sqrt(s))/den + margin) n  <=>  den*(d - margin*n) - a*n >= sqrt(s)*n
    const Rational lhs = f.surd_den * (dq - margin * n) - f.surd_add * n;
    if (lhs < 0) return false;
    return lhs * lhs >= f.surd_radicand * n * n;
}

int min_out_degree_at_threshold(int r, int n, const Rational& margin) {
    for (int d = 0; d <= n; ++d)
        if (meets_threshold(r, d, n, margin)) return d;
    return n;  // unreachable threshold at this n; degenerate margins only
}

int conjecture_min_colour_degree(int r, int n) {
    ThresholdFormula f = threshold_formula(r);
    return static_cast<int>(ceil_to_long(f.conjecture * n));
}

}  // namespace rt
