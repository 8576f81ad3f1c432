#pragma once

#include "rt/rational.hpp"

namespace rt {

/// Minimum out-degree coefficient guaranteeing a perfect fractional
/// (r,r-2)-tiling: 5/6 for r=3, (2+sqrt(13/2))/5 for r=4 (kept as a surd and
/// compared by integer cross-multiplication and squaring), 1-1/((2r-3)r) for
/// r >= 5. Also carries the conjectured colour-degree coefficient
/// 1-(r-1)/(r^2-2) for perfect rainbow-K_r-tilings.
struct ThresholdFormula {
    int r = 0;
    bool surd = false;       // true only for r = 4
    Rational value;          // rational cases
    long surd_add = 0;       // (surd_add + sqrt(surd_radicand)) / surd_den
    long surd_den = 1;
    Rational surd_radicand;
    Rational conjecture;
    double approx() const;
};

ThresholdFormula threshold_formula(int r);

/// Exact test of d >= (threshold_r + margin) * n.
bool meets_threshold(int r, long d, long n, const Rational& margin = Rational(0));

/// Least integer d passing meets_threshold.
int min_out_degree_at_threshold(int r, int n, const Rational& margin = Rational(0));

/// Least integer c with c >= (1 - (r-1)/(r^2-2)) * n.
int conjecture_min_colour_degree(int r, int n);

}  // namespace rt
