#pragma once

#include "kummer/linear_ode.hpp"

#include <vector>

namespace kummer {

/// Truncated power-series basis of solutions of L at an ordinary point.
/// solutions[m] has m-th derivative 1 and all other derivatives of order
/// < order(L) equal to 0 at the point; coefficients are in powers of (x - point).
struct FundamentalSeries {
    Rat point;
    int order = 0;
    std::vector<std::vector<Rat>> solutions;
};

/// Throws std::domain_error when p is a singular point of L.
FundamentalSeries series_solutions(const LinearODE& l, const Rat& p, int n);

/// Coefficients 0..n-order(L) of L(f) for a series f at p truncated at order n.
std::vector<Rat> apply_series(const LinearODE& l, const std::vector<Rat>& f, const Rat& p, int n);

} // namespace kummer
