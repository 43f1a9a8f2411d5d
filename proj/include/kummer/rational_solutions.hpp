#pragma once

#include "kummer/linear_ode.hpp"

#include <optional>
#include <vector>

namespace kummer {

/// Basis of the rational solutions of L over Q. Singular points must be
/// rational (UnsupportedPoles otherwise). Each element satisfies L(f) = 0.
std::vector<RatFunc> rational_solutions(const LinearODE& l);

/// Basis of polynomial solutions of degree <= max_degree of the operator
/// sum_i coefficients[i] * D^i (coefficients need not be monic).
std::vector<Poly> polynomial_kernel(const std::vector<RatFunc>& coefficients, int max_degree);

/// Coordinates of f in the span of basis, or nullopt when f is not in it.
std::optional<std::vector<Rat>> span_coordinates(const RatFunc& f, const std::vector<RatFunc>& basis);

/// Image of f under sum_i coefficients[i] * D^i.
RatFunc apply_operator(const std::vector<RatFunc>& coefficients, const RatFunc& f);

} // namespace kummer
