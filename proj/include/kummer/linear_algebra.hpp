#pragma once

#include "kummer/rat.hpp"

#include <optional>
#include <vector>

namespace kummer {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Basis of {v : A v = 0} for an m x ncols matrix A, in reduced form
/// (each basis vector has a 1 at its own free column).
std::vector<std::vector<Rat>> nullspace(RatMatrix rows, std::size_t ncols);

/// Some solution of A v = b, or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_linear(RatMatrix rows, std::vector<Rat> rhs, std::size_t ncols);

std::size_t rank(RatMatrix rows, std::size_t ncols);

} // namespace kummer
