#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace kummer {

/// Exact rational number. GMP keeps it gcd-reduced with a positive
/// denominator after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Renders `p` or `p/q`.
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

/// Parses `p` or `p/q` (optional leading '-').
Rat parse_rat(const std::string& text);

/// Prime factorization of |n| (n != 0): trial division then Pollard-Brent.
std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n);

/// All positive divisors of |n|, ascending. n != 0.
std::vector<Int> divisors(const Int& n);

/// Writes sqrt(q) = scale * sqrt(radicand) with radicand a squarefree
/// integer (radicand == 1 iff q is a rational square, 0 iff q == 0).
/// Negative q gives a negative radicand.
struct SquareRoot {
    Rat scale;
    Int radicand;
};
SquareRoot exact_sqrt(const Rat& q);

} // namespace kummer
