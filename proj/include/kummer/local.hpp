#pragma once

// Local analytic data of rational functions: poles, Laurent and Taylor
// expansions, partial fractions, behaviour at infinity.

#include "kummer/ratfunc.hpp"

#include <map>
#include <utility>
#include <vector>

namespace kummer {

struct PoleData {
    Rat location;
    unsigned order = 0;
    /// Nonzero Laurent coefficients, exponents from -order up to the
    /// requested maximum exponent.
    std::map<int, Rat> laurent;
};

/// Rational roots of `p` with multiplicities, ascending. Throws
/// UnsupportedPoles when a factor without rational roots remains.
std::vector<std::pair<Rat, unsigned>> rational_factorization(const Poly& p);

/// Poles of f with Laurent coefficients for exponents -order..max_exponent.
std::vector<PoleData> rational_poles(const RatFunc& f, int max_exponent = -1);

struct PartialFractions {
    struct Term {
        Rat c;
        Rat p;
        unsigned j;
        friend bool operator==(const Term&, const Term&) = default;
    };
    Poly polynomial_part;
    /// c/(x-p)^j, sorted by (p, j)
    std::vector<Term> terms;

    RatFunc reassemble() const;
};

PartialFractions partial_fractions(const RatFunc& f);

/// Taylor coefficients of f at p through order n. Throws PoleError at a pole.
std::vector<Rat> series_at(const RatFunc& f, const Rat& p, int n);

/// Laurent expansion: c[i] is the coefficient of (x-p)^(start+i).
struct Laurent {
    int start = 0;
    std::vector<Rat> c;

    Rat at(int exponent) const;
    /// Lowest exponent with a nonzero coefficient; throws if all zero.
    int valuation() const;
};

/// Expansion of f at p with coefficients up to exponent `max_exponent`.
Laurent laurent_at(const RatFunc& f, const Rat& p, int max_exponent);

/// Expansion of f in t = 1/x at infinity, coefficients up to t^max_exponent.
Laurent laurent_at_infinity(const RatFunc& f, int max_exponent);

/// deg(den) - deg(num); throws std::domain_error for f = 0.
int order_at_infinity(const RatFunc& f);

/// Order of f at p: positive for zeros, negative for poles. f != 0.
int valuation_at(const RatFunc& f, const Rat& p);

// Truncated power series arithmetic; all results have n+1 coefficients.
std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, int n);
/// Requires b[0] != 0.
std::vector<Rat> series_div(const std::vector<Rat>& a, const std::vector<Rat>& b, int n);
/// Requires a[0] == 1.
std::vector<Rat> series_sqrt(const std::vector<Rat>& a, int n);
std::vector<Rat> series_derivative(const std::vector<Rat>& a);

} // namespace kummer
