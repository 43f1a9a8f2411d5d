#pragma once

#include "kummer/rat.hpp"

#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

/// Dense univariate polynomial over Q, coefficients indexed by degree.
/// The coefficient vector is always trimmed: the leading coefficient is
/// nonzero, and the zero polynomial has no coefficients.
class Poly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    Poly() = default;
    Poly(const Rat& constant);
    Poly(long constant) : Poly(Rat(constant)) {}
    explicit Poly(std::vector<Rat> coefficients);

    static Poly x();
    static Poly monomial(const Rat& c, unsigned degree);
    /// (x - root)
    static Poly linear(const Rat& root);

    int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Rat& lc() const;
    Rat coeff(int k) const;
    const std::vector<Rat>& coefficients() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& s);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly derivative() const;
    Rat eval(const Rat& at) const;
    /// p(x + shift)
    Poly shifted(const Rat& shift) const;
    Poly monic() const;
    Poly pow(unsigned e) const;

    /// Grammar rendering, e.g. `x^2-3/2*x+1`.
    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// (quotient, remainder), deg(remainder) < deg(divisor). Throws
/// std::domain_error on a zero divisor.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
/// Quotient of a division known to be exact; throws std::domain_error otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Distinct rational roots, ascending.
std::vector<Rat> rational_roots(const Poly& p);
/// Largest m with (x - root)^m | p; p nonzero.
unsigned root_multiplicity(const Poly& p, const Rat& root);

} // namespace kummer
