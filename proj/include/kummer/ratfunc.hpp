#pragma once

#include "kummer/poly.hpp"

#include <string>

namespace kummer {

/// Rational function num/den over Q in canonical form: den != 0,
/// gcd(num, den) = 1, den monic. Equality is structural.
class RatFunc {
public:
    RatFunc() : den_(Rat(1)) {}
    RatFunc(const Rat& c) : num_(c), den_(Rat(1)) {}
    RatFunc(long c) : RatFunc(Rat(c)) {}
    RatFunc(Poly p) : num_(std::move(p)), den_(Rat(1)) {}
    /// Throws std::domain_error when den is the zero polynomial.
    RatFunc(Poly num, Poly den);

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    /// Value of a constant function; throws std::domain_error otherwise.
    Rat constant_value() const;

    RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    /// Throws std::domain_error on division by zero.
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc derivative() const;
    RatFunc pow(int e) const;
    /// Throws PoleError when `at` is a pole.
    Rat eval(const Rat& at) const;
    bool is_pole(const Rat& at) const { return den_.eval(at) == 0; }

    /// Grammar rendering, e.g. `-4/x^2`, `(x+1)/(x^2-2)`.
    std::string to_string(const std::string& var = "x") const;

private:
    struct Canonical {};
    RatFunc(Poly num, Poly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

} // namespace kummer
