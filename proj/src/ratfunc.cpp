#include "kummer/ratfunc.hpp"

#include "kummer/errors.hpp"

#include <stdexcept>

namespace kummer {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(Rat(1));
        return;
    }
    if (!den.is_constant()) {
        const Poly g = gcd(num, den);
        if (!g.is_constant()) {
            num = exact_quotient(num, g);
            den = exact_quotient(den, g);
        }
    }
    const Rat inv = 1 / den.lc();
    num_ = num * inv;
    den_ = den * inv;
}

Rat RatFunc::constant_value() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    return num_.coeff(0);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, Poly(Rat(1)), RatFunc::Canonical{});
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::derivative() const {
    if (is_polynomial()) return RatFunc(num_.derivative(), den_, Canonical{});
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return RatFunc(Rat(1)) / pow(-e);
    // powers of coprime polynomials stay coprime, den stays monic
    return RatFunc(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

Rat RatFunc::eval(const Rat& at) const {
    const Rat d = den_.eval(at);
    if (d == 0) throw PoleError("evaluation at pole " + kummer::to_string(at));
    return num_.eval(at) / d;
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    // single-term numerators bind left-associatively without parentheses
    std::size_t num_terms = 0;
    for (const auto& c : num_.coefficients())
        if (c != 0) ++num_terms;
    std::size_t den_terms = 0;
    for (const auto& c : den_.coefficients())
        if (c != 0) ++den_terms;
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    if (num_terms > 1) n = "(" + n + ")";
    if (den_terms > 1) d = "(" + d + ")";
    return n + "/" + d;
}

} // namespace kummer
