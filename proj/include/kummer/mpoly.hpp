#pragma once

#include "kummer/jet_symbol.hpp"
#include "kummer/rat.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace kummer {

/// Power product of jet symbols, sorted by symbol, exponents positive.
using Monomial = std::vector<std::pair<JetSymbol, unsigned>>;

/// Lexicographic monomial order; the first symbol is the most significant.
struct LexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

Monomial monomial_mul(const Monomial& a, const Monomial& b);
/// a / b when b divides a.
std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b);
unsigned monomial_degree_in(const Monomial& m, const JetSymbol& s);

/// Sparse multivariate polynomial over Q in jet symbols. Terms are kept in
/// lex order with nonzero coefficients, so equality is structural.
class MPoly {
public:
    using Terms = std::map<Monomial, Rat, LexLess>;

    MPoly() = default;
    MPoly(const Rat& c);
    MPoly(long c) : MPoly(Rat(c)) {}
    static MPoly symbol(const JetSymbol& s, unsigned power = 1);
    static MPoly term(const Monomial& m, const Rat& c);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rat constant_term() const;
    /// Lex-leading term; throws on zero.
    const std::pair<const Monomial, Rat>& leading() const;
    std::set<JetSymbol> symbols() const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rat& s);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
    MPoly pow(unsigned e) const;

    unsigned degree_in(const JetSymbol& s) const;
    /// Coefficients as a univariate polynomial in s.
    std::map<unsigned, MPoly> coefficients_in(const JetSymbol& s) const;
    static MPoly from_coefficients_in(const JetSymbol& s, const std::map<unsigned, MPoly>& coeffs);

    MPoly partial(const JetSymbol& s) const;
    /// The derivation sending each symbol s to on_symbol(s).
    MPoly apply_derivation(const std::function<MPoly(const JetSymbol&)>& on_symbol) const;
    /// Largest monomial dividing every term.
    Monomial monomial_content() const;

    /// Scaled so the lex-leading coefficient is 1 (zero stays zero).
    MPoly normalized() const;

    std::string to_string() const;

private:
    Terms terms_;
};

/// Quotient of an exact division, nullopt when b does not divide a.
std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b);
/// Normalized gcd over Q; gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

} // namespace kummer
