#pragma once

#include "kummer/mpoly.hpp"
#include "kummer/ratfunc.hpp"

#include <map>
#include <set>
#include <string>

namespace kummer {

/// Exact rational expression in jet symbols: num/den with gcd(num, den) = 1
/// and the lex-leading coefficient of den equal to 1, so equal expressions
/// are structurally equal.
class JetExpr {
public:
    JetExpr() : den_(Rat(1)) {}
    JetExpr(const Rat& c) : num_(c), den_(Rat(1)) {}
    JetExpr(long c) : JetExpr(Rat(c)) {}
    JetExpr(MPoly p) : num_(std::move(p)), den_(Rat(1)) {}
    /// Throws std::domain_error when den is zero.
    JetExpr(MPoly num, MPoly den);

    static JetExpr symbol(const JetSymbol& s) { return JetExpr(MPoly::symbol(s)); }
    /// lambda^(j)
    static JetExpr frame(unsigned j) { return symbol(JetSymbol::frame(j)); }
    static JetExpr letter(const std::string& f, unsigned i = 0) { return symbol(JetSymbol::letter(f, i)); }
    static JetExpr constant(const std::string& c) { return symbol(JetSymbol::constant(c)); }
    /// f(var), var defaulting to the base coordinate lambda.
    static JetExpr from_ratfunc(const RatFunc& f, const JetSymbol& var = JetSymbol::frame(0));

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;
    std::set<JetSymbol> symbols() const;

    JetExpr operator-() const;
    friend JetExpr operator+(const JetExpr& a, const JetExpr& b);
    friend JetExpr operator-(const JetExpr& a, const JetExpr& b);
    friend JetExpr operator*(const JetExpr& a, const JetExpr& b);
    friend JetExpr operator/(const JetExpr& a, const JetExpr& b);
    JetExpr& operator+=(const JetExpr& o) { return *this = *this + o; }
    JetExpr& operator-=(const JetExpr& o) { return *this = *this - o; }
    JetExpr& operator*=(const JetExpr& o) { return *this = *this * o; }
    friend bool operator==(const JetExpr& a, const JetExpr& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    JetExpr pow(int e) const;

    /// Plain partial derivative in one symbol.
    JetExpr partial(const JetSymbol& s) const;
    /// d/dlambda with letters treated as functions of lambda.
    JetExpr d_lambda() const;
    /// Partial derivative along the frame coordinate lambda^(j); for j = 0
    /// this is d_lambda().
    JetExpr d_frame(unsigned j) const;
    /// Implicit derivative in epsilon: lambda^(j) -> lambda^(j+1),
    /// f^(i) -> f^(i+1) lambda_e, constants -> 0.
    JetExpr total_derivative() const;

    /// Replaces symbols by expressions.
    JetExpr substitute(const std::map<JetSymbol, JetExpr>& values) const;
    /// Replaces every derivative of letter `f` by the corresponding
    /// derivative of the rational function `value` in lambda.
    JetExpr substitute_letter(const std::string& f, const RatFunc& value) const;
    /// Numeric value; every symbol must be bound. Throws PoleError when
    /// the denominator vanishes.
    Rat evaluate(const std::map<JetSymbol, Rat>& values) const;

    std::string to_string() const;

private:
    /// num/den already coprime; only normalizes the denominator.
    static JetExpr coprime(MPoly num, MPoly den);
    static JetExpr add(const JetExpr& a, const JetExpr& b, bool subtract);
    JetExpr apply_derivation(const std::function<MPoly(const JetSymbol&)>& d) const;

    MPoly num_;
    MPoly den_;
};

} // namespace kummer
