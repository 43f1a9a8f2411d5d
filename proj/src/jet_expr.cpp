#include "kummer/jet_expr.hpp"

#include "kummer/errors.hpp"

#include <stdexcept>

namespace kummer {

JetExpr::JetExpr(MPoly num, MPoly den) {
    if (den.is_zero()) throw std::domain_error("jet expression with zero denominator");
    if (num.is_zero()) {
        den_ = MPoly(Rat(1));
        return;
    }
    if (!den.is_constant()) {
        const MPoly g = gcd(num, den);
        if (!g.is_constant()) {
            num = *exact_div(num, g);
            den = *exact_div(den, g);
        }
    }
    const Rat inv = 1 / den.leading().second;
    num_ = num * inv;
    den_ = den * inv;
}

JetExpr JetExpr::from_ratfunc(const RatFunc& f, const JetSymbol& var) {
    auto lift = [&](const Poly& p) {
        MPoly out;
        for (int k = 0; k <= p.degree(); ++k) out += MPoly::symbol(var, static_cast<unsigned>(k)) * p.coeff(k);
        return out;
    };
    return JetExpr(lift(f.num()), lift(f.den()));
}

Rat JetExpr::constant_value() const {
    if (!is_constant()) throw std::domain_error("jet expression is not constant: " + to_string());
    return num_.constant_term() / den_.constant_term();
}

std::set<JetSymbol> JetExpr::symbols() const {
    auto s = num_.symbols();
    for (const auto& t : den_.symbols()) s.insert(t);
    return s;
}

JetExpr JetExpr::operator-() const {
    JetExpr r = *this;
    r.num_ = -r.num_;
    return r;
}

JetExpr JetExpr::coprime(MPoly num, MPoly den) {
    JetExpr r;
    if (num.is_zero()) return r;
    const Rat inv = 1 / den.leading().second;
    r.num_ = num * inv;
    r.den_ = den * inv;
    return r;
}

JetExpr JetExpr::add(const JetExpr& a, const JetExpr& b, bool subtract) {
    const MPoly nb = subtract ? -b.num_ : b.num_;
    if (a.den_ == b.den_) return JetExpr(a.num_ + nb, a.den_);
    const MPoly g = gcd(a.den_, b.den_);
    if (g.is_constant()) return coprime(a.num_ * b.den_ + nb * a.den_, a.den_ * b.den_);
    const MPoly da = *exact_div(a.den_, g), db = *exact_div(b.den_, g);
    const MPoly t = a.num_ * db + nb * da;
    if (t.is_zero()) return {};
    const MPoly h = gcd(t, g);
    return coprime(*exact_div(t, h), da * *exact_div(b.den_, h));
}

JetExpr operator+(const JetExpr& a, const JetExpr& b) { return JetExpr::add(a, b, false); }

JetExpr operator-(const JetExpr& a, const JetExpr& b) { return JetExpr::add(a, b, true); }

JetExpr operator*(const JetExpr& a, const JetExpr& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const MPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    return JetExpr::coprime(*exact_div(a.num_, g1) * *exact_div(b.num_, g2),
                            *exact_div(a.den_, g2) * *exact_div(b.den_, g1));
}

JetExpr operator/(const JetExpr& a, const JetExpr& b) {
    if (b.is_zero()) throw std::domain_error("jet expression division by zero");
    return a * JetExpr::coprime(b.den_, b.num_);
}

JetExpr JetExpr::pow(int e) const {
    if (e < 0) return JetExpr(Rat(1)) / pow(-e);
    return JetExpr(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

JetExpr JetExpr::apply_derivation(const std::function<MPoly(const JetSymbol&)>& d) const {
    const MPoly dn = num_.apply_derivation(d);
    if (den_.is_constant()) return JetExpr(dn, den_);
    const MPoly dd = den_.apply_derivation(d);
    const MPoly g = gcd(den_, dd);
    const MPoly reduced = *exact_div(den_, g);
    return JetExpr(dn * reduced - num_ * *exact_div(dd, g), den_ * reduced);
}

JetExpr JetExpr::partial(const JetSymbol& s) const {
    return apply_derivation([&](const JetSymbol& t) { return t == s ? MPoly(Rat(1)) : MPoly(); });
}

JetExpr JetExpr::d_lambda() const {
    return apply_derivation([](const JetSymbol& t) {
        if (t.is_frame()) return t.order == 0 ? MPoly(Rat(1)) : MPoly();
        if (t.is_letter()) return MPoly::symbol(JetSymbol::letter(t.name, t.order + 1));
        return MPoly();
    });
}

JetExpr JetExpr::d_frame(unsigned j) const { return j == 0 ? d_lambda() : partial(JetSymbol::frame(j)); }

JetExpr JetExpr::total_derivative() const {
    return apply_derivation([](const JetSymbol& t) {
        if (t.is_frame()) return MPoly::symbol(JetSymbol::frame(t.order + 1));
        if (t.is_letter())
            return MPoly::symbol(JetSymbol::letter(t.name, t.order + 1)) * MPoly::symbol(JetSymbol::frame(1));
        return MPoly();
    });
}

namespace {

JetExpr substitute_poly(const MPoly& p, const std::map<JetSymbol, JetExpr>& values) {
    JetExpr out;
    for (const auto& [m, c] : p.terms()) {
        JetExpr t(c);
        Monomial kept;
        for (const auto& [s, e] : m) {
            auto it = values.find(s);
            if (it == values.end())
                kept.emplace_back(s, e);
            else
                t = t * it->second.pow(static_cast<int>(e));
        }
        out += t * JetExpr(MPoly::term(kept, Rat(1)));
    }
    return out;
}

} // namespace

JetExpr JetExpr::substitute(const std::map<JetSymbol, JetExpr>& values) const {
    return substitute_poly(num_, values) / substitute_poly(den_, values);
}

JetExpr JetExpr::substitute_letter(const std::string& f, const RatFunc& value) const {
    std::map<JetSymbol, JetExpr> values;
    for (const auto& s : symbols()) {
        if (!s.is_letter() || s.name != f) continue;
        RatFunc d = value;
        for (unsigned i = 0; i < s.order; ++i) d = d.derivative();
        values.emplace(s, from_ratfunc(d));
    }
    return substitute(values);
}

Rat JetExpr::evaluate(const std::map<JetSymbol, Rat>& values) const {
    auto eval = [&](const MPoly& p) {
        Rat acc = 0;
        for (const auto& [m, c] : p.terms()) {
            Rat t = c;
            for (const auto& [s, e] : m) {
                auto it = values.find(s);
                if (it == values.end()) throw std::invalid_argument("unbound symbol " + s.to_string());
                Rat pw;
                mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
                mpz_pow_ui(pw.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
                t *= pw;
            }
            acc += t;
        }
        return acc;
    };
    const Rat d = eval(den_);
    if (d == 0) throw PoleError("jet expression denominator vanishes at the given point");
    return eval(num_) / d;
}

std::string JetExpr::to_string() const {
    if (den_.is_constant()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace kummer
