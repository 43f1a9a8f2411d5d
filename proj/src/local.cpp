#include "kummer/local.hpp"

#include "kummer/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace kummer {

std::vector<std::pair<Rat, unsigned>> rational_factorization(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("factorization of the zero polynomial");
    std::vector<std::pair<Rat, unsigned>> out;
    Poly rest = p;
    for (const Rat& r : rational_roots(p)) {
        const unsigned m = root_multiplicity(rest, r);
        out.emplace_back(r, m);
        rest = exact_quotient(rest, Poly::linear(r).pow(m));
    }
    if (!rest.is_constant()) throw UnsupportedPoles(rest.monic().to_string("x"));
    return out;
}

std::vector<PoleData> rational_poles(const RatFunc& f, int max_exponent) {
    std::vector<PoleData> poles;
    if (f.den().is_constant()) return poles;
    for (const auto& [loc, order] : rational_factorization(f.den())) {
        PoleData pd{loc, order, {}};
        const Laurent l = laurent_at(f, loc, max_exponent);
        for (int e = -static_cast<int>(order); e <= max_exponent; ++e) {
            Rat c = l.at(e);
            if (c != 0) pd.laurent.emplace(e, std::move(c));
        }
        poles.push_back(std::move(pd));
    }
    return poles;
}

RatFunc PartialFractions::reassemble() const {
    RatFunc acc(polynomial_part);
    for (const auto& t : terms) acc += RatFunc(Poly(t.c), Poly::linear(t.p).pow(t.j));
    return acc;
}

PartialFractions partial_fractions(const RatFunc& f) {
    PartialFractions pf;
    pf.polynomial_part = divrem(f.num(), f.den()).first;
    for (const auto& pole : rational_poles(f, -1)) {
        for (const auto& [e, c] : pole.laurent) pf.terms.push_back({c, pole.location, static_cast<unsigned>(-e)});
    }
    std::sort(pf.terms.begin(), pf.terms.end(),
              [](const auto& a, const auto& b) { return a.p != b.p ? a.p < b.p : a.j < b.j; });
    return pf;
}

std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, int n) {
    std::vector<Rat> out(n + 1);
    const int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
    for (int i = 0; i < na && i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < nb && i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Rat> series_div(const std::vector<Rat>& a, const std::vector<Rat>& b, int n) {
    if (b.empty() || b[0] == 0) throw std::domain_error("series division by a series with zero constant term");
    std::vector<Rat> out(n + 1);
    const Rat inv = 1 / b[0];
    for (int k = 0; k <= n; ++k) {
        Rat acc = k < static_cast<int>(a.size()) ? a[k] : Rat(0);
        for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j) acc -= b[j] * out[k - j];
        out[k] = acc * inv;
    }
    return out;
}

std::vector<Rat> series_sqrt(const std::vector<Rat>& a, int n) {
    if (a.empty() || a[0] != 1) throw std::domain_error("series_sqrt needs constant term 1");
    // s^2 = a, s0 = 1: 2 s_k = a_k - sum_{j=1}^{k-1} s_j s_{k-j}
    std::vector<Rat> s(n + 1);
    s[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat acc = k < static_cast<int>(a.size()) ? a[k] : Rat(0);
        for (int j = 1; j < k; ++j) acc -= s[j] * s[k - j];
        s[k] = acc / 2;
    }
    return s;
}

std::vector<Rat> series_derivative(const std::vector<Rat>& a) {
    if (a.size() <= 1) return {};
    std::vector<Rat> out(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) out[k - 1] = a[k] * static_cast<unsigned long>(k);
    return out;
}

std::vector<Rat> series_at(const RatFunc& f, const Rat& p, int n) {
    if (f.is_pole(p)) throw PoleError("series_at: " + to_string(p) + " is a pole");
    if (n < 0) return {};
    return series_div(f.num().shifted(p).coefficients(), f.den().shifted(p).coefficients(), n);
}

Rat Laurent::at(int exponent) const {
    const int i = exponent - start;
    if (i < 0 || i >= static_cast<int>(c.size())) return Rat(0);
    return c[i];
}

int Laurent::valuation() const {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return start + static_cast<int>(i);
    throw std::domain_error("Laurent expansion is zero to the computed order");
}

namespace {

// Expansion of num/den at 0 where den has valuation `shift` at 0.
Laurent expand_at_zero(const Poly& num, const Poly& den, int max_exponent) {
    unsigned v = 0;
    while (den.coeff(static_cast<int>(v)) == 0) ++v;
    std::vector<Rat> d(den.coefficients().begin() + v, den.coefficients().end());
    Laurent l;
    l.start = -static_cast<int>(v);
    const int n = max_exponent - l.start;
    if (n >= 0) l.c = series_div(num.coefficients(), d, n);
    return l;
}

Poly reversed(const Poly& p) {
    std::vector<Rat> c = p.coefficients();
    std::reverse(c.begin(), c.end());
    return Poly(std::move(c));
}

} // namespace

Laurent laurent_at(const RatFunc& f, const Rat& p, int max_exponent) {
    return expand_at_zero(f.num().shifted(p), f.den().shifted(p), max_exponent);
}

Laurent laurent_at_infinity(const RatFunc& f, int max_exponent) {
    // f(1/t) = t^(dd - dn) rev(num)(t) / rev(den)(t)
    if (f.is_zero()) return Laurent{0, std::vector<Rat>(std::max(0, max_exponent + 1))};
    const int shift = f.den().degree() - f.num().degree();
    Laurent inner = expand_at_zero(reversed(f.num()), reversed(f.den()), max_exponent - shift);
    inner.start += shift;
    return inner;
}

int order_at_infinity(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("order at infinity of the zero function");
    return f.den().degree() - f.num().degree();
}

int valuation_at(const RatFunc& f, const Rat& p) {
    if (f.is_zero()) throw std::domain_error("valuation of the zero function");
    return static_cast<int>(root_multiplicity(f.num(), p)) - static_cast<int>(root_multiplicity(f.den(), p));
}

} // namespace kummer
