#include "kummer/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kummer {

Poly::Poly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coefficients) : c_(std::move(coefficients)) { trim(); }

Poly Poly::x() { return monomial(Rat(1), 1); }

Poly Poly::monomial(const Rat& c, unsigned degree) {
    if (c == 0) return {};
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Rat& root) { return Poly(std::vector<Rat>{-root, Rat(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::lc() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rat Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> v(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(v));
}

Rat Poly::eval(const Rat& at) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::shifted(const Rat& shift) const {
    // Horner in the ring: p(x + s) = (...(c_n (x+s) + c_{n-1})(x+s) + ...)
    Poly acc;
    const Poly step(std::vector<Rat>{shift, Rat(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * step + Poly(*it);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    return *this * Rat(1 / lc());
}

Poly Poly::pow(unsigned e) const {
    Poly result(Rat(1)), base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = c_[k];
        if (c == 0) continue;
        const bool negative = sgn(c) < 0;
        const Rat mag = abs(c);
        if (negative)
            out << '-';
        else if (!first)
            out << '+';
        first = false;
        if (k == 0) {
            out << kummer::to_string(mag);
            continue;
        }
        if (mag != 1) out << kummer::to_string(mag) << '*';
        out << var;
        if (k > 1) out << '^' << k;
    }
    return out.str();
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    std::vector<Rat> quo(a.degree() - db + 1);
    const Rat inv = 1 / b.lc();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0) continue;
        const Rat f = rem[k] * inv;
        quo[k - db] = f;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * bc[j];
    }
    rem.resize(db);
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

namespace {

// Integer multiple with coprime integer coefficients.
Poly primitive_part(const Poly& p) {
    Int den = 1, content = 0;
    for (const auto& c : p.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    for (const auto& c : p.coefficients()) {
        const Int n = c.get_num() * (den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    }
    return p * (Rat(den) / Rat(content));
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    Poly x = primitive_part(a), y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Poly r = divrem(x, y).second;
        x = std::move(y);
        y = r.is_zero() ? r : primitive_part(r);
    }
    return x.monic();
}

namespace {

// Integer polynomial with the same roots: clear denominators, drop content.
std::vector<Int> primitive_integer_coefficients(const Poly& p) {
    Int l = 1;
    for (const auto& c : p.coefficients()) l = lcm(l, c.get_den());
    std::vector<Int> v;
    v.reserve(p.coefficients().size());
    Int g = 0;
    for (const auto& c : p.coefficients()) {
        Int z = c.get_num() * (l / c.get_den());
        g = gcd(g, z);
        v.push_back(z);
    }
    for (auto& z : v) z /= g;
    return v;
}

Int eval_int(const std::vector<Int>& v, const Int& x) {
    Int acc = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) acc = acc * x + *it;
    return acc;
}

} // namespace

std::vector<Rat> rational_roots(const Poly& p) {
    if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
    std::set<Rat> roots;
    Poly rest = p;
    while (!rest.is_constant() && rest.coeff(0) == 0) {
        roots.insert(Rat(0));
        rest = exact_quotient(rest, Poly::x());
    }
    // Work on the squarefree part so that deflation terminates quickly.
    if (!rest.is_constant()) rest = exact_quotient(rest, gcd(rest, rest.derivative()));
    while (!rest.is_constant()) {
        const auto v = primitive_integer_coefficients(rest);
        const Int at_one = eval_int(v, Int(1));
        const Int at_minus_one = eval_int(v, Int(-1));
        bool found = false;
        // p/q with p | a0, q | lc; (q - p) | P(1) and (q + p) | P(-1).
        for (const Int& q : divisors(v.back())) {
            for (const Int& d : divisors(v.front())) {
                for (const Int& num : {d, Int(-d)}) {
                    if (gcd(num, q) != 1) continue;
                    const Int qm = q - num, qp = q + num;
                    if (qm != 0 && !mpz_divisible_p(at_one.get_mpz_t(), qm.get_mpz_t())) continue;
                    if (qp != 0 && !mpz_divisible_p(at_minus_one.get_mpz_t(), qp.get_mpz_t())) continue;
                    Rat r(num, q);
                    r.canonicalize();
                    if (rest.eval(r) == 0) {
                        roots.insert(r);
                        rest = exact_quotient(rest, Poly::linear(r));
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    return {roots.begin(), roots.end()};
}

unsigned root_multiplicity(const Poly& p, const Rat& root) {
    if (p.is_zero()) throw std::domain_error("root_multiplicity of the zero polynomial");
    unsigned m = 0;
    Poly q = p.shifted(root);
    for (const auto& c : q.coefficients()) {
        if (c != 0) break;
        ++m;
    }
    return m;
}

} // namespace kummer
