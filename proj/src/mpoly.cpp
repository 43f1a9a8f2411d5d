#include "kummer/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kummer {

bool LexLess::operator()(const Monomial& a, const Monomial& b) const {
    std::size_t i = 0;
    for (; i < a.size() && i < b.size(); ++i) {
        if (a[i].first != b[i].first) return b[i].first < a[i].first;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return a.size() < b.size();
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::optional<Monomial> monomial_div(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0;
    for (const auto& [s, e] : b) {
        while (i < a.size() && a[i].first < s) out.push_back(a[i++]);
        if (i == a.size() || a[i].first != s || a[i].second < e) return std::nullopt;
        if (a[i].second > e) out.emplace_back(s, a[i].second - e);
        ++i;
    }
    while (i < a.size()) out.push_back(a[i++]);
    return out;
}

unsigned monomial_degree_in(const Monomial& m, const JetSymbol& s) {
    for (const auto& [t, e] : m)
        if (t == s) return e;
    return 0;
}

MPoly::MPoly(const Rat& c) {
    if (c != 0) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::symbol(const JetSymbol& s, unsigned power) {
    if (power == 0) return MPoly(Rat(1));
    return term(Monomial{{s, power}}, Rat(1));
}

MPoly MPoly::term(const Monomial& m, const Rat& c) {
    MPoly p;
    if (c != 0) p.terms_.emplace(m, c);
    return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rat MPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rat(0) : it->second;
}

const std::pair<const Monomial, Rat>& MPoly::leading() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return *terms_.rbegin();
}

std::set<JetSymbol> MPoly::symbols() const {
    std::set<JetSymbol> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m) out.insert(s);
    return out;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(m, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            auto [it, inserted] = out.terms_.emplace(monomial_mul(ma, mb), ca * cb);
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

MPoly MPoly::pow(unsigned e) const {
    MPoly result(Rat(1)), base = *this;
    while (e) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return result;
}

unsigned MPoly::degree_in(const JetSymbol& s) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree_in(m, s));
    return d;
}

std::map<unsigned, MPoly> MPoly::coefficients_in(const JetSymbol& s) const {
    std::map<unsigned, MPoly> out;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        unsigned e = 0;
        for (const auto& [t, k] : m) {
            if (t == s)
                e = k;
            else
                rest.emplace_back(t, k);
        }
        out[e].terms_.emplace(std::move(rest), c);
    }
    return out;
}

MPoly MPoly::from_coefficients_in(const JetSymbol& s, const std::map<unsigned, MPoly>& coeffs) {
    MPoly out;
    for (const auto& [e, p] : coeffs) out += p * symbol(s, e);
    return out;
}

MPoly MPoly::partial(const JetSymbol& s) const {
    MPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial rest;
        unsigned e = 0;
        for (const auto& [t, k] : m) {
            if (t == s) {
                e = k;
                if (k > 1) rest.emplace_back(t, k - 1);
            } else {
                rest.emplace_back(t, k);
            }
        }
        if (e) out += term(rest, c * e);
    }
    return out;
}

MPoly MPoly::apply_derivation(const std::function<MPoly(const JetSymbol&)>& on_symbol) const {
    std::map<JetSymbol, MPoly> images;
    for (const auto& s : symbols()) images.emplace(s, on_symbol(s));
    MPoly out;
    for (const auto& [m, c] : terms_) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            const MPoly& image = images.at(m[i].first);
            if (image.is_zero()) continue;
            Monomial rest = m;
            if (--rest[i].second == 0) rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            out += term(rest, c * m[i].second) * image;
        }
    }
    return out;
}

Monomial MPoly::monomial_content() const {
    if (terms_.empty()) return {};
    Monomial content = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
        Monomial next;
        for (const auto& [s, e] : content) {
            const unsigned k = monomial_degree_in(m, s);
            if (k) next.emplace_back(s, std::min(e, k));
        }
        content = std::move(next);
        if (content.empty()) break;
    }
    return content;
}

MPoly MPoly::normalized() const {
    if (terms_.empty()) return {};
    return *this * Rat(1 / leading().second);
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = sgn(c) < 0;
        if (negative)
            out << '-';
        else if (!first)
            out << '+';
        first = false;
        const Rat mag = abs(c);
        bool need_star = false;
        if (mag != 1 || m.empty()) {
            out << kummer::to_string(mag);
            need_star = true;
        }
        for (const auto& [s, e] : m) {
            if (need_star) out << '*';
            out << s.to_string();
            if (e > 1) out << '^' << e;
            need_star = true;
        }
    }
    return out.str();
}

std::optional<MPoly> exact_div(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("multivariate division by zero");
    if (b.is_constant()) return a * Rat(1 / b.constant_term());
    MPoly rem = a, quo;
    const auto& [lm, lc] = b.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        auto q = monomial_div(rm, lm);
        if (!q) return std::nullopt;
        MPoly t = MPoly::term(*q, rc / lc);
        quo += t;
        rem -= t * b;
    }
    return quo;
}

} // namespace kummer
