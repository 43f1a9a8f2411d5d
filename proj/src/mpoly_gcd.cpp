#include "kummer/mpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

// Multivariate gcd over Z by Brown's dense modular algorithm: images modulo
// word-size primes, one variable at a time eliminated by evaluation and
// recovered by Newton interpolation, primes combined by CRT, and every
// candidate certified by trial division.

namespace kummer {
namespace {

using u64 = std::uint64_t;
using Exps = std::vector<unsigned>;
using ModPoly = std::map<Exps, u64>;
using UPoly = std::vector<u64>;

struct Field {
    u64 p;
    u64 add(u64 a, u64 b) const { return a + b >= p ? a + b - p : a + b; }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 mul(u64 a, u64 b) const { return a * b % p; }
    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 ueval(const UPoly& a, u64 x, const Field& F) {
    u64 r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = F.add(F.mul(r, x), *it);
    return r;
}

UPoly umul(const UPoly& a, const UPoly& b, const Field& F) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    trim(r);
    return r;
}

// Quotient and remainder; b nonzero.
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b, const Field& F) {
    const int db = udeg(b);
    const u64 inv = F.inv(b.back());
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    for (int da = udeg(a); da >= db; da = udeg(a)) {
        const u64 c = F.mul(a.back(), inv);
        q[da - db] = c;
        for (int i = 0; i <= db; ++i) a[da - db + i] = F.sub(a[da - db + i], F.mul(c, b[i]));
        trim(a);
    }
    trim(q);
    return {q, a};
}

UPoly umonic(UPoly a, const Field& F) {
    if (a.empty()) return a;
    const u64 inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
    return a;
}

UPoly ugcd(UPoly a, UPoly b, const Field& F) {
    while (!b.empty()) {
        UPoly r = udivmod(a, b, F).second;
        a = std::move(b);
        b = std::move(r);
    }
    return umonic(a, F);
}

const Exps& lead_exps(const ModPoly& a) { return a.rbegin()->first; }

bool is_constant(const ModPoly& a) {
    if (a.size() != 1) return false;
    for (unsigned e : a.begin()->first)
        if (e) return false;
    return true;
}

ModPoly monic(ModPoly a, const Field& F) {
    if (a.empty()) return a;
    const u64 inv = F.inv(a.rbegin()->second);
    for (auto& [e, c] : a) c = F.mul(c, inv);
    return a;
}

ModPoly scaled(ModPoly a, u64 s, const Field& F) {
    for (auto& [e, c] : a) c = F.mul(c, s);
    return a;
}

ModPoly one(std::size_t nvars) { return ModPoly{{Exps(nvars, 0), 1}}; }

ModPoly evaluate(const ModPoly& a, std::size_t k, u64 x, const Field& F) {
    ModPoly out;
    for (const auto& [e, c] : a) {
        Exps key = e;
        key[k] = 0;
        u64& slot = out[key];
        slot = F.add(slot, F.mul(c, F.pow(x, e[k])));
    }
    for (auto it = out.begin(); it != out.end();) it = it->second ? std::next(it) : out.erase(it);
    return out;
}

// Coefficients in Z_p[x_k] of the monomials in the remaining variables.
std::map<Exps, UPoly> split(const ModPoly& a, std::size_t k) {
    std::map<Exps, UPoly> out;
    for (const auto& [e, c] : a) {
        Exps key = e;
        key[k] = 0;
        UPoly& u = out[key];
        if (u.size() <= e[k]) u.resize(e[k] + 1, 0);
        u[e[k]] = c;
    }
    return out;
}

ModPoly join(const std::map<Exps, UPoly>& parts, std::size_t k) {
    ModPoly out;
    for (const auto& [key, u] : parts)
        for (std::size_t i = 0; i < u.size(); ++i)
            if (u[i]) {
                Exps e = key;
                e[k] = static_cast<unsigned>(i);
                out.emplace(std::move(e), u[i]);
            }
    return out;
}

bool divides(const ModPoly& b, ModPoly a, const Field& F) {
    const auto& [lm, lc] = *b.rbegin();
    const u64 inv = F.inv(lc);
    while (!a.empty()) {
        const auto [am, ac] = *a.rbegin();
        Exps shift(am.size());
        for (std::size_t i = 0; i < am.size(); ++i) {
            if (am[i] < lm[i]) return false;
            shift[i] = am[i] - lm[i];
        }
        const u64 c = F.mul(ac, inv);
        for (const auto& [be, bc] : b) {
            Exps e = be;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += shift[i];
            auto it = a.find(e);
            const u64 t = F.mul(c, bc);
            if (it == a.end()) {
                a.emplace(std::move(e), F.sub(0, t));
            } else {
                it->second = F.sub(it->second, t);
                if (!it->second) a.erase(it);
            }
        }
    }
    return true;
}

// Content in Z_p[x_k] of a polynomial split along x_k.
UPoly content(const std::map<Exps, UPoly>& parts, const Field& F) {
    UPoly g;
    for (const auto& [key, u] : parts) {
        g = ugcd(g, u, F);
        if (g.size() == 1) break;
    }
    return g;
}

void divide_parts(std::map<Exps, UPoly>& parts, const UPoly& c, const Field& F) {
    for (auto& [key, u] : parts) u = udivmod(u, c, F).first;
}

// Monic gcd in Z_p[x_0..x_k]; neither input involves variables past x_k.
ModPoly pgcd(const ModPoly& A, const ModPoly& B, std::size_t k, const Field& F) {
    if (A.empty()) return monic(B, F);
    if (B.empty()) return monic(A, F);
    const std::size_t n = A.begin()->first.size();
    if (is_constant(A) || is_constant(B)) return one(n);

    auto sa = split(A, k), sb = split(B, k);
    const UPoly ca = content(sa, F), cb = content(sb, F);
    const UPoly c = ugcd(ca, cb, F);
    divide_parts(sa, ca, F);
    divide_parts(sb, cb, F);
    const auto with_content = [&](std::map<Exps, UPoly> parts) {
        for (auto& [key, u] : parts) u = umul(u, c, F);
        return monic(join(parts, k), F);
    };
    if (k == 0) {
        // univariate in x_0: sa and sb each hold a single entry
        return with_content({{Exps(n, 0), ugcd(sa.begin()->second, sb.begin()->second, F)}});
    }

    const UPoly& lca = sa.rbegin()->second;
    const UPoly& lcb = sb.rbegin()->second;
    const UPoly gamma = ugcd(lca, lcb, F);
    const ModPoly Ap = join(sa, k), Bp = join(sb, k);
    int deg_a = 0, deg_b = 0;
    for (const auto& [key, u] : sa) deg_a = std::max(deg_a, udeg(u));
    for (const auto& [key, u] : sb) deg_b = std::max(deg_b, udeg(u));
    const int bound = udeg(gamma) + std::min(deg_a, deg_b) + 1;

    std::map<Exps, UPoly> interp;
    UPoly modulus{1};
    std::optional<Exps> lm;
    int points = 0;
    for (u64 x = 1; x < F.p; ++x) {
        const u64 gx = ueval(gamma, x, F);
        if (!gx || !ueval(lca, x, F) || !ueval(lcb, x, F)) continue;
        const ModPoly image = pgcd(evaluate(Ap, k, x, F), evaluate(Bp, k, x, F), k - 1, F);
        if (is_constant(image)) return with_content({{Exps(n, 0), UPoly{1}}});
        const Exps& m = lead_exps(image);
        if (lm && *lm < m) continue;
        if (!lm || m < *lm) {
            lm = m;
            interp.clear();
            modulus = UPoly{1};
            points = 0;
        }
        const ModPoly value = scaled(image, gx, F);
        const u64 inv_mod = F.inv(ueval(modulus, x, F));
        bool changed = false;
        for (const auto& [key, v] : value) interp.try_emplace(key);
        for (auto it = interp.begin(); it != interp.end();) {
            auto found = value.find(it->first);
            const u64 target = found == value.end() ? 0 : found->second;
            const u64 diff = F.sub(target, ueval(it->second, x, F));
            if (diff) {
                changed = true;
                UPoly step = modulus;
                for (auto& s : step) s = F.mul(s, F.mul(diff, inv_mod));
                UPoly& u = it->second;
                if (u.size() < step.size()) u.resize(step.size(), 0);
                for (std::size_t i = 0; i < step.size(); ++i) u[i] = F.add(u[i], step[i]);
                trim(u);
            }
            it = it->second.empty() ? interp.erase(it) : std::next(it);
        }
        modulus = umul(modulus, UPoly{F.sub(0, x), 1}, F);
        ++points;
        if (changed && points < bound) continue;
        auto parts = interp;
        divide_parts(parts, content(parts, F), F);
        const ModPoly candidate = join(parts, k);
        if (divides(candidate, Ap, F) && divides(candidate, Bp, F)) return with_content(parts);
    }
    throw std::logic_error("modular gcd: evaluation points exhausted");
}

struct IntPoly {
    std::vector<JetSymbol> vars;
    std::map<Exps, Int> terms;
};

IntPoly to_int_poly(const MPoly& p, const std::vector<JetSymbol>& vars) {
    IntPoly out{vars, {}};
    for (const auto& [m, c] : p.terms()) {
        Exps e(vars.size(), 0);
        for (const auto& [s, k] : m) e[std::lower_bound(vars.begin(), vars.end(), s) - vars.begin()] = k;
        out.terms.emplace(std::move(e), c.get_num());
    }
    return out;
}

ModPoly reduce(const IntPoly& p, const Field& F) {
    ModPoly out;
    const Int modulus(static_cast<unsigned long>(F.p));
    for (const auto& [e, c] : p.terms) {
        Int r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
        if (r != 0) out.emplace(e, r.get_ui());
    }
    return out;
}

Int symmetric(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

Int integer_content(const MPoly& p) {
    Int g = 0;
    for (const auto& [m, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num().get_mpz_t());
    return g;
}

// Clears denominators and integer content.
MPoly integer_primitive(const MPoly& p) {
    Int den = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    const MPoly q = p * Rat(den);
    return q * Rat(Rat(1) / Rat(integer_content(q)));
}

MPoly modular_gcd(const MPoly& a, const MPoly& b) {
    const MPoly f = integer_primitive(a), g = integer_primitive(b);
    std::vector<JetSymbol> vars;
    {
        auto syms = f.symbols();
        for (const auto& s : g.symbols()) syms.insert(s);
        vars.assign(syms.begin(), syms.end());
    }
    const IntPoly fi = to_int_poly(f, vars), gi = to_int_poly(g, vars);
    const Int lcf = fi.terms.rbegin()->second, lcg = gi.terms.rbegin()->second;
    Int gamma;
    mpz_gcd(gamma.get_mpz_t(), lcf.get_mpz_t(), lcg.get_mpz_t());

    const std::size_t n = vars.size();
    std::map<Exps, Int> acc;
    Int modulus = 1;
    std::optional<Exps> lm;
    Int prime = Int(1) << 31;
    for (;;) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        const Field F{prime.get_ui()};
        if (lcf % prime == 0 || lcg % prime == 0) continue;
        const ModPoly image = pgcd(reduce(fi, F), reduce(gi, F), n - 1, F);
        if (is_constant(image)) return MPoly(Rat(1));
        const Exps& m = lead_exps(image);
        if (lm && *lm < m) continue;
        if (!lm || m < *lm) {
            lm = m;
            acc.clear();
            modulus = 1;
        }
        Int gp;
        mpz_fdiv_r(gp.get_mpz_t(), gamma.get_mpz_t(), prime.get_mpz_t());
        const ModPoly value = scaled(image, gp.get_ui(), F);
        Int inv_mod;
        mpz_invert(inv_mod.get_mpz_t(), modulus.get_mpz_t(), prime.get_mpz_t());
        const Int next_modulus = modulus * prime;
        for (const auto& [key, v] : value) acc.try_emplace(key, 0);
        for (auto it = acc.begin(); it != acc.end();) {
            auto found = value.find(it->first);
            const Int target = found == value.end() ? Int(0) : Int(static_cast<unsigned long>(found->second));
            const Int lifted = symmetric(it->second + modulus * ((target - it->second) * inv_mod), next_modulus);
            it->second = lifted;
            it = it->second == 0 ? acc.erase(it) : std::next(it);
        }
        modulus = next_modulus;
        MPoly candidate;
        for (const auto& [e, c] : acc) {
            Monomial mono;
            for (std::size_t i = 0; i < n; ++i)
                if (e[i]) mono.emplace_back(vars[i], e[i]);
            candidate += MPoly::term(mono, Rat(c));
        }
        candidate = integer_primitive(candidate);
        if (exact_div(f, candidate) && exact_div(g, candidate)) return candidate;
    }
}

MPoly monomial_gcd(const Monomial& m, const MPoly& p) {
    const Monomial content = p.monomial_content();
    Monomial g;
    for (const auto& [s, e] : m) {
        const unsigned k = monomial_degree_in(content, s);
        if (k) g.emplace_back(s, std::min(e, k));
    }
    return MPoly::term(g, Rat(1));
}

MPoly must_divide(const MPoly& a, const MPoly& b) {
    auto q = exact_div(a, b);
    if (!q) throw std::logic_error("gcd: expected exact division failed");
    return *q;
}

} // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return b.normalized();
    if (b.is_zero()) return a.normalized();
    if (a.is_constant() || b.is_constant()) return MPoly(Rat(1));
    if (a.is_monomial()) return monomial_gcd(a.leading().first, b);
    if (b.is_monomial()) return monomial_gcd(b.leading().first, a);
    const Monomial ma = a.monomial_content(), mb = b.monomial_content();
    Monomial mg;
    for (const auto& [s, e] : ma) {
        const unsigned k = monomial_degree_in(mb, s);
        if (k) mg.emplace_back(s, std::min(e, k));
    }
    const MPoly ra = must_divide(a, MPoly::term(ma, Rat(1)));
    const MPoly rb = must_divide(b, MPoly::term(mb, Rat(1)));
    return (MPoly::term(mg, Rat(1)) * modular_gcd(ra, rb)).normalized();
}

} // namespace kummer
