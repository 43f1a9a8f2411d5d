#include "kummer/rat.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace kummer {

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& text) {
    Rat q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

namespace {

bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Int pollard_brent(const Int& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Int y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 128;
        auto f = [&](const Int& v) {
            Int t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Int diff = abs(x - y);
                    q = (q * diff) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(Int n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Int d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<std::pair<Int, unsigned>> factor_integer(const Int& n) {
    if (n == 0) throw std::invalid_argument("factor_integer: zero");
    Int m = abs(n);
    std::map<Int, unsigned> primes;
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++primes[Int(p)];
            m /= p;
        }
    }
    // wheel over 6k +- 1
    for (unsigned long p = 7; p < 10000 && Int(p) * p <= m; p += 2) {
        if (p % 3 == 0 || p % 5 == 0) continue;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++primes[Int(p)];
            m /= p;
        }
    }
    factor_into(m, primes);
    return {primes.begin(), primes.end()};
}

std::vector<Int> divisors(const Int& n) {
    std::vector<Int> divs{1};
    for (const auto& [p, e] : factor_integer(n)) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

SquareRoot exact_sqrt(const Rat& q) {
    if (q == 0) return {Rat(0), Int(0)};
    // sqrt(a/b) = sqrt(a*b) / b
    Int ab = q.get_num() * q.get_den();
    Int radicand = sgn(ab) < 0 ? Int(-1) : Int(1);
    Int root = 1;
    for (const auto& [p, e] : factor_integer(ab)) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e / 2);
        root *= pe;
        if (e % 2 == 1) radicand *= p;
    }
    Rat scale(root, q.get_den());
    scale.canonicalize();
    return {scale, radicand};
}

} // namespace kummer
