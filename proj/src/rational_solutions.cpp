#include "kummer/rational_solutions.hpp"

#include "kummer/errors.hpp"
#include "kummer/linear_algebra.hpp"
#include "kummer/local.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>

namespace kummer {

namespace {

Poly falling_factorial(unsigned i) {
    Poly acc(Rat(1));
    for (unsigned j = 0; j < i; ++j) acc *= Poly::linear(Rat(j));
    return acc;
}

std::vector<Int> integer_roots(const Poly& p) {
    std::vector<Int> out;
    if (p.is_zero()) return out;
    for (const auto& r : rational_roots(p))
        if (is_integer(r)) out.push_back(r.get_num());
    return out;
}

std::vector<Rat> singular_points(const std::vector<RatFunc>& coefficients) {
    std::set<Rat> pts;
    for (const auto& c : coefficients)
        for (const auto& [root, mult] : rational_factorization(c.den())) pts.insert(root);
    return {pts.begin(), pts.end()};
}

// Indicial polynomial in m of the operator at a finite point.
Poly indicial_at(const std::vector<RatFunc>& coefficients, const Rat& c) {
    std::optional<int> shift;
    std::vector<std::pair<unsigned, int>> vals;
    for (unsigned i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i].is_zero()) continue;
        const int v = valuation_at(coefficients[i], c);
        vals.emplace_back(i, v);
        shift = shift ? std::min(*shift, v - static_cast<int>(i)) : v - static_cast<int>(i);
    }
    Poly ind;
    for (const auto& [i, v] : vals) {
        if (v - static_cast<int>(i) != *shift) continue;
        ind += laurent_at(coefficients[i], c, v).at(v) * falling_factorial(i);
    }
    return ind;
}

Poly indicial_at_infinity(const std::vector<RatFunc>& coefficients) {
    std::optional<int> top;
    for (unsigned i = 0; i < coefficients.size(); ++i) {
        if (coefficients[i].is_zero()) continue;
        const int d = -order_at_infinity(coefficients[i]) - static_cast<int>(i);
        top = top ? std::max(*top, d) : d;
    }
    Poly ind;
    for (unsigned i = 0; i < coefficients.size(); ++i) {
        const auto& a = coefficients[i];
        if (a.is_zero() || -order_at_infinity(a) - static_cast<int>(i) != *top) continue;
        ind += (a.num().lc() / a.den().lc()) * falling_factorial(i);
    }
    return ind;
}

Poly lcm(const Poly& a, const Poly& b) { return exact_quotient(a * b, gcd(a, b)).monic(); }

// Numerator coefficient columns of the images over a common denominator.
RatMatrix coefficient_matrix(const std::vector<RatFunc>& images) {
    Poly common(Rat(1));
    for (const auto& g : images) common = lcm(common, g.den());
    std::vector<Poly> nums;
    int rows = 0;
    for (const auto& g : images) {
        nums.push_back(g.num() * exact_quotient(common, g.den()));
        rows = std::max(rows, nums.back().degree() + 1);
    }
    RatMatrix m(rows, std::vector<Rat>(images.size()));
    for (std::size_t k = 0; k < nums.size(); ++k)
        for (int r = 0; r <= nums[k].degree(); ++r) m[r][k] = nums[k].coeff(r);
    return m;
}

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % kPrime);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (; e; e >>= 1, a = mul_mod(a, a))
        if (e & 1) r = mul_mod(r, a);
    return r;
}

std::optional<std::uint64_t> reduce_mod(const Rat& q) {
    const Int p(static_cast<unsigned long>(kPrime));
    const Int den = Int(q.get_den() % p);
    if (den == 0) return std::nullopt;
    Int num = q.get_num() % p;
    if (num < 0) num += p;
    return mul_mod(static_cast<std::uint64_t>(num.get_ui()), pow_mod(den.get_ui(), kPrime - 2));
}

// Rank of a small matrix over Z/kPrime.
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        const std::uint64_t inv = pow_mod(m[rank][c], kPrime - 2);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            const std::uint64_t f = mul_mod(m[r][c], inv);
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] = (m[r][k] + kPrime - mul_mod(f, m[rank][k])) % kPrime;
        }
        ++rank;
    }
    return rank;
}

// Mirrors the exact recurrence below modulo a prime.  Returns true only when
// the kernel is certainly trivial; any bad reduction returns false.
bool kernel_trivial_mod_p(const std::vector<Poly>& scaled, int shift, int max_degree,
                          const std::vector<bool>& free_at) {
    const int order = static_cast<int>(scaled.size()) - 1;
    std::vector<std::vector<std::uint64_t>> coeffs(scaled.size());
    for (std::size_t i = 0; i < scaled.size(); ++i)
        for (int e = 0; e <= scaled[i].degree(); ++e) {
            const auto c = reduce_mod(scaled[i].coeff(e));
            if (!c) return false;
            coeffs[i].push_back(*c);
        }
    auto image_coeff = [&](int k, int j) {
        std::uint64_t acc = 0;
        std::uint64_t falling = 1;
        for (int i = 0; i <= order && i <= k; ++i) {
            const int idx = j - k + i;
            if (idx >= 0 && idx < static_cast<int>(coeffs[i].size()))
                acc = (acc + mul_mod(falling, coeffs[i][idx])) % kPrime;
            falling = mul_mod(falling, static_cast<std::uint64_t>(k - i));
        }
        return acc;
    };
    using Form = std::vector<std::uint64_t>;
    std::size_t params = 0;
    for (bool f : free_at) params += f;
    std::vector<Form> p(static_cast<std::size_t>(max_degree) + 1, Form(params));
    std::vector<Form> constraints;
    auto combination = [&](int j, int from, int to) {
        Form acc(params);
        for (int k = from; k <= to; ++k) {
            const std::uint64_t c = image_coeff(k, j);
            if (c == 0) continue;
            for (std::size_t t = 0; t < params; ++t) acc[t] = (acc[t] + mul_mod(c, p[k][t])) % kPrime;
        }
        return acc;
    };
    std::size_t next = 0;
    for (int m = max_degree; m >= 0; --m) {
        const int j = m + shift;
        const std::uint64_t lead = j >= 0 ? image_coeff(m, j) : 0;
        if ((lead == 0) != free_at[m]) return false;
        Form rhs = j >= 0 ? combination(j, m + 1, std::min(max_degree, j + order)) : Form(params);
        if (lead != 0) {
            const std::uint64_t inv = kPrime - pow_mod(lead, kPrime - 2);
            for (auto& x : rhs) x = mul_mod(x, inv);
            p[m] = std::move(rhs);
            continue;
        }
        constraints.push_back(std::move(rhs));
        p[m][next++] = 1;
    }
    for (int j = 0; j < shift; ++j) constraints.push_back(combination(j, 0, std::min(max_degree, j + order)));
    return rank_mod(std::move(constraints), params) == params;
}

} // namespace

RatFunc apply_operator(const std::vector<RatFunc>& coefficients, const RatFunc& f) {
    RatFunc acc;
    RatFunc d = f;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        if (!coefficients[i].is_zero()) acc += coefficients[i] * d;
        if (i + 1 < coefficients.size()) d = d.derivative();
    }
    return acc;
}

std::vector<RatFunc> rational_solutions(const LinearODE& l) {
    const auto& coeffs = l.coefficients();
    Poly denominator(Rat(1));
    RatFunc log_derivative;
    long degree_bound = 0;
    for (const auto& c : singular_points(coeffs)) {
        const auto roots = integer_roots(indicial_at(coeffs, c));
        if (roots.empty()) return {};
        const Int lowest = *std::min_element(roots.begin(), roots.end());
        if (lowest < 0) {
            const long e = Int(-lowest).get_si();
            denominator *= Poly::linear(c).pow(static_cast<unsigned>(e));
            log_derivative -= RatFunc(Rat(e)) / RatFunc(Poly::linear(c));
            degree_bound += e;
        }
    }
    const auto top = integer_roots(indicial_at_infinity(coeffs));
    if (top.empty()) return {};
    degree_bound += (*std::max_element(top.begin(), top.end())).get_si();
    if (degree_bound < 0) return {};

    // a = y/denominator turns L into an operator on the polynomial y;
    // ratios[k] is g^(k)/g for g = 1/denominator
    std::vector<RatFunc> ratios{RatFunc(1)};
    for (std::size_t i = 1; i < coeffs.size(); ++i)
        ratios.push_back(ratios.back().derivative() + log_derivative * ratios.back());
    std::vector<RatFunc> conjugated(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Int binom = 1;
        for (std::size_t j = 0; j <= i; ++j) {
            conjugated[j] += coeffs[i] * RatFunc(Rat(binom)) * ratios[i - j];
            binom = binom * static_cast<long>(i - j) / static_cast<long>(j + 1);
        }
    }
    std::vector<RatFunc> basis;
    for (const auto& y : polynomial_kernel(conjugated, static_cast<int>(degree_bound))) {
        const RatFunc f(y, denominator);
        if (!l.apply(f).is_zero()) throw VerificationError("rational solution failed substitution");
        basis.push_back(f);
    }
    return basis;
}

std::vector<Poly> polynomial_kernel(const std::vector<RatFunc>& coefficients, int max_degree) {
    if (max_degree < 0) return {};
    Poly common(Rat(1));
    for (const auto& c : coefficients) common = lcm(common, c.den());
    std::vector<Poly> scaled;
    std::optional<int> shift;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        scaled.push_back(coefficients[i].num() * exact_quotient(common, coefficients[i].den()));
        if (scaled.back().is_zero()) continue;
        const int s = scaled.back().degree() - static_cast<int>(i);
        shift = shift ? std::max(*shift, s) : s;
    }
    std::vector<Poly> out;
    if (!shift) {
        for (int k = 0; k <= max_degree; ++k) out.push_back(Poly::monomial(Rat(1), static_cast<unsigned>(k)));
        return out;
    }
    const int order = static_cast<int>(scaled.size()) - 1;
    std::vector<bool> free_at(static_cast<std::size_t>(max_degree) + 1);
    for (int m = 0; m <= max_degree; ++m) {
        Rat lead;
        Rat falling(1);
        for (int i = 0; i <= order && i <= m; ++i) {
            const int idx = *shift + i;
            if (m + *shift >= 0 && idx >= 0 && idx <= scaled[i].degree()) lead += falling * scaled[i].coeff(idx);
            falling *= m - i;
        }
        free_at[m] = lead == 0;
    }
    if (kernel_trivial_mod_p(scaled, *shift, max_degree, free_at)) return out;
    // coefficient of x^j in the image of x^k
    auto image_coeff = [&](int k, int j) {
        Rat acc;
        Rat falling(1);
        for (int i = 0; i <= order && i <= k; ++i) {
            const int idx = j - k + i;
            if (idx >= 0 && idx <= scaled[i].degree()) acc += falling * scaled[i].coeff(idx);
            falling *= k - i;
        }
        return acc;
    };

    // Each unknown coefficient p_m is tracked as a linear form in the free
    // parameters; p_m is free exactly when the leading image coefficient vanishes.
    using Form = std::vector<Rat>;
    std::size_t params = 0;
    std::vector<Form> p(static_cast<std::size_t>(max_degree) + 1);
    std::vector<Form> constraints;
    auto combination = [&](int j, int from, int to) {
        Form acc(params);
        for (int k = from; k <= to; ++k) {
            const Rat c = image_coeff(k, j);
            if (c == 0) continue;
            for (std::size_t t = 0; t < p[k].size(); ++t) acc[t] += c * p[k][t];
        }
        return acc;
    };
    auto is_zero_form = [](const Form& f) {
        return std::all_of(f.begin(), f.end(), [](const Rat& x) { return x == 0; });
    };
    for (int m = max_degree; m >= 0; --m) {
        const int j = m + *shift;
        const Rat lead = j >= 0 ? image_coeff(m, j) : Rat(0);
        Form rhs = j >= 0 ? combination(j, m + 1, std::min(max_degree, j + order)) : Form(params);
        if (lead != 0) {
            for (auto& x : rhs) x = -x / lead;
            p[m] = std::move(rhs);
            continue;
        }
        if (!is_zero_form(rhs)) constraints.push_back(std::move(rhs));
        ++params;
        p[m] = Form(params);
        p[m].back() = 1;
    }
    for (int j = 0; j < *shift; ++j) {
        Form c = combination(j, 0, std::min(max_degree, j + order));
        if (!is_zero_form(c)) constraints.push_back(std::move(c));
    }
    for (auto& f : p) {
        f.resize(params);
        std::reverse(f.begin(), f.end());
    }
    for (auto& c : constraints) {
        c.resize(params);
        std::reverse(c.begin(), c.end());
    }
    for (const auto& t : nullspace(std::move(constraints), params)) {
        std::vector<Rat> coeffs(p.size());
        for (std::size_t m = 0; m < p.size(); ++m)
            for (std::size_t i = 0; i < params; ++i) coeffs[m] += p[m][i] * t[i];
        out.emplace_back(std::move(coeffs));
    }
    return out;
}

std::optional<std::vector<Rat>> span_coordinates(const RatFunc& f, const std::vector<RatFunc>& basis) {
    std::vector<RatFunc> all = basis;
    all.push_back(f);
    auto m = coefficient_matrix(all);
    std::vector<Rat> rhs;
    for (auto& row : m) {
        rhs.push_back(row.back());
        row.pop_back();
    }
    return solve_linear(std::move(m), std::move(rhs), basis.size());
}

} // namespace kummer
