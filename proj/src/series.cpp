#include "kummer/series.hpp"

#include "kummer/local.hpp"

#include <stdexcept>

namespace kummer {

namespace {

// (k+i)!/k!
Rat rising(int k, int i) {
    Rat acc = 1;
    for (int j = 1; j <= i; ++j) acc *= k + j;
    return acc;
}

std::vector<std::vector<Rat>> coefficient_series(const LinearODE& l, const Rat& p, int n) {
    std::vector<std::vector<Rat>> a;
    for (const auto& c : l.coefficients()) {
        if (c.is_pole(p)) throw std::domain_error("series expansion at a singular point " + to_string(p));
        a.push_back(series_at(c, p, n));
    }
    return a;
}

// [t^k] (a * f^(i)) using f coefficients already known.
Rat product_coefficient(const std::vector<Rat>& a, const std::vector<Rat>& f, int i, int k) {
    Rat acc = 0;
    for (int j = 0; j <= k && j < static_cast<int>(a.size()); ++j) {
        const int idx = k - j + i;
        if (a[j] == 0 || idx >= static_cast<int>(f.size()) || f[idx] == 0) continue;
        acc += a[j] * rising(k - j, i) * f[idx];
    }
    return acc;
}

} // namespace

FundamentalSeries series_solutions(const LinearODE& l, const Rat& p, int n) {
    const int ord = static_cast<int>(l.order());
    if (n < ord - 1) throw std::invalid_argument("series order below the operator order");
    const auto a = coefficient_series(l, p, n);
    FundamentalSeries fs{p, n, {}};
    for (int m = 0; m < ord; ++m) {
        std::vector<Rat> f(n + 1);
        Rat fact = 1;
        for (int j = 2; j <= m; ++j) fact *= j;
        f[m] = 1 / fact;
        for (int k = 0; k + ord <= n; ++k) {
            Rat rhs = 0;
            for (int i = 0; i < ord; ++i) rhs -= product_coefficient(a[i], f, i, k);
            f[k + ord] = rhs / rising(k, ord);
        }
        fs.solutions.push_back(std::move(f));
    }
    return fs;
}

std::vector<Rat> apply_series(const LinearODE& l, const std::vector<Rat>& f, const Rat& p, int n) {
    const int ord = static_cast<int>(l.order());
    const auto a = coefficient_series(l, p, n);
    std::vector<Rat> truncated(f.begin(), f.begin() + std::min<std::size_t>(f.size(), n + 1));
    std::vector<Rat> out;
    for (int k = 0; k + ord <= n; ++k) {
        Rat acc = 0;
        for (int i = 0; i <= ord; ++i) acc += product_coefficient(a[i], truncated, i, k);
        out.push_back(acc);
    }
    return out;
}

} // namespace kummer
