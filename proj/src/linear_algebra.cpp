#include "kummer/linear_algebra.hpp"

#include <utility>

namespace kummer {

namespace {

using IntRow = std::vector<Int>;

IntRow integer_row(const std::vector<Rat>& row) {
    Int den = 1;
    for (const auto& x : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    IntRow out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(x.get_num() * (den / x.get_den()));
    return out;
}

void remove_content(IntRow& row) {
    Int g = 0;
    for (const auto& x : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// In-place reduced row echelon form on the first ncols columns; the
// remaining columns (if any) are carried along. Returns pivot columns.
// Elimination runs fraction-free over Z with row contents removed.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t ncols) {
    std::vector<IntRow> m;
    m.reserve(a.size());
    for (const auto& r : a) m.push_back(integer_row(r));
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t sel = m.size();
        for (std::size_t r = row; r < m.size(); ++r)
            if (m[r][col] != 0 && (sel == m.size() || abs(m[r][col]) < abs(m[sel][col]))) sel = r;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        const Int pivot = m[row][col];
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Int f = m[r][col];
            for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] = pivot * m[r][k] - f * m[row][k];
            remove_content(m[r]);
        }
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
        const Int lead = r < pivots.size() ? m[r][pivots[r]] : Int(1);
        for (std::size_t k = 0; k < m[r].size(); ++k) a[r][k] = Rat(m[r][k]) / Rat(lead);
    }
    return pivots;
}

} // namespace

std::vector<std::vector<Rat>> nullspace(RatMatrix rows, std::size_t ncols) {
    for (auto& r : rows) r.resize(ncols);
    const auto pivots = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rat> v(ncols);
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rat>> solve_linear(RatMatrix rows, std::vector<Rat> rhs, std::size_t ncols) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].resize(ncols);
        rows[i].push_back(rhs[i]);
    }
    const auto pivots = rref(rows, ncols);
    for (std::size_t i = pivots.size(); i < rows.size(); ++i)
        if (rows[i][ncols] != 0) return std::nullopt;
    std::vector<Rat> v(ncols);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = rows[i][ncols];
    return v;
}

std::size_t rank(RatMatrix rows, std::size_t ncols) {
    for (auto& r : rows) r.resize(ncols);
    return rref(rows, ncols).size();
}

} // namespace kummer
