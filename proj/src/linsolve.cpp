#include "elsv/linsolve.hpp"

#include "elsv/error.hpp"

#include <string>

namespace elsv {

namespace {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Scales each row (with its right-hand side appended) to integers.
IntMatrix integer_rows(const RationalMatrix& a, const std::vector<Rational>* b) {
    IntMatrix out;
    out.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        BigInt l = 1;
        for (const auto& q : a[i])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
        if (b)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*b)[i].get_den_mpz_t());
        std::vector<BigInt> row;
        row.reserve(a[i].size() + 1);
        for (const auto& q : a[i])
            row.push_back(BigInt(q.get_num() * (l / q.get_den())));
        if (b)
            row.push_back(BigInt((*b)[i].get_num() * (l / (*b)[i].get_den())));
        out.push_back(std::move(row));
    }
    return out;
}

// In-place Bareiss elimination over the first `cols` columns. Returns the
// pivot column of each of the leading `rank` rows.
std::vector<std::size_t> bareiss(IntMatrix& m, std::size_t cols) {
    std::vector<std::size_t> pivot_cols;
    BigInt prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[row]);
        for (std::size_t i = row + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < m[i].size(); ++j) {
                m[i][j] = m[row][col] * m[i][j] - m[i][col] * m[row][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            m[i][col] = 0;
        }
        prev = m[row][col];
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

std::size_t rank(const RationalMatrix& rows) {
    if (rows.empty())
        return 0;
    auto m = integer_rows(rows, nullptr);
    return bareiss(m, rows.front().size()).size();
}

std::vector<Rational> solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
    if (a.size() != b.size())
        fail(ErrorCode::dimension_mismatch, "solve_exact: row count differs from right-hand side length");
    const std::size_t n = a.empty() ? 0 : a.front().size();
    auto m = integer_rows(a, &b);
    const auto pivots = bareiss(m, n);
    if (pivots.size() < n)
        fail(ErrorCode::singular_system, "interpolation system is rank deficient: rank " +
                                             std::to_string(pivots.size()) + " of " + std::to_string(n) +
                                             " unknowns");
    for (std::size_t i = n; i < m.size(); ++i)
        if (m[i][n] != 0)
            fail(ErrorCode::singular_system, "interpolation system is inconsistent at row " + std::to_string(i));

    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational acc(m[k][n]);
        for (std::size_t j = k + 1; j < n; ++j)
            acc -= Rational(m[k][j]) * x[j];
        x[k] = acc / Rational(m[k][k]);
    }
    return x;
}

bool IndependentRows::try_add(const std::vector<Rational>& row) {
    if (row.size() != columns_)
        fail(ErrorCode::dimension_mismatch, "IndependentRows: row has wrong length");
    auto v = row;
    for (std::size_t k = 0; k < reduced_.size(); ++k) {
        const auto p = pivots_[k];
        if (v[p] == 0)
            continue;
        const Rational factor = v[p];
        for (std::size_t j = 0; j < columns_; ++j)
            v[j] -= factor * reduced_[k][j];
    }
    std::size_t p = 0;
    while (p < columns_ && v[p] == 0)
        ++p;
    if (p == columns_)
        return false;
    const Rational lead = v[p];
    for (auto& q : v)
        q /= lead;
    // Keep earlier rows reduced against the new pivot.
    for (auto& r : reduced_) {
        if (r[p] == 0)
            continue;
        const Rational factor = r[p];
        for (std::size_t j = 0; j < columns_; ++j)
            r[j] -= factor * v[j];
    }
    reduced_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
}

} // namespace elsv
