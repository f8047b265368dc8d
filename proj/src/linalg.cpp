#include "secfan/linalg.hpp"

#include <algorithm>
#include <utility>

namespace secfan {

void RowSpace::reduce(QVector& v) const
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Rational c = v[pivots[i]];
        if (sgn(c) == 0)
            continue;
        const auto& r = rows[i];
        for (std::size_t j = 0; j < cols; ++j)
            if (sgn(r[j]) != 0)
                v[j] -= c * r[j];
    }
}

bool RowSpace::contains(const QVector& v) const
{
    QVector w = v;
    reduce(w);
    return is_zero(w);
}

bool RowSpace::insert(QVector v)
{
    reduce(v);
    std::size_t p = 0;
    while (p < cols && sgn(v[p]) == 0)
        ++p;
    if (p == cols)
        return false;
    const Rational inv = 1 / v[p];
    for (auto& x : v)
        if (sgn(x) != 0)
            x *= inv;
    // eliminate the new pivot from the existing rows
    for (auto& r : rows) {
        const Rational c = r[p];
        if (sgn(c) == 0)
            continue;
        for (std::size_t j = 0; j < cols; ++j)
            if (sgn(v[j]) != 0)
                r[j] -= c * v[j];
    }
    // keep rows sorted by pivot column
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), p);
    auto idx = static_cast<std::size_t>(pos - pivots.begin());
    pivots.insert(pos, p);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
    return true;
}

RowSpace row_space(const std::vector<QVector>& rows, std::size_t cols)
{
    RowSpace rs;
    rs.cols = cols;
    for (const auto& r : rows) {
        rs.insert(r);
        if (rs.rank() == cols)
            break;
    }
    return rs;
}

std::size_t rank(const std::vector<QVector>& rows, std::size_t cols) { return row_space(rows, cols).rank(); }

std::size_t rank(const QMatrix& m) { return rank(m.to_rows(), m.cols()); }

std::vector<QVector> nullspace(const std::vector<QVector>& rows, std::size_t cols)
{
    RowSpace rs = row_space(rows, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : rs.pivots)
        is_pivot[p] = true;
    std::vector<QVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        QVector v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < rs.rows.size(); ++i)
            v[rs.pivots[i]] = -rs.rows[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(QMatrix m)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw InvalidInput("determinant of a non-square matrix");
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m(p, c)) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m(i, c)) == 0)
                continue;
            const Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<QVector> solve_combination(const std::vector<QVector>& basis, const QVector& target)
{
    const std::size_t k = basis.size();
    const std::size_t n = target.size();
    // augmented system: columns are basis vectors, rows are coordinates
    std::vector<QVector> aug(n, QVector(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            aug[i][j] = basis[j][i];
        aug[i][k] = target[i];
    }
    RowSpace rs = row_space(aug, k + 1);
    QVector sol(k);
    for (std::size_t i = 0; i < rs.rows.size(); ++i) {
        if (rs.pivots[i] == k)
            return std::nullopt;
        sol[rs.pivots[i]] = rs.rows[i][k];
    }
    return sol;
}

std::vector<ZVector> integer_kernel(const std::vector<ZVector>& rows, std::size_t cols)
{
    // Column operations on M, mirrored on U (initially the identity).  After
    // reduction, columns of M that are entirely zero correspond to kernel
    // vectors given by the matching columns of U.
    std::vector<ZVector> m = rows;
    std::vector<ZVector> u(cols, ZVector(cols));
    for (std::size_t i = 0; i < cols; ++i)
        u[i][i] = 1;

    auto col_combine = [&](std::size_t a, std::size_t b, const Integer& p, const Integer& q, const Integer& r,
                           const Integer& s) {
        // (col_a, col_b) <- (p col_a + q col_b, r col_a + s col_b)
        auto apply = [&](std::vector<ZVector>& mat) {
            for (auto& row : mat) {
                Integer x = p * row[a] + q * row[b];
                Integer y = r * row[a] + s * row[b];
                row[a] = std::move(x);
                row[b] = std::move(y);
            }
        };
        apply(m);
        apply(u);
    };

    std::size_t lead = 0;
    for (std::size_t i = 0; i < m.size() && lead < cols; ++i) {
        for (std::size_t j = lead + 1; j < cols; ++j) {
            if (m[i][j] == 0)
                continue;
            if (m[i][lead] == 0) {
                col_combine(lead, j, 0, 1, 1, 0);
                continue;
            }
            Integer g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m[i][lead].get_mpz_t(), m[i][j].get_mpz_t());
            Integer a = m[i][lead] / g;
            Integer b = m[i][j] / g;
            // [x -b; y a] has determinant x a + y b = 1
            col_combine(lead, j, x, y, -b, a);
        }
        if (m[i][lead] != 0)
            ++lead;
    }
    std::vector<ZVector> kernel;
    for (std::size_t c = lead; c < cols; ++c) {
        ZVector v(cols);
        for (std::size_t r = 0; r < cols; ++r)
            v[r] = u[r][c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace secfan
