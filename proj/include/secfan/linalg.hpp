/**
 * Exact linear algebra over the rationals and the integers.
 */
#pragma once

#include "secfan/rational.hpp"

#include <optional>
#include <vector>

namespace secfan {

/**
 * Reduced row echelon form of a set of row vectors.  The nonzero rows form
 * a basis of the row space; `pivots[i]` is the pivot column of row `i`, and
 * every row has a one in its pivot column and zeros in all other pivots.
 */
struct RowSpace
{
    std::size_t cols = 0;
    std::vector<QVector> rows;
    std::vector<std::size_t> pivots;

    std::size_t rank() const { return rows.size(); }

    /** Subtracts multiples of the basis so that `v` vanishes on all pivots. */
    void reduce(QVector& v) const;
    bool contains(const QVector& v) const;
    /** Inserts `v`; returns false when `v` already lies in the row space. */
    bool insert(QVector v);
};

RowSpace row_space(const std::vector<QVector>& rows, std::size_t cols);
std::size_t rank(const std::vector<QVector>& rows, std::size_t cols);
std::size_t rank(const QMatrix& m);

/** Basis of {x : r . x = 0 for all rows r}, one vector per free column. */
std::vector<QVector> nullspace(const std::vector<QVector>& rows, std::size_t cols);

Rational determinant(QMatrix m);

/**
 * Solves sum_i c_i basis[i] = target.  Returns nothing when `target` is not
 * in the span; the solution is unique when `basis` is independent.
 */
std::optional<QVector> solve_combination(const std::vector<QVector>& basis, const QVector& target);

/**
 * Z-basis of the lattice {x in Z^n : M x = 0} for an integer matrix M with
 * n columns, computed by unimodular column reduction.
 */
std::vector<ZVector> integer_kernel(const std::vector<ZVector>& rows, std::size_t cols);

}  // namespace secfan
