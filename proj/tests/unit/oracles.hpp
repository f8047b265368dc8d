// Brute-force reference computations used to check the library.  They are
// deliberately naive: exponential subset enumeration, explicit formulas.
#pragma once

#include "secfan/configuration.hpp"
#include "secfan/linalg.hpp"
#include "secfan/subdivision.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace oracle {

using secfan::Cell;
using secfan::Integer;
using secfan::QMatrix;
using secfan::QVector;
using secfan::Rational;

inline void for_each_subset(std::size_t n, std::size_t size, const std::function<void(const Cell&)>& fn)
{
    Cell s;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (s.size() == size) {
            fn(s);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            s.push_back(static_cast<int>(i));
            rec(i + 1);
            s.pop_back();
        }
    };
    rec(0);
}

/**
 * Supporting hyperplanes of a full dimensional point set in R^d spanned by
 * d-subsets; returns the sets of points on each facet.  With `lower` the
 * last coordinate is a height and only hyperplanes with all points weakly
 * above are kept.
 */
inline std::set<Cell> hyperplane_facets(const QMatrix& pts, bool lower)
{
    const std::size_t n = pts.rows();
    const std::size_t d = pts.cols();
    std::set<Cell> out;
    for_each_subset(n, d, [&](const Cell& s) {
        std::vector<QVector> rows;
        for (int i : s) {
            QVector r = pts.row_vector(static_cast<std::size_t>(i));
            r.emplace_back(1);
            rows.push_back(std::move(r));
        }
        auto ns = secfan::nullspace(rows, d + 1);
        if (ns.size() != 1)
            return;
        QVector a = ns[0];
        if (lower) {
            if (a[d - 1] == 0)
                return;  // vertical hyperplane
            if (a[d - 1] < 0)
                for (auto& x : a)
                    x = -x;
        }
        int sign = 0;
        Cell tight;
        for (std::size_t i = 0; i < n; ++i) {
            QVector p = pts.row_vector(i);
            p.emplace_back(1);
            int sg = sgn(secfan::dot(a, p));
            if (sg == 0) {
                tight.push_back(static_cast<int>(i));
                continue;
            }
            if (lower && sg < 0)
                return;
            if (sign != 0 && sg != sign)
                return;
            sign = sg;
        }
        out.insert(tight);
    });
    return out;
}

/** Lower facets of chart points lifted by `heights`, by hyperplane enumeration. */
inline std::vector<Cell> lower_cells(const secfan::PointConfiguration& config, const QVector& heights)
{
    QMatrix lifted = config.lifted(heights);
    auto facets = hyperplane_facets(lifted, true);
    // keep full dimensional ones
    std::vector<Cell> cells;
    for (const auto& f : facets)
        if (secfan::affine_dim(config.chart_points(f)) == config.dim())
            cells.push_back(f);
    if (cells.empty()) {
        Cell all(config.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = static_cast<int>(i);
        cells.push_back(all);
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

inline Integer binomial(long n, long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

/** Eulerian number by the closed alternating sum. */
inline Integer eulerian(int n, int k)
{
    if (k < 1 || k > n)
        return 0;
    Integer sum = 0;
    for (int j = 0; j <= k; ++j) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(k - j), static_cast<unsigned long>(n));
        Integer term = binomial(n + 1, j) * p;
        if (j % 2)
            sum -= term;
        else
            sum += term;
    }
    return sum;
}

inline Integer factorial(int n)
{
    Integer r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

inline QVector random_heights(std::mt19937_64& rng, std::size_t size, long range)
{
    std::uniform_int_distribution<long> dist(-range, range);
    QVector h;
    for (std::size_t i = 0; i < size; ++i)
        h.emplace_back(dist(rng));
    return h;
}

}  // namespace oracle
