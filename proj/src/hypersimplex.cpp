#include "secfan/hypersimplex.hpp"

#include <algorithm>

namespace secfan {

void check_hypersimplex(const HypersimplexSpec& spec)
{
    if (spec.n < 2 || spec.k < 1 || spec.k > spec.n - 1)
        throw InvalidInput("hypersimplex parameters must satisfy 1 <= k <= n-1 (got k=" + std::to_string(spec.k) +
                           ", n=" + std::to_string(spec.n) + ")");
    if (spec.n > 64)
        throw InvalidInput("hypersimplex: n > 64 is not supported");
}

void check_proper_hypersimplex(const HypersimplexSpec& spec)
{
    check_hypersimplex(spec);
    if (spec.k < 2 || spec.k > spec.n - 2)
        throw InvalidInput("this construction requires 2 <= k <= n-2 (got k=" + std::to_string(spec.k) +
                           ", n=" + std::to_string(spec.n) + ")");
}

std::vector<std::vector<int>> hypersimplex_vertex_list(const HypersimplexSpec& spec)
{
    check_hypersimplex(spec);
    std::vector<int> v(static_cast<std::size_t>(spec.n), 0);
    std::fill(v.begin(), v.begin() + spec.k, 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::prev_permutation(v.begin(), v.end()));
    return out;
}

PointConfiguration vertices(const HypersimplexSpec& spec)
{
    auto list = hypersimplex_vertex_list(spec);
    QMatrix m(list.size(), static_cast<std::size_t>(spec.n));
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = 0; j < list[i].size(); ++j)
            m(i, j) = list[i][j];
    return PointConfiguration(std::move(m), spec);
}

namespace {

HeightFunction leading_ones(const HypersimplexSpec& spec, std::size_t count)
{
    std::size_t size = binomial(spec.n, spec.k).get_ui();
    HeightFunction h(size, Rational(0));
    for (std::size_t i = 0; i < count; ++i)
        h[i] = 1;
    return h;
}

}  // namespace

HeightFunction lambda_lift(const HypersimplexSpec& spec)
{
    check_proper_hypersimplex(spec);
    return leading_ones(spec, static_cast<std::size_t>(spec.n - spec.k));
}

HeightFunction kappa_lift(const HypersimplexSpec& spec)
{
    check_proper_hypersimplex(spec);
    return leading_ones(spec, binomial(spec.n - 1, spec.k - 1).get_ui() - 1);
}

std::vector<int> center_vertex(const HypersimplexSpec& spec)
{
    check_proper_hypersimplex(spec);
    std::vector<int> c(static_cast<std::size_t>(spec.n), 0);
    c[0] = 1;
    for (int j = spec.n - spec.k + 1; j < spec.n; ++j)
        c[static_cast<std::size_t>(j)] = 1;
    return c;
}

int center_label(const HypersimplexSpec& spec)
{
    check_proper_hypersimplex(spec);
    return static_cast<int>(binomial(spec.n - 1, spec.k - 1).get_si()) - 1;
}

Integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer eulerian(int n, int k)
{
    if (n < 1 || k < 1 || k > n)
        return 0;
    // row by row; row[k] holds A(m,k)
    std::vector<Integer> row(static_cast<std::size_t>(n) + 2, 0);
    row[1] = 1;
    for (int m = 2; m <= n; ++m) {
        std::vector<Integer> next(row.size(), 0);
        for (int j = 1; j <= m; ++j)
            next[static_cast<std::size_t>(j)] =
                j * row[static_cast<std::size_t>(j)] + (m - j + 1) * row[static_cast<std::size_t>(j - 1)];
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

Integer speyer_bound(int k, int n)
{
    check_proper_hypersimplex({k, n});
    return binomial(n - 2, k - 1);
}

Integer gr_ray_bound(int k, int n)
{
    check_proper_hypersimplex({k, n});
    return binomial(n - 2, k - 1) - Integer((k - 1) * (n - k - 1)) + 1;
}

}  // namespace secfan
