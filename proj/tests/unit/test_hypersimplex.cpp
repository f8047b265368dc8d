#include "oracles.hpp"

#include "secfan/dissimilarity.hpp"
#include "secfan/hypersimplex.hpp"

#include <doctest.h>

#include <numeric>

using namespace secfan;

namespace {

QVector ints(std::initializer_list<long> v)
{
    QVector out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

}  // namespace

TEST_SUITE("hypersimplex")
{
    TEST_CASE("vertex order is descending lexicographic")
    {
        auto v24 = hypersimplex_vertex_list({2, 4});
        std::vector<std::vector<int>> expected{{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1},
                                               {0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
        CHECK(v24 == expected);
        CHECK(hypersimplex_vertex_list({1, 3}) == std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        auto v36 = hypersimplex_vertex_list({3, 6});
        REQUIRE(v36.size() == 20);
        CHECK(v36.front() == std::vector<int>{1, 1, 1, 0, 0, 0});
        CHECK(v36.back() == std::vector<int>{0, 0, 0, 1, 1, 1});
        for (std::size_t i = 1; i < v36.size(); ++i)
            CHECK(v36[i - 1] > v36[i]);
        CHECK_THROWS_AS(vertices({0, 3}), InvalidInput);
        CHECK_THROWS_AS(vertices({3, 3}), InvalidInput);
    }

    TEST_CASE("lambda and kappa liftings")
    {
        CHECK(lambda_lift({2, 4}) == ints({1, 1, 0, 0, 0, 0}));
        CHECK(lambda_lift({2, 5}) == ints({1, 1, 1, 0, 0, 0, 0, 0, 0, 0}));
        QVector l36 = lambda_lift({3, 6});
        CHECK(l36.size() == 20);
        CHECK(std::accumulate(l36.begin(), l36.end(), Rational(0)) == 3);
        CHECK(l36[2] == 1);
        CHECK(l36[3] == 0);
        for (int n = 4; n <= 8; ++n)
            CHECK(kappa_lift({2, n}) == lambda_lift({2, n}));
        QVector k36 = kappa_lift({3, 6});
        CHECK(std::accumulate(k36.begin(), k36.end(), Rational(0)) == 9);
        CHECK(k36[8] == 1);
        CHECK(k36[9] == 0);
        QVector k37 = kappa_lift({3, 7});
        CHECK(std::accumulate(k37.begin(), k37.end(), Rational(0)) == 14);
        CHECK_THROWS_AS(lambda_lift({1, 4}), InvalidInput);
        CHECK_THROWS_AS(kappa_lift({3, 4}), InvalidInput);
    }

    TEST_CASE("definitional checksums of the liftings")
    {
        for (int n = 4; n <= 8; ++n)
            for (int k = 2; k <= n - 2; ++k) {
                QVector l = lambda_lift({k, n});
                QVector c = kappa_lift({k, n});
                CHECK(std::accumulate(l.begin(), l.end(), Rational(0)) == n - k);
                CHECK(std::accumulate(c.begin(), c.end(), Rational(0)) == Rational(oracle::binomial(n - 1, k - 1) - 1));
            }
    }

    TEST_CASE("center vertex")
    {
        CHECK(center_vertex({3, 6}) == std::vector<int>{1, 0, 0, 0, 1, 1});
        CHECK(center_vertex({2, 5}) == std::vector<int>{1, 0, 0, 0, 1});
        CHECK(center_label({2, 4}) == 2);  // third vertex, 1001
        for (int n = 4; n <= 8; ++n)
            for (int k = 2; k <= n - 2; ++k) {
                auto list = hypersimplex_vertex_list({k, n});
                CHECK(list[static_cast<std::size_t>(center_label({k, n}))] == center_vertex({k, n}));
            }
    }

    TEST_CASE("split pseudo-metrics")
    {
        CHECK(split_pseudometric(4, {0, 1}).values() == ints({0, 1, 1, 1, 1, 0}));
        auto star = split_pseudometric(5, {0});
        CHECK(split_type(5, {0}) == std::pair<int, int>{1, 4});
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                CHECK(star(i, j) == (i == 0 ? 1 : 0));
        // D_{A,B} and D_{B,A} are the same map; 1 - D is the same-side indicator
        for (const auto& part : all_splits(6, 1)) {
            std::vector<int> other;
            for (int i = 0; i < 6; ++i)
                if (!std::binary_search(part.begin(), part.end(), i))
                    other.push_back(i);
            auto d = split_pseudometric(6, part);
            CHECK(d == split_pseudometric(6, other));
            for (int i = 0; i < 6; ++i)
                for (int j = i + 1; j < 6; ++j) {
                    bool same = std::binary_search(part.begin(), part.end(), i) ==
                                std::binary_search(part.begin(), part.end(), j);
                    CHECK(1 - d(i, j) == (same ? 1 : 0));
                }
        }
        CHECK(all_splits(6, 2).size() == 25);  // 2^5 - 6 - 1
        CHECK_THROWS_AS(split_pseudometric(4, {}), InvalidInput);
    }

    TEST_CASE("thrackle metric")
    {
        auto t = thrackle(6);
        CHECK(t(0, 1) == 5);
        CHECK(t(0, 3) == 9);
        CHECK(t(2, 5) == 9);
        CHECK(thrackle(4)(0, 2) == 4);
        PointConfiguration d26 = vertices({2, 6});
        Subdivision s = regular_subdivision(d26, t.as_heights());
        CHECK(s.is_triangulation(d26.dim()));
    }

    TEST_CASE("Eulerian numbers")
    {
        CHECK(eulerian(1, 1) == 1);
        CHECK(eulerian(1, 2) == 0);
        CHECK(eulerian(4, 2) == 11);
        CHECK(eulerian(5, 3) == 66);
        for (int n = 1; n <= 12; ++n) {
            Integer sum = 0;
            for (int k = 1; k <= n; ++k) {
                CHECK(eulerian(n, k) == oracle::eulerian(n, k));
                sum += eulerian(n, k);
            }
            CHECK(sum == oracle::factorial(n));
        }
    }

    TEST_CASE("spread bounds")
    {
        CHECK(speyer_bound(2, 5) == 3);
        CHECK(speyer_bound(3, 6) == 6);
        for (int n = 4; n <= 12; ++n)
            CHECK(gr_ray_bound(2, n) == 2);
        CHECK_THROWS_AS(speyer_bound(1, 5), InvalidInput);
    }

    TEST_CASE("Δ(k,n) and Δ(n-k,n) are related by complementation")
    {
        for (int n = 3; n <= 7; ++n)
            for (int k = 1; k < n; ++k) {
                auto a = hypersimplex_vertex_list({k, n});
                auto b = hypersimplex_vertex_list({n - k, n});
                for (auto& v : a)
                    for (auto& x : v)
                        x = 1 - x;
                std::sort(a.begin(), a.end(), std::greater<>());
                CHECK(a == b);
            }
    }

    TEST_CASE("volume of Δ(k,n) is A(n-1,k)")
    {
        for (int n = 3; n <= 7; ++n)
            for (int k = 1; k < n; ++k) {
                if (oracle::binomial(n, k) > 21)
                    continue;
                CHECK(vertices({k, n}).volume() == oracle::eulerian(n - 1, k));
            }
    }
}
