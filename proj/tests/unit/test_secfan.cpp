#include "oracles.hpp"

#include "secfan/enumerate.hpp"
#include "secfan/hypersimplex.hpp"
#include "secfan/metrics.hpp"
#include "secfan/secondary.hpp"

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

Subdivision all_points(std::size_t n)
{
    Cell c(n);
    std::iota(c.begin(), c.end(), 0);
    return Subdivision(std::vector<Cell>{c});
}

/** Same cone: every row of one is nonnegative on the rays and zero on the lines of the other. */
bool same_cone(const HCone& a, const HCone& b)
{
    return dd_rays(a) == dd_rays(b);
}

}  // namespace

TEST_SUITE("secfan")
{
    TEST_CASE("secondary cones")
    {
        PointConfiguration d24 = vertices({2, 4});
        HCone trivial = secondary_cone(d24, all_points(6));
        CHECK(cone_dim(trivial) == 4);

        PointConfiguration d26 = vertices({2, 6});
        Subdivision t = regular_subdivision(d26, thrackle(6).as_heights());
        HCone sc = secondary_cone(d26, t);
        CHECK(cone_dim(sc) == 15);
        CHECK(sc.inequalities.size() == 9);  // simplicial modulo lineality
        VCone v = dd_rays(sc);
        CHECK(v.rays.size() == 9);
        CHECK(v.lineality_basis.size() == 6);

        for (int n = 5; n <= 7; ++n) {
            PointConfiguration c = vertices({2, n});
            CHECK(secondary_cone_dim(c, regular_subdivision(c, lambda_lift({2, n}))) == static_cast<std::size_t>(n + 1));
        }
        CHECK_THROWS_AS(secondary_cone(d24, Subdivision(std::vector<Cell>{{0, 1, 2}, {1, 2, 3, 4, 5}})), InvalidInput);
    }

    TEST_CASE("wall cone equals the per-cell secondary cone on triangulations")
    {
        std::mt19937_64 rng(8);
        for (auto spec : {HypersimplexSpec{2, 5}, HypersimplexSpec{2, 6}, HypersimplexSpec{3, 6}}) {
            PointConfiguration c = vertices(spec);
            for (int t = 0; t < 8; ++t) {
                Subdivision s = regular_subdivision(c, oracle::random_heights(rng, c.size(), 1000));
                if (!s.is_triangulation(c.dim()))
                    continue;
                CHECK(same_cone(wall_cone(c, s), secondary_cone_raw(c, s)));
                CHECK(same_cone(secondary_cone(c, s), secondary_cone_raw(c, s)));
            }
        }
    }

    TEST_CASE("coarsest tests")
    {
        for (auto spec : {HypersimplexSpec{2, 5}, HypersimplexSpec{2, 6}, HypersimplexSpec{3, 6}})
            CHECK(is_coarsest(vertices(spec), lambda_lift(spec)));
        CHECK(is_coarsest(vertices({3, 6}), kappa_lift({3, 6})));
        PointConfiguration d26 = vertices({2, 6});
        CHECK_FALSE(is_coarsest(d26, thrackle(6).as_heights()));
        CHECK_THROWS_AS(is_coarsest(d26, QVector(15)), InvalidInput);
    }

    TEST_CASE("secondary rays")
    {
        PointConfiguration d26 = vertices({2, 6});
        Subdivision t = regular_subdivision(d26, thrackle(6).as_heights());
        auto rays = secondary_rays(d26, t);
        REQUIRE(rays.size() == 9);
        std::map<std::string, int> types;
        for (const auto& r : rays) {
            CHECK(is_coarsest(d26, r.ray));
            CHECK(coarsening_is_contraction(d26, t, r.subdivision));
            QVector m = r.ray;
            for (auto& x : m)
                x = -x;
            types[classify_ray(6, m).tag()]++;
        }
        CHECK(types["D_{2,4}"] == 6);
        CHECK(types["D_{3,3}"] == 3);

        PointConfiguration d24 = vertices({2, 4});
        for (const auto& part : std::vector<std::vector<int>>{{0, 1}, {0, 2}, {0, 3}}) {
            // a generic perturbation of a split gives a triangulation with two split rays
            QVector h = split_pseudometric(4, part).as_heights();
            h[0] += Rational(1, 7);
            Subdivision tri = regular_subdivision(d24, h);
            if (!tri.is_triangulation(3))
                h[2] += Rational(1, 5), tri = regular_subdivision(d24, h);
            REQUIRE(tri.is_triangulation(3));
            auto r = secondary_rays(d24, tri);
            CHECK(r.size() == 2);
            for (const auto& x : r)
                CHECK(x.subdivision.spread() == 2);
        }
    }

    TEST_CASE("regular triangulations and flips")
    {
        PointConfiguration d26 = vertices({2, 6});
        Subdivision t = regular_subdivision(d26, thrackle(6).as_heights());
        CHECK(is_regular_triangulation(d26, t));
        auto w = regular_heights(d26, t);
        REQUIRE(w);
        CHECK(regular_subdivision(d26, *w) == t);
        auto nb = flips(d26, t);
        CHECK(nb.size() >= 1);
        for (const auto& s : nb) {
            validate_subdivision(d26, s);
            auto back = flips(d26, s);
            CHECK(std::find(back.begin(), back.end(), t) != back.end());
        }

        std::mt19937_64 rng(2);
        PointConfiguration d25 = vertices({2, 5});
        for (int k = 0; k < 10; ++k) {
            Subdivision s = regular_subdivision(d25, oracle::random_heights(rng, 10, 1000));
            if (!s.is_triangulation(4))
                continue;
            for (const auto& x : flips(d25, s))
                CHECK(is_regular_triangulation(d25, x));
        }

        // the square has two triangulations, one flip apart
        std::vector<QVector> sq{ints({0, 0}), ints({1, 0}), ints({0, 1}), ints({1, 1})};
        PointConfiguration square{QMatrix(sq)};
        Subdivision diag(std::vector<Cell>{{0, 1, 2}, {1, 2, 3}});
        auto f = flips(square, diag);
        REQUIRE(f.size() == 1);
        CHECK(f[0] == Subdivision(std::vector<Cell>{{0, 1, 3}, {0, 2, 3}}));

        PointConfiguration d24 = vertices({2, 4});
        Subdivision oct(std::vector<Cell>{{0, 1, 2, 5}, {0, 1, 3, 5}, {0, 2, 4, 5}, {0, 3, 4, 5}});
        validate_subdivision(d24, oct);
        CHECK(flips(d24, oct).size() == 2);
    }

    TEST_CASE("a nonregular triangulation of Δ(2,6) is detected")
    {
        PointConfiguration d26 = vertices({2, 6});
        PointGroup g = metric_group(6);
        EnumerationResult r = enumerate_regular_triangulations(d26, g);
        REQUIRE(r.catalog.nonregular_neighbours > 0);
        bool found = false;
        for (const auto& rep : r.catalog.representatives) {
            for (const auto& nb : flips(d26, rep)) {
                if (!is_regular_triangulation(d26, nb)) {
                    validate_subdivision(d26, nb);
                    CHECK(cone_dim(wall_cone(d26, nb)) < 15);
                    found = true;
                    break;
                }
            }
            if (found)
                break;
        }
        CHECK(found);
    }

    TEST_CASE("GKZ vectors")
    {
        PointConfiguration d24 = vertices({2, 4});
        Subdivision oct(std::vector<Cell>{{0, 1, 2, 5}, {0, 1, 3, 5}, {0, 2, 4, 5}, {0, 3, 4, 5}});
        CHECK(gkz_vector(d24, oct) == std::vector<Integer>{4, 2, 2, 2, 2, 4});
        std::vector<QVector> pts{ints({0, 0, 0}), ints({1, 0, 0}), ints({0, 1, 0}), ints({0, 0, 1})};
        PointConfiguration simplex{QMatrix(pts)};
        CHECK(gkz_vector(simplex, all_points(4)) == std::vector<Integer>{1, 1, 1, 1});

        PointConfiguration d25 = vertices({2, 5});
        EnumerationResult r = enumerate_regular_triangulations(d25, PointGroup::trivial(10));
        std::set<std::vector<Integer>> gkz;
        for (const auto& t : r.catalog.representatives) {
            auto v = gkz_vector(d25, t);
            CHECK(std::accumulate(v.begin(), v.end(), Integer(0)) == 5 * 11);
            gkz.insert(v);
        }
        CHECK(gkz.size() == r.catalog.representatives.size());
    }

    TEST_CASE("enumeration of Δ(2,4) and Δ(2,5)")
    {
        PointConfiguration d24 = vertices({2, 4});
        EnumerationResult r = enumerate_regular_triangulations(d24, PointGroup::trivial(6));
        CHECK(r.complete);
        CHECK(r.catalog.orbits() == 3);
        CHECK(r.catalog.total() == 3);
        OrbitCatalog rays = collect_coarsest_orbits(d24, metric_group(4), r.catalog);
        CHECK(rays.orbits() == 1);
        CHECK(rays.total() == 3);

        PointConfiguration d25 = vertices({2, 5});
        PointGroup g = metric_group(5);
        EnumerationResult s = enumerate_regular_triangulations(d25, g);
        CHECK(s.catalog.orbits() == 3);
        CHECK(s.catalog.total() == 102);
        CHECK(s.catalog.nonregular_neighbours == 0);
        EnumerationResult all = enumerate_regular_triangulations(d25, PointGroup::trivial(10));
        CHECK(all.catalog.orbits() == 102);

        OrbitCatalog c = collect_coarsest_orbits(d25, g, s.catalog);
        CHECK(c.orbits() == 2);
        CHECK(c.total() == 20);
        CHECK(c.spread_histogram == std::map<std::size_t, std::size_t>{{2, 1}, {5, 1}});
        Subdivision lambda = regular_subdivision(d25, lambda_lift({2, 5}));
        CHECK(std::find(c.representatives.begin(), c.representatives.end(), g.canonical(lambda)) !=
              c.representatives.end());
    }

    TEST_CASE("random liftings hit only enumerated orbits of Δ(2,5)")
    {
        PointConfiguration d25 = vertices({2, 5});
        PointGroup g = metric_group(5);
        EnumerationResult s = enumerate_regular_triangulations(d25, g);
        std::set<Subdivision> known(s.catalog.representatives.begin(), s.catalog.representatives.end());
        std::set<Subdivision> hit;
        std::mt19937_64 rng(99);
        for (int t = 0; t < 400; ++t) {
            Subdivision tri = regular_subdivision(d25, oracle::random_heights(rng, 10, 1000));
            if (!tri.is_triangulation(4))
                continue;
            Subdivision k = g.canonical(tri);
            CHECK(known.count(k) == 1);
            hit.insert(k);
        }
        CHECK(hit.size() == known.size());
    }

    TEST_CASE("enumeration round trip and determinism across thread counts")
    {
        PointConfiguration d25 = vertices({2, 5});
        PointGroup g = metric_group(5);
        EnumerationOptions one;
        EnumerationResult base = enumerate_regular_triangulations(d25, g, one);
        for (std::size_t threads : {2u, 8u}) {
            EnumerationOptions opt;
            opt.threads = threads;
            CHECK(enumerate_regular_triangulations(d25, g, opt).catalog == base.catalog);
            CHECK(collect_coarsest_orbits(d25, g, base.catalog, threads) == collect_coarsest_orbits(d25, g, base.catalog));
        }
        for (std::size_t i = 0; i < base.catalog.representatives.size(); ++i) {
            const auto& t = base.catalog.representatives[i];
            auto w = strict_interior_point(secondary_cone(d25, t));
            REQUIRE(w);
            CHECK(regular_subdivision(d25, *w) == t);
            CHECK(regular_subdivision(d25, base.catalog.heights[i]) == t);
        }
        EnumerationOptions capped;
        capped.max_orbits = 1;
        CHECK_THROWS_AS(enumerate_regular_triangulations(d25, g, capped), ResourceLimit);
    }

    TEST_CASE("seed triangulations")
    {
        PointConfiguration d36 = vertices({3, 6});
        Subdivision s = seed_triangulation(d36, 5);
        CHECK(s.is_triangulation(d36.dim()));
        CHECK(is_regular_triangulation(d36, s));
        CHECK(seed_triangulation(d36, 5) == s);
        PointConfiguration d26 = vertices({2, 6});
        CHECK(seed_triangulation(d26) == regular_subdivision(d26, thrackle(6).as_heights()));
    }
}
