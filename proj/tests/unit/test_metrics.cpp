#include "oracles.hpp"

#include "secfan/hypersimplex.hpp"
#include "secfan/metrics.hpp"

#include <doctest.h>

#include <cmath>

using namespace secfan;

namespace {

QVector ints(std::initializer_list<long> v)
{
    QVector out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

QVector negated(QVector v)
{
    for (auto& x : v)
        x = -x;
    return v;
}

QVector bee_metric()
{
    return read_metric_file(std::string(SECFAN_TEST_DATA) + "/bees.dist").map.values();
}

/** Tabulated rays of the bee secondary cone: s1..s5, r1 and their indices. */
const std::vector<std::pair<QVector, double>>& bee_rows()
{
    static const std::vector<std::pair<QVector, double>> rows{
        {ints({1, 1, 1, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1}), 0.03175776},
        {ints({1, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 0}), 0.00886262},
        {ints({1, 0, 1, 0, 0, 1, 0, 1, 1, 1, 0, 0, 1, 1, 0}), 0.00664697},
        {ints({0, 1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1}), 0.00147710},
        {ints({1, 1, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 0}), 0.00516987},
        {ints({1, 2, 2, 0, 1, 1, 1, 1, 2, 2, 2, 1, 2, 1, 1}), 0.00369276},
    };
    return rows;
}

}  // namespace

TEST_SUITE("metrics")
{
    TEST_CASE("distance matrix layouts")
    {
        QVector expected = ints({1, 2, 3, 4, 5, 6});
        CHECK(parse_metric("0 1 2 3\n1 0 4 5\n2 4 0 6\n3 5 6 0\n").map.values() == expected);
        CHECK(parse_metric("0 1 2 3\n0 4 5\n0 6\n0\n").map.values() == expected);
        CHECK(parse_metric("1 2 3\n4 5\n6\n").map.values() == expected);
        CHECK(parse_metric("0\n1 0\n2 4 0\n3 5 6 0\n").map.values() == expected);
        CHECK(parse_metric("# comment\n1\n2 4\n3 5 6\n").map.values() == expected);
        ParsedMetric phylip = parse_metric("4\na 0 1 2 3\nb 1 0 4 5\nc 2 4 0 6\nd 3 5 6 0\n");
        CHECK(phylip.map.values() == expected);
        CHECK(phylip.taxa == std::vector<std::string>{"a", "b", "c", "d"});
        ParsedMetric named = parse_metric("w x y z\n0 1 2 3\n1 0 4 5\n2 4 0 6\n3 5 6 0\n");
        CHECK(named.taxa.size() == 4);
        CHECK(named.map.values() == expected);
        CHECK(parse_metric("0 0.5\n0.5 0\n").map.values() == QVector{Rational(1, 2)});

        CHECK_THROWS_AS(parse_metric("0 1\n2 0\n"), InvalidInput);
        CHECK_THROWS_AS(parse_metric("0 x\nx 0\n"), InvalidInput);
        CHECK_THROWS_AS(parse_metric(""), InvalidInput);
        CHECK_THROWS_AS(read_metric_file("/nonexistent/file.dist"), InvalidInput);

        QVector bees = bee_metric();
        REQUIRE(bees.size() == 15);
        CHECK(bees[0] == Rational(450517, 5000000));
        CHECK(bees[3] == Rational(443131, 100000000));
    }

    TEST_CASE("pseudo-metric predicates")
    {
        CHECK(is_metric(thrackle(5)));
        CHECK(is_pseudometric(split_pseudometric(5, {0, 1})));
        CHECK_FALSE(is_metric(split_pseudometric(5, {0, 1})));
        CHECK_FALSE(is_pseudometric(DissimilarityMap(3, ints({1, 1, 3}))));
        CHECK_FALSE(is_pseudometric(DissimilarityMap(3, ints({-1, 1, 1}))));
        CHECK(is_metric(DissimilarityMap(4, ints({1, 1, 1, 1, 1, 1}))));
        CHECK(is_metric(DissimilarityMap(6, bee_metric())));
    }

    TEST_CASE("metric cone rays")
    {
        // oracle: every ray satisfies the triangle inequalities and is tight on
        // dimension-many independent ones
        for (int n = 4; n <= 5; ++n) {
            HCone mc = metric_cone(n);
            VCone v = dd_rays(mc);
            for (const auto& r : v.rays) {
                std::vector<QVector> tight;
                for (const auto& a : mc.inequalities) {
                    CHECK(dot(a, r) >= 0);
                    if (dot(a, r) == 0)
                        tight.push_back(a);
                }
                CHECK(rank(QMatrix(tight)) == pair_count(n) - 1);
            }
        }
        MetricRays m4 = metric_cone_rays(4);
        CHECK(m4.cone.rays.size() == 7);
        CHECK(m4.orbits.size() == 2);
        MetricRays m5 = metric_cone_rays(5);
        CHECK(m5.cone.rays.size() == 25);
        CHECK(m5.orbits.size() == 3);
        int nonsplit = 0;
        for (const auto& o : m5.orbits)
            if (!o.type.is_split) {
                ++nonsplit;
                CHECK(o.size == 10);
                CHECK(o.type.spread == 5);
                // the non-split ray of MC(5) induces the same subdivision as λ
                PointConfiguration d25 = metric_configuration(5);
                PointGroup g = metric_group(5);
                CHECK(g.canonical(regular_subdivision(d25, negated(o.representative))) ==
                      g.canonical(regular_subdivision(d25, lambda_lift({2, 5}))));
            }
        CHECK(nonsplit == 1);
        MetricRays m6 = metric_cone_rays(6);
        CHECK(m6.cone.rays.size() == 296);
        CHECK(m6.orbits.size() == 8);
        Integer total = 0;
        for (const auto& o : m6.orbits)
            total += o.size;
        CHECK(total == 296);
        CHECK_THROWS_AS(metric_cone_rays(7), ResourceLimit);
    }

    TEST_CASE("ray classification")
    {
        RayType s = classify_ray(4, split_pseudometric(4, {0, 1}).values());
        CHECK(s.is_split);
        CHECK(s.split == std::pair<int, int>{2, 2});
        CHECK(s.tag() == "D_{2,2}");
        RayType star = classify_ray(4, split_pseudometric(4, {2}).values());
        CHECK(star.split == std::pair<int, int>{1, 3});
        // a split plus a star split is still the split modulo lineality
        QVector shifted = split_pseudometric(5, {0, 1}).values();
        QVector st = split_pseudometric(5, {3}).values();
        for (std::size_t i = 0; i < shifted.size(); ++i)
            shifted[i] += 3 * st[i];
        CHECK(classify_ray(5, shifted).split == std::pair<int, int>{2, 3});

        CHECK(classify_ray(6, bee_rows()[4].first).tag() == "D_{3,3}");
        for (int i = 0; i < 4; ++i)
            CHECK(classify_ray(6, bee_rows()[static_cast<std::size_t>(i)].first).tag() == "D_{2,4}");
        RayType r1 = classify_ray(6, bee_rows()[5].first);
        CHECK_FALSE(r1.is_split);
        CHECK(r1.spread == 5);
    }

    TEST_CASE("coherency index")
    {
        PointConfiguration d25 = metric_configuration(5);
        std::mt19937_64 rng(17);
        for (int t = 0; t < 20; ++t) {
            QVector w = oracle::random_heights(rng, 10, 20);
            if (regular_subdivision(d25, w).spread() < 2)
                continue;
            auto self = coherency_index(d25, w, w);
            REQUIRE(self);
            CHECK(*self == 1);
            // index(ω, c ω') = index(ω, ω') / c
            QVector other = oracle::random_heights(rng, 10, 20);
            if (regular_subdivision(d25, other).spread() < 2)
                continue;
            auto a = coherency_index(d25, w, other);
            QVector scaled = other;
            for (auto& x : scaled)
                x *= 3;
            auto b = coherency_index(d25, w, scaled);
            REQUIRE(a);
            REQUIRE(b);
            CHECK(*b * 3 == *a);
        }
        CHECK_FALSE(coherency_index(d25, thrackle(5).as_heights(), QVector(10)));
    }

    TEST_CASE("split decomposition")
    {
        PointConfiguration d26 = metric_configuration(6);
        // a split is its own decomposition
        QVector s = split_pseudometric(6, {0, 1, 2}).as_heights();
        SplitDecomposition d = split_decompose(d26, s);
        REQUIRE(d.terms.size() == 1);
        CHECK(d.terms[0].coefficient == 1);
        CHECK(d.coherent);

        // the thrackle is totally split-decomposable
        SplitDecomposition t = split_decompose(d26, thrackle(6).as_heights());
        CHECK(t.coherent);
        CHECK(t.prime_is_split_prime);
        CHECK(regular_subdivision(d26, t.prime_part).spread() == 1);

        // reconstruction on random metrics
        std::mt19937_64 rng(5);
        for (int k = 0; k < 10; ++k) {
            QVector m = oracle::random_heights(rng, 15, 5);
            for (auto& x : m)
                x = abs(x) + 10;
            QVector w = negated(m);
            SplitDecomposition r = split_decompose(d26, w);
            QVector sum = r.prime_part;
            for (const auto& term : r.terms)
                for (std::size_t i = 0; i < sum.size(); ++i)
                    sum[i] += term.coefficient * term.split.heights[i];
            CHECK(sum == w);
            CHECK(r.coherent);
            CHECK(r.prime_is_split_prime);
            for (const auto& term : r.terms)
                CHECK(term.coefficient > 0);
        }
    }

    TEST_CASE("bee split decomposition")
    {
        PointConfiguration d26 = metric_configuration(6);
        QVector beta = bee_metric();
        SplitDecomposition d = split_decompose(d26, negated(beta));
        CHECK(d.coherent);
        QVector prime = DissimilarityMap::from_heights(6, d.prime_part).values();
        std::vector<std::string> printed{"0.0376662", "0.0561300", "0.0524372", "0.0044313", "0.0420975",
                                         "0.0849335", "0.0812408", "0.0406204", "0.0782866", "0.0997046",
                                         "0.0590842", "0.0893648", "0.0553914", "0.0856721", "0.0450517"};
        REQUIRE(prime.size() == 15);
        for (std::size_t i = 0; i < 15; ++i)
            CHECK(to_decimal(prime[i], 7) == printed[i]);

        // indices of the tabulated rays with respect to -β
        for (const auto& [ray, value] : bee_rows()) {
            auto idx = coherency_index(d26, negated(beta), negated(ray));
            REQUIRE(idx);
            CHECK(std::abs(idx->get_d() - value) < 1e-6);
        }
    }

    TEST_CASE("tabulated rays are reproduced by the representative rule")
    {
        PointConfiguration d26 = metric_configuration(6);
        Subdivision s = regular_subdivision(d26, negated(bee_metric()));
        std::set<QVector> reps;
        for (const auto& r : secondary_rays_of_subdivision(d26, s))
            reps.insert(metric_representative(6, r.ray));
        for (const auto& row : bee_rows())
            CHECK(reps.count(row.first) == 1);
        // splits are returned as themselves
        CHECK(metric_representative(6, split_pseudometric(6, {0, 3}).as_heights()) ==
              split_pseudometric(6, {0, 3}).values());
    }

    TEST_CASE("secondary metric cones")
    {
        // thrackle: 15 rays, the 6 star splits, 6 of type (2,4) and 3 of type (3,3)
        HCone mc = secondary_metric_cone(thrackle(6));
        VCone v = dd_rays(mc);
        CHECK(v.rays.size() == 15);
        std::map<std::string, int> types;
        for (const auto& r : v.rays)
            types[classify_ray(6, r).tag()]++;
        CHECK(types["D_{1,5}"] == 6);
        CHECK(types["D_{2,4}"] == 6);
        CHECK(types["D_{3,3}"] == 3);

        // dimension of MC(δ) equals the dimension of the secondary cone
        std::mt19937_64 rng(12);
        PointConfiguration d25 = metric_configuration(5);
        for (int t = 0; t < 10; ++t) {
            QVector m = oracle::random_heights(rng, 10, 4);
            for (auto& x : m)
                x = abs(x) + 10;
            DissimilarityMap delta(5, m);
            CHECK(cone_dim(secondary_metric_cone(delta)) == secondary_cone_dim(d25, regular_subdivision(d25, delta.as_heights())));
        }

        // a star split induces the trivial subdivision: only the star splits remain
        VCone star = dd_rays(secondary_metric_cone(split_pseudometric(5, {0})));
        CHECK(star.rays.size() == 5);
        for (const auto& r : star.rays)
            CHECK(classify_ray(5, r).tag() == "D_{1,4}");
    }

    TEST_CASE("metric fans")
    {
        for (int n = 4; n <= 5; ++n) {
            PointConfiguration c = metric_configuration(n);
            PointGroup g = metric_group(n);
            EnumerationResult r = enumerate_regular_triangulations(c, g);
            OrbitCatalog sigma = collect_coarsest_orbits(c, g, r.catalog);
            auto fan = metric_fan_rays(n, sigma);
            CHECK(fan.size() == static_cast<std::size_t>(n == 4 ? 2 : 3));
            CHECK(orbits_missing_from(metric_cone_rays(n).orbits, fan).empty());
        }
    }

    TEST_CASE("cone membership")
    {
        HCone mc = metric_cone(4);
        CHECK(cone_contains(mc, thrackle(4).values()));
        CHECK_FALSE(cone_contains(mc, ints({1, 1, 3, 1, 1, 1})));
    }
}
