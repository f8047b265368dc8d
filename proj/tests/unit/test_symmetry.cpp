#include "oracles.hpp"

#include "secfan/hypersimplex.hpp"
#include "secfan/metrics.hpp"
#include "secfan/symmetry.hpp"

#include <doctest.h>

#include <numeric>

using namespace secfan;

TEST_SUITE("symmetry")
{
    TEST_CASE("induced vertex permutations on Δ(2,4)")
    {
        HypersimplexSpec spec{2, 4};
        CHECK(induced_vertex_permutation({0, 1, 2, 3}, spec) == Permutation{0, 1, 2, 3, 4, 5});
        // swapping the first two coordinates: 1100 and 0011 fixed, 1010<->0110, 1001<->0101
        CHECK(induced_vertex_permutation({1, 0, 2, 3}, spec) == Permutation{0, 3, 4, 1, 2, 5});
        CHECK(complement_vertex_permutation(spec) == Permutation{5, 4, 3, 2, 1, 0});
        CHECK_THROWS_AS(complement_vertex_permutation({2, 5}), InvalidInput);
    }

    TEST_CASE("group specifications")
    {
        GroupSpec g = GroupSpec::parse("(0 1)(2 3),(0 1 2)");
        CHECK(g.kind == "generators");
        REQUIRE(g.generators.size() == 2);
        CHECK(g.generators[0] == Permutation{1, 0, 3, 2});
        CHECK(GroupSpec::parse("sym_x2").complement);
        CHECK(GroupSpec::parse("trivial").kind == "trivial");
        CHECK_THROWS_AS(GroupSpec::parse("(0 0)"), InvalidInput);
        CHECK_THROWS_AS(GroupSpec::parse("bogus"), InvalidInput);

        CHECK(PointGroup::for_hypersimplex({2, 5}, GroupSpec::parse("sym")).order() == 120);
        CHECK(PointGroup::for_hypersimplex({3, 6}, default_group({3, 6})).order() == 1440);
        CHECK(PointGroup::for_hypersimplex({2, 4}, GroupSpec::parse("(0 1),(0 1 2 3)")).order() == 24);
        CHECK(PointGroup::for_hypersimplex({2, 5}, GroupSpec::parse("trivial")).order() == 1);
        CHECK(generate_group({{1, 2, 0}}, 3).size() == 3);
    }

    TEST_CASE("canonical forms of splits and λ")
    {
        PointConfiguration d24 = vertices({2, 4});
        PointGroup g24 = PointGroup::for_hypersimplex({2, 4}, GroupSpec::parse("sym"));
        Subdivision s12 = regular_subdivision(d24, split_pseudometric(4, {0, 1}).as_heights());
        Subdivision s13 = regular_subdivision(d24, split_pseudometric(4, {0, 2}).as_heights());
        CHECK(s12 != s13);
        CHECK(g24.canonical(s12) == g24.canonical(s13));
        CHECK(g24.orbit_size(s12) == 3);
        Subdivision trivial(std::vector<Cell>{{0, 1, 2, 3, 4, 5}});
        CHECK(g24.orbit_size(trivial) == 1);

        PointConfiguration d25 = vertices({2, 5});
        PointGroup g25 = metric_group(5);
        Subdivision lambda = regular_subdivision(d25, lambda_lift({2, 5}));
        CHECK(g25.orbit_size(lambda) == 10);
        for (const auto& g : g25.elements())
            CHECK(g25.canonical(g25.apply(g, lambda)) == g25.canonical(lambda));
    }

    TEST_CASE("the non-split rays of Σ(2,5) form one orbit")
    {
        PointConfiguration d25 = vertices({2, 5});
        PointGroup g25 = metric_group(5);
        std::set<Subdivision> all_rays;
        std::mt19937_64 rng(9);
        for (int t = 0; t < 300; ++t) {
            Subdivision tri = regular_subdivision(d25, oracle::random_heights(rng, d25.size(), 50));
            if (!tri.is_triangulation(d25.dim()))
                continue;
            for (const auto& r : secondary_rays(d25, tri))
                all_rays.insert(r.subdivision);
        }
        std::set<Subdivision> nonsplit_forms;
        std::size_t nonsplit = 0;
        for (const auto& s : all_rays)
            if (s.spread() != 2) {
                ++nonsplit;
                nonsplit_forms.insert(g25.canonical(s));
            }
        CHECK(nonsplit == 10);
        CHECK(nonsplit_forms.size() == 1);
    }

    TEST_CASE("the action commutes with regular subdivisions")
    {
        std::mt19937_64 rng(21);
        for (auto spec : {HypersimplexSpec{2, 5}, HypersimplexSpec{3, 6}}) {
            PointConfiguration c = vertices(spec);
            PointGroup g = PointGroup::for_hypersimplex(spec, default_group(spec));
            std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
            for (int t = 0; t < 25; ++t) {
                QVector w = oracle::random_heights(rng, c.size(), 3);
                const Permutation& p = g.elements()[pick(rng)];
                CHECK(regular_subdivision(c, g.apply(p, w)) == g.apply(p, regular_subdivision(c, w)));
            }
        }
    }

    TEST_CASE("canonicalization is constant on orbits and idempotent")
    {
        std::mt19937_64 rng(4);
        PointConfiguration c = vertices({2, 6});
        PointGroup g = metric_group(6);
        RowSpace lin = affine_lineality(c);
        std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
        for (int t = 0; t < 500; ++t) {
            const Permutation& p = g.elements()[pick(rng)];
            if (t % 2 == 0) {
                Subdivision s = regular_subdivision(c, oracle::random_heights(rng, c.size(), 2));
                Subdivision k = g.canonical(s);
                CHECK(g.canonical(g.apply(p, s)) == k);
                CHECK(g.canonical(k) == k);
            }
            else {
                QVector v = oracle::random_heights(rng, c.size(), 3);
                QVector k = g.canonical(v, &lin);
                CHECK(g.canonical(g.apply(p, v), &lin) == k);
                CHECK(g.canonical(k, &lin) == k);
            }
        }
    }

    TEST_CASE("orbit-stabilizer bookkeeping")
    {
        PointConfiguration c = vertices({2, 5});
        PointGroup g = metric_group(5);
        Subdivision s = regular_subdivision(c, thrackle(5).as_heights());
        CHECK(g.orbit_size(s) * Integer(g.stabilizer_size(s)) == Integer(g.order()));
        std::set<Subdivision> images;
        for (const auto& p : g.elements())
            images.insert(g.apply(p, s));
        CHECK(Integer(images.size()) == g.orbit_size(s));
    }
}
