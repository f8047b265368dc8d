#include "oracles.hpp"

#include "secfan/hypersimplex.hpp"
#include "secfan/json_io.hpp"
#include "secfan/metrics.hpp"

#include <doctest.h>

using namespace secfan;

TEST_SUITE("json")
{
    TEST_CASE("rationals and vectors")
    {
        CHECK(rational_json(Rational(-3, 4)) == "-3/4");
        CHECK(rational_json(Rational(5)) == "5");
        CHECK(rational_from_json(Json("6/8")) == Rational(3, 4));
        CHECK(rational_from_json(Json(7)) == 7);
        CHECK(rational_from_json(Json("0.25")) == Rational(1, 4));
        CHECK_THROWS_AS(rational_from_json(Json::array()), InvalidInput);
        QVector v{Rational(1, 3), Rational(0), Rational(-2)};
        CHECK(vector_from_json(vector_json(v)) == v);
        Json e = exact_and_decimal(Rational(1, 3));
        CHECK(e["exact"] == "1/3");
        CHECK(e["decimal"].get<std::string>().rfind("0.3333", 0) == 0);
    }

    TEST_CASE("subdivisions and configurations round trip")
    {
        PointConfiguration d26 = vertices({2, 6});
        Subdivision t = regular_subdivision(d26, thrackle(6).as_heights());
        CHECK(subdivision_from_json(cells_json(t)) == t);
        CHECK(subdivision_from_json(Json{{"cells", cells_json(t)}}) == t);
        PointConfiguration back = configuration_from_json(configuration_json(d26));
        CHECK(back.points() == d26.points());
        CHECK(back.hypersimplex() == d26.hypersimplex());
        CHECK_THROWS(subdivision_from_json(Json("nope")));
    }

    TEST_CASE("catalogs round trip")
    {
        PointConfiguration d25 = vertices({2, 5});
        PointGroup g = metric_group(5);
        EnumerationResult r = enumerate_regular_triangulations(d25, g);
        OrbitCatalog c = r.catalog;
        CHECK(catalog_from_json(catalog_json(c)) == c);
        CHECK(catalog_from_json(Json::parse(catalog_json(c).dump())) == c);
        OrbitCatalog rays = collect_coarsest_orbits(d25, g, c);
        CHECK(catalog_from_json(catalog_json(rays)) == rays);
    }
}
