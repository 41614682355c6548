#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oddcover/geom.hpp"

#include <stdexcept>

using namespace oddcover;

static RationalPolygon unit_square() {
    return RationalPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

TEST_CASE("polygon construction merges collinear vertices") {
    RationalPolygon p({{0, 0}, {Rational(1, 2), 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(p.size() == 4);
    CHECK(p[1] == Point2{1, 0});
}

TEST_CASE("polygon construction rejects bad input") {
    CHECK_THROWS_AS(RationalPolygon({{0, 0}, {1, 0}}), std::invalid_argument);
    // repeated vertex
    CHECK_THROWS_AS(RationalPolygon({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), std::invalid_argument);
    // bowtie
    CHECK_THROWS_AS(RationalPolygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}), std::invalid_argument);
    // spike
    CHECK_THROWS_AS(RationalPolygon({{0, 0}, {2, 0}, {1, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("area and orientation") {
    CHECK(polygon_area(unit_square()) == 1);
    // clockwise input is reoriented counterclockwise
    RationalPolygon cw({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(polygon_area(cw) == 1);
    CHECK(cross(cw[1] - cw[0], cw[2] - cw[1]) > 0);
    RationalPolygon t({{0, 0}, {1, 0}, {0, 1}});
    CHECK(polygon_area(t) == Rational(1, 2));
    CHECK(t.is_convex());
    RationalPolygon l({{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 4}, {0, 4}});
    CHECK(!l.is_convex());
    CHECK(polygon_area(l) == 6);
}

TEST_CASE("point location") {
    RationalPolygon l({{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 4}, {0, 4}});
    CHECK(point_in_polygon(l, {Rational(1, 2), 2}) == PointLocation::Interior);
    CHECK(point_in_polygon(l, {2, Rational(1, 2)}) == PointLocation::Interior);
    CHECK(point_in_polygon(l, {2, 2}) == PointLocation::Exterior);
    CHECK(point_in_polygon(l, {1, 1}) == PointLocation::Boundary);
    CHECK(point_in_polygon(l, {1, 2}) == PointLocation::Boundary);
    CHECK(point_in_polygon(l, {2, 1}) == PointLocation::Boundary);
    CHECK(point_in_polygon(l, {-1, 2}) == PointLocation::Exterior);
    // ray through a vertex
    CHECK(point_in_polygon(l, {Rational(-1, 7), 1}) == PointLocation::Exterior);
}

TEST_CASE("point_on_segment") {
    CHECK(point_on_segment({0, 0}, {2, 2}, {1, 1}));
    CHECK(point_on_segment({0, 0}, {2, 2}, {0, 0}));
    CHECK(!point_on_segment({0, 0}, {2, 2}, {3, 3}));
    CHECK(!point_on_segment({0, 0}, {2, 2}, {1, Rational(3, 2)}));
}

TEST_CASE("lattice points on segments") {
    auto pts = lattice_points_on_segment({0, 0}, {3, 0});
    REQUIRE(pts.size() == 4);
    CHECK(pts.front() == Point2{0, 0});
    CHECK(pts.back() == Point2{3, 0});

    pts = lattice_points_on_segment({0, 0}, {4, 6});
    REQUIRE(pts.size() == 3);  // gcd(4,6)=2, plus endpoint
    CHECK(pts[1] == Point2{2, 3});

    // rational endpoints, one interior lattice point
    pts = lattice_points_on_segment({Rational(-1, 2), 1}, {Rational(3, 2), 1});
    REQUIRE(pts.size() == 2);
    CHECK(pts[0] == Point2{0, 1});
    CHECK(pts[1] == Point2{1, 1});

    CHECK(lattice_points_on_segment({Rational(1, 3), 0}, {Rational(2, 3), 0}).empty());
}

TEST_CASE("primitive_direction canonical sign") {
    CHECK(primitive_direction({4, 6}) == Vec2{2, 3});
    CHECK(primitive_direction({-4, -6}) == Vec2{2, 3});
    CHECK(primitive_direction({0, -5}) == Vec2{0, 1});
    CHECK(primitive_direction({-3, 5}) == Vec2{3, -5});
}

TEST_CASE("normalize_polygon clears denominators and halves") {
    // L-shape with halves: scale 2 after translation
    RationalPolygon l({{0, 0},
                       {Rational(3, 2), 0},
                       {Rational(3, 2), Rational(1, 2)},
                       {Rational(1, 2), Rational(1, 2)},
                       {Rational(1, 2), 2},
                       {0, 2}});
    IntegerPolygon ip = normalize_polygon(l);
    CHECK(ip.polygon.is_integral());
    CHECK(ip.map.scale == 2);
    CHECK(ip.polygon[0] == Point2{0, 0});
    CHECK(polygon_area(ip.polygon) == 4 * polygon_area(l));

    // all-even integer polygon gets halved until some coordinate is odd
    RationalPolygon big({{0, 0}, {4, 0}, {0, 4}});
    IntegerPolygon ib = normalize_polygon(big);
    CHECK(polygon_area(ib.polygon) == Rational(1, 2));
    CHECK(ib.map.scale == Rational(1, 4));

    // round trip through the recorded map
    for (std::size_t i = 0; i < l.size(); ++i)
        CHECK(ip.map.inverse(ip.map.apply(l[i])) == l[i]);
}

TEST_CASE("normalize_polygon anchors the smallest vertex at the origin") {
    RationalPolygon t({{5, 7}, {6, 7}, {5, 8}});
    IntegerPolygon it = normalize_polygon(t);
    CHECK(it.polygon[0] == Point2{0, 0});
    CHECK(polygon_area(it.polygon) == Rational(1, 2));
}

TEST_CASE("polygon text round trip") {
    RationalPolygon p({{0, 0}, {Rational(3, 2), Rational(-1, 3)}, {1, 2}});
    RationalPolygon q = parse_polygon_text(format_polygon_text(p));
    REQUIRE(q.size() == p.size());
    for (std::size_t i = 0; i < p.size(); ++i) CHECK(q[i] == p[i]);

    CHECK_THROWS(parse_polygon_text("0 0\n1\n"));
    CHECK_THROWS(parse_polygon_text("not a number\n"));
    // comments and blank lines are fine
    RationalPolygon c = parse_polygon_text("# tri\n0 0\n\n1 0  # corner\n0 1\n");
    CHECK(c.size() == 3);
}

TEST_CASE("rational parse/format") {
    CHECK(to_string(Rational(-3, 6)) == "-1/2");
    CHECK(to_string(Rational(4)) == "4");
    CHECK(parse_rational("22/7") == Rational(22, 7));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}
