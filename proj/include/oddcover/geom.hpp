#pragma once

#include "oddcover/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace oddcover {

struct Vec2 {
    Rational x, y;

    Vec2() = default;
    Vec2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(const Rational& s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    // lexicographic, used for canonical orderings
    bool operator<(const Vec2& o) const { return x != o.x ? x < o.x : y < o.y; }

    bool is_zero() const { return x == 0 && y == 0; }
    bool is_integral() const { return is_integer(x) && is_integer(y); }
};

using Point2 = Vec2;

inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

std::string to_string(const Vec2& v);

enum class PointLocation { Interior, Boundary, Exterior };

// Simple polygon with exact rational vertices, counterclockwise.
// Construction merges collinear consecutive vertices and rejects
// everything else that breaks the invariants (self-intersection,
// repeated vertices, spikes, fewer than 3 vertices after merging).
class RationalPolygon {
  public:
    // empty placeholder; every operation requires a constructed polygon
    RationalPolygon() = default;

    explicit RationalPolygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Point2& operator[](std::size_t i) const { return verts_[i]; }

    RationalPolygon translated(const Vec2& z) const;
    bool is_convex() const;
    bool is_integral() const;

    void bounding_box(Rational& xmin, Rational& xmax, Rational& ymin, Rational& ymax) const;

  private:
    std::vector<Point2> verts_;
};

Rational polygon_area(const RationalPolygon& p);

PointLocation point_in_polygon(const RationalPolygon& p, const Point2& q);

bool point_on_segment(const Point2& a, const Point2& b, const Point2& q);

// All integer lattice points on the closed segment [a,b], ordered from a to b.
std::vector<Point2> lattice_points_on_segment(const Point2& a, const Point2& b);

// v / gcd with canonical sign: first nonzero coordinate positive.
// Requires v integral and nonzero.
Vec2 primitive_direction(const Vec2& v);

// Composed translate+scale map recorded by normalize_polygon:
// q = scale * (p - origin).
struct AffineRecord {
    Point2 origin;
    Rational scale{1};

    Point2 apply(const Point2& p) const { return (p - origin) * scale; }
    Point2 inverse(const Point2& q) const { return Point2{q.x / scale, q.y / scale} + origin; }
};

struct IntegerPolygon {
    RationalPolygon polygon;
    bool normalized = false;
    AffineRecord map;
};

// Translate the lexicographically smallest vertex to the origin, clear
// denominators, then halve while all vertices are even. The result has
// integer vertices not all congruent to (0,0) mod 2.
IntegerPolygon normalize_polygon(const RationalPolygon& p);

struct Lattice2 {
    Vec2 g1, g2;

    Rational det() const { return cross(g1, g2); }
};

// --- polygon text format ---------------------------------------------------
// One vertex per line, "x y" with rational coordinates; '#' starts a comment.

RationalPolygon parse_polygon_text(const std::string& text);
RationalPolygon load_polygon_file(const std::string& path);
std::string format_polygon_text(const RationalPolygon& p);

}  // namespace oddcover
