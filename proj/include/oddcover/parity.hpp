#pragma once

#include "oddcover/geom.hpp"

#include <functional>
#include <vector>

namespace oddcover {

struct Box {
    Rational xmin, xmax, ymin, ymax;

    bool valid() const { return xmin < xmax && ymin < ymax; }
    Rational area() const { return (xmax - xmin) * (ymax - ymin); }
    bool contains(const Point2& p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
};

struct Segment {
    Point2 a, b;
};

// Convex cell produced by the vertical (trapezoidal) decomposition.
struct ConvexCell {
    std::vector<Point2> vertices;  // CCW, 3 or 4 of them
    Point2 centroid;
    Rational area;
};

// Decompose `window` into trapezoids whose interiors meet no input
// segment. Cells tile the window exactly; zero-area slivers are dropped.
std::vector<ConvexCell> slab_decompose(const std::vector<Segment>& segments, const Box& window);

// Streaming variant: cells are handed to `sink` as they are produced, so
// large decompositions never need to be materialized.
void slab_decompose_stream(const std::vector<Segment>& segments, const Box& window,
                           const std::function<void(const ConvexCell&)>& sink);

struct TranslateFamily {
    RationalPolygon base;
    std::vector<Vec2> offsets;  // multiset
};

struct ParityCell {
    ConvexCell cell;
    int degree = 0;
    int parity = 0;
};

struct ParityRegion {
    std::vector<ParityCell> cells;
    Box window;

    Rational odd_area() const;
    int max_degree() const;
};

// Partition `window` into cells of constant cover parity/degree for the
// given family of translates.
ParityRegion subdivide(const TranslateFamily& family, const Box& window);

// Streaming exact-degree decomposition. Degrees are propagated from cell
// to cell across shared boundaries using the CCW edge orientations, so
// the cost per cell is O(1); the first and last cells are counted by
// exact point-in-polygon queries to seed and re-verify the propagation.
void degree_decompose(const TranslateFamily& family, const Box& window,
                      const std::function<void(const ConvexCell&, int degree)>& sink);

struct ParityAtPoint {
    bool boundary = false;
    int degree = 0;
    int parity = 0;
};

ParityAtPoint parity_at_point(const TranslateFamily& family, const Point2& x);

// Exact area of the mod-2 union of {P + k}_{k in K}.
Rational odd_area(const RationalPolygon& p, const std::vector<Vec2>& k);

// Independent oracle: A(XOR of translates) = sum over nonempty subsets S
// of (-2)^{|S|-1} * A(intersection). Convex polygons only, |K| <= 12.
Rational odd_area_incl_excl(const RationalPolygon& p, const std::vector<Vec2>& k);

// Clip a vertex cycle against the half-plane dot(n, x) <= c.
// Signed area of the result is exact for any simple subject.
std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, const Vec2& n,
                                   const Rational& c);

// Exact area of P intersected with an axis-aligned box.
Rational clipped_area(const RationalPolygon& p, const Box& box);

Rational cycle_area(const std::vector<Point2>& cycle);

std::string format_parity_region(const ParityRegion& region);

}  // namespace oddcover
