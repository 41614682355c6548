#pragma once

#include "oddcover/geom.hpp"
#include "oddcover/parity.hpp"
#include "oddcover/stripes.hpp"
#include "oddcover/weighting.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace oddcover {

// Maximal class of parallel edges. stripe_normal is the primitive integer
// normal whose integer level lines are exactly the lattice lines in this
// direction.
struct DirectionClass {
    Vec2 d;         // primitive, canonical sign
    Vec2 v_d;       // step between consecutive lattice points on a line; == d
    Vec2 stripe_normal;
    std::vector<std::size_t> edges;  // indices into the polygon's edge list
};

struct MarkerSet {
    std::size_t class_index;
    std::vector<Point2> points;  // lattice points z with z and z+v_d on an edge
};

std::vector<DirectionClass> direction_classes(const IntegerPolygon& p);
std::vector<MarkerSet> marker_sets(const IntegerPolygon& p,
                                   const std::vector<DirectionClass>& classes);

struct ActiveDirections {
    StableWeighting weighting;
    std::vector<bool> active;  // per direction class
};

// Stable-but-not-0-stable weighting for the family {-A_d}; a class is
// active when the weighting gives its marker set weight 1.
ActiveDirections active_directions(const IntegerPolygon& p,
                                   const std::vector<DirectionClass>& classes,
                                   const std::vector<MarkerSet>& markers);

// Certified representation of P (*) Z as an XOR of stripe patterns, one
// per active class, globally calibrated at a generic point.
StripeXor stripe_representation(const IntegerPolygon& p, const StableWeighting& weighting,
                                const std::vector<DirectionClass>& classes,
                                const std::vector<bool>& active);

// Odd cover of the plane by translates of a polygon. The translate set is
// {B*w + u : w integral, L(w) mod 2^k in R, u in U}; the basis B is the
// identity for the weighting pipeline and a half-edge lattice for the
// triangle construction (which carries no stripe representation).
struct OddCover {
    IntegerPolygon polygon;
    StableWeighting weighting;
    Lattice2 basis{{1, 0}, {0, 1}};
    std::vector<Vec2> u;
    std::optional<StripeXor> stripes;
    Lattice2 period;
    Rational density;
    int max_degree = 0;
    Rational bound;

    // analysis byproducts, populated by build_cover
    std::vector<DirectionClass> classes;
    std::vector<MarkerSet> markers;
    std::vector<bool> active;

    // All translate vectors z = B*w in Z whose w lies in the integer box
    // covering B^-1(box).
    std::vector<Vec2> translates_in_box(const Box& box) const;
};

OddCover build_cover(const RationalPolygon& p);

OddCover triangle_half_lattice_cover(const Point2& a, const Point2& b, const Point2& c);

struct VerifyCheck {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct VerifyReport {
    bool pass = true;
    std::vector<VerifyCheck> checks;

    void add(VerifyCheck c) {
        pass = pass && c.pass;
        checks.push_back(std::move(c));
    }
};

// Four certification layers: (a) exact cell equality of P (*) Z and the
// stripe representation over one period, (b) exact + sampled full-cover
// certificate for stripes (*) U, (c) sampled odd-degree check of the full
// cover, (d) windowed density convergence.
VerifyReport verify_cover(const OddCover& cover, std::size_t samples, std::uint64_t seed);

// Exact per-cell degrees over one period parallelogram of the cover.
// Returns (max degree, all parities odd).
std::pair<int, bool> exact_period_degrees(const OddCover& cover);

// Windowed density over the n x n origin-centered square.
Rational windowed_density(const OddCover& cover, int n);

struct CompressionResult {
    Rational ratio;
    Rational bound;
    bool pass = false;
};

CompressionResult compression_check(const RationalPolygon& p, const std::vector<Vec2>& k);
CompressionResult compression_check(const OddCover& cover, const RationalPolygon& p,
                                    const std::vector<Vec2>& k);

// Boundary-containment parity of random arrangement edges: odd exactly on
// active-direction lines. Counts are geometric (on-edge predicates), the
// expectation comes from the weighting.
VerifyCheck check_property1(const OddCover& cover, std::size_t trials, std::uint64_t seed);

}  // namespace oddcover
