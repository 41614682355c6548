#pragma once

#include "oddcover/geom.hpp"
#include "oddcover/parity.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace oddcover {

enum class Membership { In, Out, Boundary };

// Affine stripe set: x is a member iff floor(dot(normal, x) + offset) is even.
// The stripe width is 1/|normal| along the normal direction.
struct StripePattern {
    Vec2 normal;
    Rational offset;

    StripePattern complemented() const { return {normal, offset + 1}; }
};

Membership stripe_member(const StripePattern& s, const Point2& x);

bool parallel(const Vec2& a, const Vec2& b);

enum class AnnihilatorKind { Full, Halved, Killed, Other };

struct AnnihilatorResult {
    AnnihilatorKind kind;
    // Present for Halved: the stripe S xor (S+v), with doubled normal.
    std::optional<StripePattern> halved;
};

// Classify S xor (S+v) by the value of dot(normal, v):
//   +-1  -> Full (the whole plane)
//   +-1/2 -> Halved (stripe of half width, same direction)
//   0    -> Killed (empty set)
AnnihilatorResult annihilator_check(const StripePattern& s, const Vec2& v);

// XOR of stripes with pairwise distinct directions; `complemented` flips
// the result. Empty list: the empty set, or the whole plane if complemented.
struct StripeXor {
    std::vector<StripePattern> stripes;
    bool complemented = false;
};

Membership xor_eval(const StripeXor& t, const Point2& x);

// A stripe together with its finite translate multiset Z_i.
struct WeightedStripeTerm {
    StripePattern stripe;
    std::vector<Vec2> offsets;
};

// Mod-2 multiset product with {0, v}: duplicates cancel in pairs.
std::vector<Vec2> xor_translate_set(const std::vector<Vec2>& zs, const Vec2& v);

// The set U of the stripe-recursion: (XOR_i S_i (*) Z_i) (*) U covers the
// plane up to measure zero. Requires pairwise distinct directions and
// terms[0].offsets == {0}. |U| = 2^(k-1) for k >= 2, and 2 for k = 1.
std::vector<Vec2> stripes2_translates(const std::vector<WeightedStripeTerm>& terms);

Membership weighted_xor_eval(const std::vector<WeightedStripeTerm>& terms, const Point2& x);

// Membership of x in (XOR_i S_i (*) Z_i) (*) U.
Membership covered_eval(const std::vector<WeightedStripeTerm>& terms, const std::vector<Vec2>& u,
                        const Point2& x);

struct CoverCheckReport {
    bool pass = true;
    std::size_t samples_checked = 0;
    std::size_t cells_checked = 0;
    std::optional<Point2> counterexample;
    std::string detail;
};

// Randomized certificate: `samples` generic points (boundary hits are
// resampled) must all be covered.
CoverCheckReport check_full_cover(const std::vector<WeightedStripeTerm>& terms,
                                  const std::vector<Vec2>& u, std::size_t samples,
                                  std::uint64_t seed);

// Exact certificate: decompose one full period of the configuration into
// cells bounded by all stripe boundary lines and check every cell interior.
CoverCheckReport check_full_cover_cells(const std::vector<WeightedStripeTerm>& terms,
                                        const std::vector<Vec2>& u);

std::string format_stripes(const std::vector<StripePattern>& stripes);
std::string format_vectors(const std::vector<Vec2>& vs);

}  // namespace oddcover
