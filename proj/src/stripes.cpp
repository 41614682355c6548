#include "oddcover/stripes.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace oddcover {

Membership stripe_member(const StripePattern& s, const Point2& x) {
    Rational t = dot(s.normal, x) + s.offset;
    if (is_integer(t)) return Membership::Boundary;
    return rfloor(t) % 2 == 0 ? Membership::In : Membership::Out;
}

bool parallel(const Vec2& a, const Vec2& b) { return cross(a, b) == 0; }

AnnihilatorResult annihilator_check(const StripePattern& s, const Vec2& v) {
    Rational c = dot(s.normal, v);
    if (c == 1 || c == -1) return {AnnihilatorKind::Full, std::nullopt};
    if (c == 0) return {AnnihilatorKind::Killed, std::nullopt};
    if (c == Rational(1, 2))
        return {AnnihilatorKind::Halved, StripePattern{s.normal * 2, s.offset * 2}};
    if (c == Rational(-1, 2))
        return {AnnihilatorKind::Halved, StripePattern{s.normal * 2, s.offset * 2 + 1}};
    return {AnnihilatorKind::Other, std::nullopt};
}

Membership xor_eval(const StripeXor& t, const Point2& x) {
    int acc = t.complemented ? 1 : 0;
    for (const auto& s : t.stripes) {
        Membership m = stripe_member(s, x);
        if (m == Membership::Boundary) return Membership::Boundary;
        if (m == Membership::In) acc ^= 1;
    }
    return acc ? Membership::In : Membership::Out;
}

std::vector<Vec2> xor_translate_set(const std::vector<Vec2>& zs, const Vec2& v) {
    std::vector<Vec2> all;
    all.reserve(zs.size() * 2);
    for (const auto& z : zs) {
        all.push_back(z);
        all.push_back(z + v);
    }
    std::sort(all.begin(), all.end());
    std::vector<Vec2> out;
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i]) ++j;
        if ((j - i) % 2) out.push_back(all[i]);
        i = j;
    }
    return out;
}

namespace {

// Solve na.v = ra, nb.v = rb.
Vec2 solve2(const Vec2& na, const Rational& ra, const Vec2& nb, const Rational& rb) {
    Rational det = na.x * nb.y - na.y * nb.x;
    if (det == 0) throw std::invalid_argument("solve2: parallel normals");
    return {(ra * nb.y - rb * na.y) / det, (na.x * rb - nb.x * ra) / det};
}

void validate_terms(const std::vector<WeightedStripeTerm>& terms) {
    if (terms.empty()) throw std::invalid_argument("stripe terms: empty");
    for (const auto& t : terms) {
        if (t.stripe.normal.is_zero()) throw std::invalid_argument("stripe terms: zero normal");
        if (t.offsets.empty()) throw std::invalid_argument("stripe terms: empty offset set");
    }
    for (std::size_t i = 0; i < terms.size(); ++i)
        for (std::size_t j = i + 1; j < terms.size(); ++j)
            if (parallel(terms[i].stripe.normal, terms[j].stripe.normal))
                throw std::invalid_argument("stripe terms: parallel directions");
}

std::vector<Vec2> stripes2_rec(std::vector<WeightedStripeTerm> terms) {
    const std::size_t k = terms.size();
    const Vec2& n1 = terms.front().stripe.normal;

    if (k == 1) {
        // U = {0, v} with n1.v = 1.
        Vec2 v{n1.x / dot(n1, n1), n1.y / dot(n1, n1)};
        return {Vec2{0, 0}, v};
    }
    if (k == 2) {
        // v2 kills the second term regardless of its weights and fills S1.
        Vec2 v2 = solve2(n1, 1, terms[1].stripe.normal, 0);
        return {Vec2{0, 0}, v2};
    }

    // Fold term k into term 1: v_k fills S_k and halves S_1.
    WeightedStripeTerm& last = terms.back();
    Vec2 vk = solve2(last.stripe.normal, 1, n1, Rational(1, 2));
    bool complement = last.offsets.size() % 2 == 1;
    StripePattern s1{n1 * 2, terms.front().stripe.offset * 2 + (complement ? 1 : 0)};

    std::vector<WeightedStripeTerm> next;
    next.push_back({s1, {Vec2{0, 0}}});
    for (std::size_t i = 1; i + 1 < k; ++i) {
        std::vector<Vec2> zi = xor_translate_set(terms[i].offsets, vk);
        if (zi.empty()) continue;  // S_i (*) {} = {}
        next.push_back({terms[i].stripe, std::move(zi)});
    }
    std::vector<Vec2> u_prime = stripes2_rec(std::move(next));
    return xor_translate_set(u_prime, vk);
}

}  // namespace

std::vector<Vec2> stripes2_translates(const std::vector<WeightedStripeTerm>& terms) {
    validate_terms(terms);
    if (terms.front().offsets != std::vector<Vec2>{Vec2{0, 0}})
        throw std::invalid_argument("stripes2_translates: first term must have offsets {0}");
    return stripes2_rec(terms);
}

Membership weighted_xor_eval(const std::vector<WeightedStripeTerm>& terms, const Point2& x) {
    int acc = 0;
    for (const auto& t : terms) {
        for (const auto& z : t.offsets) {
            Membership m = stripe_member(t.stripe, x - z);
            if (m == Membership::Boundary) return Membership::Boundary;
            if (m == Membership::In) acc ^= 1;
        }
    }
    return acc ? Membership::In : Membership::Out;
}

Membership covered_eval(const std::vector<WeightedStripeTerm>& terms, const std::vector<Vec2>& u,
                        const Point2& x) {
    int acc = 0;
    for (const auto& ui : u) {
        Membership m = weighted_xor_eval(terms, x - ui);
        if (m == Membership::Boundary) return Membership::Boundary;
        if (m == Membership::In) acc ^= 1;
    }
    return acc ? Membership::In : Membership::Out;
}

namespace {

// Common denominator of all normal components; the configuration repeats
// with period (2D, 0), (0, 2D).
BigInt normals_denominator(const std::vector<WeightedStripeTerm>& terms) {
    BigInt d = 1;
    for (const auto& t : terms) {
        for (const BigInt& q : {den(t.stripe.normal.x), den(t.stripe.normal.y)})
            d = d / gcd(d, q) * q;
    }
    return d;
}

}  // namespace

CoverCheckReport check_full_cover(const std::vector<WeightedStripeTerm>& terms,
                                  const std::vector<Vec2>& u, std::size_t samples,
                                  std::uint64_t seed) {
    validate_terms(terms);
    CoverCheckReport report;
    BigInt period = 2 * normals_denominator(terms);

    for (std::size_t i = 0; i < samples; ++i) {
        // deterministic per-index stream
        std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (i + 1));
        Membership m = Membership::Boundary;
        Point2 x;
        for (int attempt = 0; attempt < 128 && m == Membership::Boundary; ++attempt) {
            BigInt q = 1009 + 64 * attempt;
            BigInt range = period * q;
            std::uniform_int_distribution<std::uint64_t> dist(
                0, static_cast<std::uint64_t>(range - 1));
            x = {Rational(BigInt(dist(rng)), q), Rational(BigInt(dist(rng)), q)};
            m = covered_eval(terms, u, x);
        }
        if (m == Membership::Boundary) {
            report.pass = false;
            report.detail = "could not find a generic sample point";
            return report;
        }
        ++report.samples_checked;
        if (m == Membership::Out) {
            report.pass = false;
            report.counterexample = x;
            report.detail = "uncovered point " + to_string(x);
            return report;
        }
    }
    return report;
}

CoverCheckReport check_full_cover_cells(const std::vector<WeightedStripeTerm>& terms,
                                        const std::vector<Vec2>& u) {
    validate_terms(terms);
    CoverCheckReport report;

    BigInt period = 2 * normals_denominator(terms);
    Box window{0, Rational(period), 0, Rational(period)};

    // Per direction, reduce the translate offsets mod 2 and cancel XOR
    // pairs: equal stripe patterns contribute nothing. The reduced lists
    // drive both the cell decomposition and the per-cell evaluation (the
    // raw evaluator would hit spurious boundaries on cancelled lines).
    std::vector<std::pair<Vec2, std::vector<Rational>>> reduced;
    std::vector<Segment> segs;
    for (const auto& t : terms) {
        const Vec2& n = t.stripe.normal;
        std::map<Rational, int> offsets;
        for (const auto& z : t.offsets) {
            for (const auto& ui : u) {
                Rational c = t.stripe.offset - dot(n, z + ui);
                c -= 2 * rfloor(c / 2);  // into [0, 2)
                offsets[c] ^= 1;
            }
        }
        std::vector<Rational> live;
        for (const auto& [c, count] : offsets)
            if (count) live.push_back(c);
        if (!live.empty()) reduced.push_back({n, std::move(live)});
        // value range of n.x over the window corners
        Rational lo, hi;
        {
            std::vector<Rational> vals;
            for (const Point2& corner :
                 {Point2{window.xmin, window.ymin}, Point2{window.xmax, window.ymin},
                  Point2{window.xmin, window.ymax}, Point2{window.xmax, window.ymax}})
                vals.push_back(dot(n, corner));
            lo = *std::min_element(vals.begin(), vals.end());
            hi = *std::max_element(vals.begin(), vals.end());
        }
        for (const auto& [c, count] : offsets) {
            if (!count) continue;
            // lines n.x = m - c for every integer m crossing the window
            for (BigInt m = rceil(lo + c); m <= rfloor(hi + c); ++m) {
                Rational q = Rational(m) - c;
                if (n.y == 0) {
                    Rational xv = q / n.x;
                    segs.push_back({{xv, window.ymin - 1}, {xv, window.ymax + 1}});
                } else {
                    Rational x1 = window.xmin - 1, x2 = window.xmax + 1;
                    segs.push_back({{x1, (q - n.x * x1) / n.y}, {x2, (q - n.x * x2) / n.y}});
                }
            }
        }
    }

    auto reduced_eval = [&](const Point2& x) {
        int acc = 0;
        for (const auto& [n, cs] : reduced) {
            Rational base = dot(n, x);
            for (const auto& c : cs) {
                Rational t = base + c;
                if (is_integer(t))
                    throw std::logic_error("check_full_cover_cells: centroid on a stripe boundary");
                if (rfloor(t) % 2 == 0) acc ^= 1;
            }
        }
        return acc ? Membership::In : Membership::Out;
    };

    slab_decompose_stream(segs, window, [&](const ConvexCell& cell) {
        if (!report.pass) return;
        Membership m = reduced_eval(cell.centroid);
        ++report.cells_checked;
        if (m == Membership::Out) {
            report.pass = false;
            report.counterexample = cell.centroid;
            report.detail = "uncovered cell at " + to_string(cell.centroid);
        }
    });
    return report;
}

std::string format_stripes(const std::vector<StripePattern>& stripes) {
    std::string out;
    for (const auto& s : stripes)
        out += to_string(s.normal) + " " + to_string(s.offset) + "\n";
    return out;
}

std::string format_vectors(const std::vector<Vec2>& vs) {
    std::string out;
    for (const auto& v : vs) out += to_string(v) + "\n";
    return out;
}

}  // namespace oddcover
