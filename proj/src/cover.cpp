#include "oddcover/cover.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace oddcover {

namespace {

Vec2 rotate90(const Vec2& d) { return {-d.y, d.x}; }

BigInt first_prime_above(BigInt n) {
    for (BigInt m = n + 1;; ++m) {
        if (m < 2) continue;
        bool prime = true;
        for (BigInt d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                prime = false;
                break;
            }
        if (prime) return m;
    }
}

// Gauss-Lagrange reduction: shortest basis of the same lattice.
Lattice2 reduce_lattice(Lattice2 l) {
    if (l.det() == 0) throw std::invalid_argument("reduce_lattice: degenerate lattice");
    auto n2 = [](const Vec2& v) { return dot(v, v); };
    while (true) {
        if (n2(l.g2) < n2(l.g1)) std::swap(l.g1, l.g2);
        Rational mu = dot(l.g1, l.g2) / n2(l.g1);
        BigInt m = rfloor(mu + Rational(1, 2));
        if (m != 0) l.g2 = l.g2 - l.g1 * Rational(m);
        if (n2(l.g2) >= n2(l.g1)) break;
    }
    return l;
}

Box lattice_cell_bbox(const Lattice2& l) {
    std::vector<Point2> corners{{0, 0}, l.g1, l.g2, l.g1 + l.g2};
    Box b{corners[0].x, corners[0].x, corners[0].y, corners[0].y};
    for (const auto& c : corners) {
        b.xmin = std::min(b.xmin, c.x);
        b.xmax = std::max(b.xmax, c.x);
        b.ymin = std::min(b.ymin, c.y);
        b.ymax = std::max(b.ymax, c.y);
    }
    return b;
}

// Boundary lines of the stripe {floor(n.x + o) even} crossing the window,
// as long segments suitable for slab decomposition.
void append_stripe_lines(std::vector<Segment>& segs, const Vec2& n, const Rational& o,
                         const Box& window) {
    std::vector<Rational> vals;
    for (const Point2& corner : {Point2{window.xmin, window.ymin}, Point2{window.xmax, window.ymin},
                                 Point2{window.xmin, window.ymax}, Point2{window.xmax, window.ymax}})
        vals.push_back(dot(n, corner));
    Rational lo = *std::min_element(vals.begin(), vals.end());
    Rational hi = *std::max_element(vals.begin(), vals.end());
    for (BigInt m = rceil(lo + o); m <= rfloor(hi + o); ++m) {
        Rational q = Rational(m) - o;
        if (n.y == 0) {
            Rational xv = q / n.x;
            segs.push_back({{xv, window.ymin - 1}, {xv, window.ymax + 1}});
        } else {
            Rational x1 = window.xmin - 1, x2 = window.xmax + 1;
            segs.push_back({{x1, (q - n.x * x1) / n.y}, {x2, (q - n.x * x2) / n.y}});
        }
    }
}

// All translate centers z + u of the cover whose translate can meet `box`.
std::vector<Vec2> cover_offsets_near(const OddCover& cover, const Box& box) {
    Rational px0, px1, py0, py1;
    cover.polygon.polygon.bounding_box(px0, px1, py0, py1);
    std::vector<Vec2> offsets;
    for (const auto& u : cover.u) {
        Box zbox{box.xmin - u.x - px1, box.xmax - u.x - px0, box.ymin - u.y - py1,
                 box.ymax - u.y - py0};
        for (const auto& z : cover.translates_in_box(zbox)) offsets.push_back(z + u);
    }
    return offsets;
}

// The stripe terms certified by the cover, with the global complement
// folded into the first stripe's offset. U is invariant under offset
// changes, so this is the configuration the recursion actually covers.
std::vector<WeightedStripeTerm> cover_stripe_terms(const OddCover& cover) {
    if (!cover.stripes) throw std::invalid_argument("cover has no stripe representation");
    std::vector<WeightedStripeTerm> terms;
    for (const auto& s : cover.stripes->stripes) terms.push_back({s, {Vec2{0, 0}}});
    if (cover.stripes->complemented) terms.front().stripe.offset += 1;
    return terms;
}

// Common period of the Z-pattern and every integer-normal stripe:
// the period lattice intersected with (2Z)^2.
Lattice2 common_period_with_stripes(const StableWeighting& w) {
    BigInt two_k = BigInt(1) << std::max(w.k, 1);
    return {{Rational(two_k), 0}, {Rational(-2 * w.functional.radix), 2}};
}

Rational random_rational(std::mt19937_64& rng, const Rational& lo, const Rational& hi,
                         const BigInt& q) {
    BigInt range = rceil((hi - lo) * Rational(q));
    std::uniform_int_distribution<std::uint64_t> dist(0,
                                                      static_cast<std::uint64_t>(range - 1));
    return lo + Rational(BigInt(dist(rng)), q);
}

}  // namespace

std::vector<DirectionClass> direction_classes(const IntegerPolygon& p) {
    if (!p.polygon.is_integral())
        throw std::invalid_argument("direction_classes: polygon is not integral");
    const auto& vs = p.polygon.vertices();
    std::map<Vec2, DirectionClass> by_d;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        Vec2 d = primitive_direction(vs[(i + 1) % vs.size()] - vs[i]);
        DirectionClass& c = by_d[d];
        if (c.edges.empty()) {
            c.d = d;
            c.v_d = d;
            c.stripe_normal = primitive_direction(rotate90(d));
        }
        c.edges.push_back(i);
    }
    std::vector<DirectionClass> out;
    out.reserve(by_d.size());
    for (auto& [d, c] : by_d) out.push_back(std::move(c));
    return out;
}

std::vector<MarkerSet> marker_sets(const IntegerPolygon& p,
                                   const std::vector<DirectionClass>& classes) {
    const auto& vs = p.polygon.vertices();
    std::vector<MarkerSet> out;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        const DirectionClass& c = classes[ci];
        std::set<Point2> pts;
        for (std::size_t e : c.edges) {
            const Point2& a = vs[e];
            const Point2& b = vs[(e + 1) % vs.size()];
            auto lp = lattice_points_on_segment(a, b);
            // drop the v_d-most point: z qualifies iff z + v_d is still on
            // the edge
            bool forward = dot(b - a, c.v_d) > 0;
            for (std::size_t j = forward ? 0 : 1; j + (forward ? 1 : 0) < lp.size(); ++j)
                pts.insert(lp[j]);
        }
        if (pts.empty()) throw std::logic_error("marker_sets: empty marker set");
        out.push_back({ci, {pts.begin(), pts.end()}});
    }
    return out;
}

ActiveDirections active_directions(const IntegerPolygon& p,
                                   const std::vector<DirectionClass>& classes,
                                   const std::vector<MarkerSet>& markers) {
    (void)p;
    if (markers.size() != classes.size())
        throw std::invalid_argument("active_directions: class/marker mismatch");
    FiniteSetFamily family;
    for (const auto& m : markers) {
        FiniteSet s;
        for (const auto& pt : m.points) s.push_back({-num(pt.x), -num(pt.y)});
        family.sets.push_back(std::move(s));
    }
    auto res = find_weighting(family);
    return {std::move(res.weighting), std::move(res.active)};
}

StripeXor stripe_representation(const IntegerPolygon& p, const StableWeighting& weighting,
                                const std::vector<DirectionClass>& classes,
                                const std::vector<bool>& active) {
    StripeXor sx;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (active[i]) sx.stripes.push_back({classes[i].stripe_normal, 0});
    if (sx.stripes.empty()) throw std::logic_error("stripe_representation: no active direction");

    // Generic calibration point: q prime beyond every |n_x|+|n_y|, so
    // n.(1/q, 1/q^2) is never an integer and x0 avoids all translate
    // boundaries (which lie on lattice lines of the direction classes).
    BigInt nmax = 0;
    for (const auto& c : classes) {
        BigInt s = abs(num(c.stripe_normal.x)) + abs(num(c.stripe_normal.y));
        nmax = std::max(nmax, s);
    }
    BigInt q = first_prime_above(nmax);
    Point2 x0{Rational(BigInt(1), q), Rational(BigInt(1), q * q)};

    // parity of P (*) Z at x0
    Rational px0, px1, py0, py1;
    p.polygon.bounding_box(px0, px1, py0, py1);
    int parity = 0;
    for (BigInt zx = rceil(x0.x - px1); zx <= rfloor(x0.x - px0); ++zx) {
        for (BigInt zy = rceil(x0.y - py1); zy <= rfloor(x0.y - py0); ++zy) {
            Point2 z{Rational(zx), Rational(zy)};
            PointLocation loc = point_in_polygon(p.polygon, x0 - z);
            if (loc == PointLocation::Boundary)
                throw std::logic_error("stripe_representation: calibration point not generic");
            if (loc == PointLocation::Interior) parity ^= weighting.value(z);
        }
    }

    Membership m = xor_eval(sx, x0);
    if (m == Membership::Boundary)
        throw std::logic_error("stripe_representation: calibration point on a stripe boundary");
    sx.complemented = (m == Membership::In ? 1 : 0) != parity;
    return sx;
}

std::vector<Vec2> OddCover::translates_in_box(const Box& box) const {
    Rational det = basis.det();
    std::vector<Rational> w1s, w2s;
    for (const Point2& c : {Point2{box.xmin, box.ymin}, Point2{box.xmax, box.ymin},
                            Point2{box.xmin, box.ymax}, Point2{box.xmax, box.ymax}}) {
        w1s.push_back(cross(c, basis.g2) / det);
        w2s.push_back(cross(basis.g1, c) / det);
    }
    BigInt lo1 = rceil(*std::min_element(w1s.begin(), w1s.end()));
    BigInt hi1 = rfloor(*std::max_element(w1s.begin(), w1s.end()));
    BigInt lo2 = rceil(*std::min_element(w2s.begin(), w2s.end()));
    BigInt hi2 = rfloor(*std::max_element(w2s.begin(), w2s.end()));

    std::vector<Vec2> out;
    for (BigInt w1 = lo1; w1 <= hi1; ++w1) {
        for (BigInt w2 = lo2; w2 <= hi2; ++w2) {
            if (!weighting.contains_residue(weighting.functional.eval(ZPoint{w1, w2}))) continue;
            out.push_back(basis.g1 * Rational(w1) + basis.g2 * Rational(w2));
        }
    }
    return out;
}

OddCover build_cover(const RationalPolygon& p) {
    OddCover c;
    c.polygon = normalize_polygon(p);
    c.classes = direction_classes(c.polygon);
    c.markers = marker_sets(c.polygon, c.classes);
    auto ad = active_directions(c.polygon, c.classes, c.markers);
    c.weighting = std::move(ad.weighting);
    c.active = std::move(ad.active);
    c.stripes = stripe_representation(c.polygon, c.weighting, c.classes, c.active);
    c.u = stripes2_translates(cover_stripe_terms(c));

    BigInt two_k = BigInt(1) << c.weighting.k;
    c.period = {{Rational(two_k), 0}, {Rational(-c.weighting.functional.radix), 1}};

    Rational area = polygon_area(c.polygon.polygon);
    Rational r_count = Rational(BigInt(c.weighting.residues.size()));
    c.density = area * Rational(BigInt(c.u.size())) * r_count / Rational(two_k);
    c.bound = 1 / c.density;

    auto [max_deg, all_odd] = exact_period_degrees(c);
    if (!all_odd) throw std::logic_error("build_cover: even-degree cell in the period");
    c.max_degree = max_deg;

    std::size_t nclasses = c.classes.size();
    Rational cap = area * Rational(BigInt(std::max<std::size_t>(
                              2, std::size_t(1) << (nclasses - 1))));
    if (c.density < 1 || c.bound > 1 || c.density > cap)
        throw std::logic_error("build_cover: density outside certified range");
    return c;
}

OddCover triangle_half_lattice_cover(const Point2& a, const Point2& b, const Point2& c) {
    if (cross(b - a, c - a) == 0)
        throw std::invalid_argument("triangle_half_lattice_cover: degenerate triangle");
    OddCover cover;
    cover.polygon = {RationalPolygon({a, b, c}), false, {}};
    cover.weighting = {0, {2, 1}, {0}};
    cover.basis = {(b - a) * Rational(1, 2), (c - a) * Rational(1, 2)};
    cover.u = {Vec2{0, 0}};
    cover.period = cover.basis;
    Rational area = polygon_area(cover.polygon.polygon);
    Rational det = cover.basis.det();
    if (det < 0) det = -det;
    cover.density = area / det;
    cover.bound = 1 / cover.density;
    if (cover.density != 2)
        throw std::logic_error("triangle_half_lattice_cover: density is not 2");

    auto [max_deg, all_odd] = exact_period_degrees(cover);
    if (!all_odd)
        throw std::logic_error("triangle_half_lattice_cover: even-degree cell in the period");
    cover.max_degree = max_deg;
    return cover;
}

std::pair<int, bool> exact_period_degrees(const OddCover& cover) {
    Lattice2 red = reduce_lattice(cover.period);
    Box window = lattice_cell_bbox(red);
    TranslateFamily family{cover.polygon.polygon, cover_offsets_near(cover, window)};
    int max_deg = 0;
    bool all_odd = true;
    degree_decompose(family, window, [&](const ConvexCell&, int degree) {
        max_deg = std::max(max_deg, degree);
        if (degree % 2 == 0) all_odd = false;
    });
    return {max_deg, all_odd};
}

Rational windowed_density(const OddCover& cover, int n) {
    if (n <= 0) throw std::invalid_argument("windowed_density: window must be positive");
    Rational h(n, 2);
    Box q{-h, h, -h, h};
    const RationalPolygon& p = cover.polygon.polygon;
    Rational px0, px1, py0, py1;
    p.bounding_box(px0, px1, py0, py1);
    Rational area = polygon_area(p);
    Rational total = 0;
    for (const auto& t : cover_offsets_near(cover, q)) {
        if (px0 + t.x >= q.xmin && px1 + t.x <= q.xmax && py0 + t.y >= q.ymin &&
            py1 + t.y <= q.ymax)
            total += area;  // fully inside
        else
            total += clipped_area(p, {q.xmin - t.x, q.xmax - t.x, q.ymin - t.y, q.ymax - t.y});
    }
    return total / Rational(BigInt(n) * n);
}

VerifyReport verify_cover(const OddCover& cover, std::size_t samples, std::uint64_t seed) {
    VerifyReport report;
    const RationalPolygon& p = cover.polygon.polygon;

    // (a) exact per-cell equality of P (*) Z and the stripe representation
    // over one common period of both sides; periodicity extends the
    // equality to the whole plane.
    if (cover.stripes) {
        VerifyCheck check{"stripe-cells"};
        Lattice2 red = reduce_lattice(common_period_with_stripes(cover.weighting));
        Box window = lattice_cell_bbox(red);
        Rational px0, px1, py0, py1;
        p.bounding_box(px0, px1, py0, py1);
        Box zbox{window.xmin - px1, window.xmax - px0, window.ymin - py1, window.ymax - py0};
        TranslateFamily family{p, cover.translates_in_box(zbox)};

        std::vector<Segment> segs;
        const auto& vs = p.vertices();
        for (const auto& z : family.offsets)
            for (std::size_t i = 0; i < vs.size(); ++i)
                segs.push_back({vs[i] + z, vs[(i + 1) % vs.size()] + z});
        for (const auto& s : cover.stripes->stripes)
            append_stripe_lines(segs, s.normal, s.offset, window);

        std::size_t cells = 0;
        slab_decompose_stream(segs, window, [&](const ConvexCell& cell) {
            if (!check.pass) return;
            ParityAtPoint par = parity_at_point(family, cell.centroid);
            if (par.boundary)
                throw std::logic_error("verify_cover: cell centroid on a translate boundary");
            Membership m = xor_eval(*cover.stripes, cell.centroid);
            if (m == Membership::Boundary)
                throw std::logic_error("verify_cover: cell centroid on a stripe boundary");
            ++cells;
            if ((m == Membership::In ? 1 : 0) != par.parity) {
                check.pass = false;
                check.detail = "mismatch at " + to_string(cell.centroid);
            }
        });
        if (check.pass) check.detail = std::to_string(cells) + " cells equal";
        report.add(std::move(check));
    }

    // (b) stripes (*) U covers the plane: exact on period cells, then sampled
    if (cover.stripes) {
        auto terms = cover_stripe_terms(cover);
        CoverCheckReport exact = check_full_cover_cells(terms, cover.u);
        report.add({"stripe-cover-cells", exact.pass,
                    exact.pass ? std::to_string(exact.cells_checked) + " cells covered"
                               : exact.detail});
        CoverCheckReport sampled = check_full_cover(terms, cover.u, samples, seed);
        report.add({"stripe-cover-samples", sampled.pass,
                    sampled.pass ? std::to_string(sampled.samples_checked) + " samples covered"
                                 : sampled.detail});
    }

    // (c) sampled generic points have odd degree within the degree bound
    {
        VerifyCheck check{"odd-degree-samples"};
        Rational span = Rational((BigInt(1) << cover.weighting.k) + cover.weighting.functional.radix);
        Rational px0, px1, py0, py1;
        p.bounding_box(px0, px1, py0, py1);
        for (std::size_t i = 0; i < samples && check.pass; ++i) {
            std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ull * (i + 1));
            int degree = -1;
            Point2 x;
            for (int attempt = 0; attempt < 128 && degree < 0; ++attempt) {
                BigInt q = 1009 + 64 * attempt;
                x = {random_rational(rng, 0, span, q), random_rational(rng, 0, span, q)};
                degree = 0;
                for (const auto& u : cover.u) {
                    Box zb{x.x - u.x - px1, x.x - u.x - px0, x.y - u.y - py1, x.y - u.y - py0};
                    for (const auto& z : cover.translates_in_box(zb)) {
                        PointLocation loc = point_in_polygon(p, x - z - u);
                        if (loc == PointLocation::Boundary) {
                            degree = -1;
                            break;
                        }
                        if (loc == PointLocation::Interior) ++degree;
                    }
                    if (degree < 0) break;
                }
            }
            if (degree < 0) {
                check.pass = false;
                check.detail = "could not find a generic sample point";
            } else if (degree % 2 == 0 || degree > cover.max_degree) {
                check.pass = false;
                check.detail = "degree " + std::to_string(degree) + " at " + to_string(x);
            }
        }
        if (check.pass) check.detail = std::to_string(samples) + " samples odd";
        report.add(std::move(check));
    }

    // (d) windowed density converges to the exact density at 1/n rate
    {
        VerifyCheck check{"density-convergence"};
        Rational e8, e32;
        std::string detail;
        for (int n : {8, 16, 32}) {
            Rational e = windowed_density(cover, n) - cover.density;
            if (e < 0) e = -e;
            if (n == 8) e8 = e;
            if (n == 32) e32 = e;
            detail += "n=" + std::to_string(n) + " err=" + to_string(e) + " ";
        }
        check.pass = e32 <= e8 + cover.density / 64;
        check.detail = detail;
        report.add(std::move(check));
    }

    return report;
}

CompressionResult compression_check(const OddCover& cover, const RationalPolygon& p,
                                    const std::vector<Vec2>& k) {
    if (k.size() % 2 == 0)
        throw std::invalid_argument("compression_check: K must have odd size");
    CompressionResult r;
    r.ratio = odd_area(p, k) / polygon_area(p);
    r.bound = cover.bound;
    r.pass = r.ratio >= r.bound;
    return r;
}

CompressionResult compression_check(const RationalPolygon& p, const std::vector<Vec2>& k) {
    return compression_check(build_cover(p), p, k);
}

VerifyCheck check_property1(const OddCover& cover, std::size_t trials, std::uint64_t seed) {
    VerifyCheck check{"boundary-parity"};
    const RationalPolygon& p = cover.polygon.polygon;
    const auto& vs = p.vertices();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coord(-20, 20);
    std::uniform_int_distribution<std::size_t> pick(0, cover.classes.size() - 1);

    for (std::size_t t = 0; t < trials && check.pass; ++t) {
        std::size_t ci = pick(rng);
        const DirectionClass& c = cover.classes[ci];
        // a lattice edge I = [q, q + v_d] on a line of direction d
        Point2 q{coord(rng), coord(rng)};
        Point2 q2 = q + c.v_d;

        // translates z in Z whose boundary contains I: candidates are
        // z = q - m over the marker set, each confirmed geometrically
        int count = 0;
        for (const auto& m : cover.markers[ci].points) {
            Vec2 z = q - m;
            bool on_boundary = false;
            for (std::size_t e = 0; e < vs.size() && !on_boundary; ++e) {
                const Point2& a = vs[e];
                const Point2& b = vs[(e + 1) % vs.size()];
                if (point_on_segment(a, b, q - z) && point_on_segment(a, b, q2 - z))
                    on_boundary = true;
            }
            if (!on_boundary)
                throw std::logic_error("check_property1: marker candidate not on the boundary");
            if (cover.weighting.value(z)) ++count;
        }
        int expected = cover.active[ci] ? 1 : 0;
        if (count % 2 != expected) {
            check.pass = false;
            check.detail = "parity " + std::to_string(count % 2) + " for edge at " + to_string(q) +
                           " direction " + to_string(c.d);
        }
    }
    if (check.pass) check.detail = std::to_string(trials) + " edges consistent";
    return check;
}

}  // namespace oddcover
