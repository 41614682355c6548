#include "oddcover/parity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace oddcover {

namespace {

struct SweepSeg {
    Point2 a, b;   // a.x <= b.x for non-vertical; a.y <= b.y for vertical
    bool vertical = false;
    int delta_up = 0;     // membership change when crossing upward
    int delta_right = 0;  // membership change when crossing rightward
    Rational y_at(const Rational& x) const {
        return a.y + (x - a.x) / (b.x - a.x) * (b.y - a.y);
    }
};

// Clip segment to box, parametrically. Returns false if nothing is left.
// Orientation a->b is preserved.
bool clip_to_box(const Point2& sa, const Point2& sb, const Box& w, Point2& outa, Point2& outb) {
    Vec2 d = sb - sa;
    Rational t0 = 0, t1 = 1;
    auto cut = [&](const Rational& p, const Rational& q) {
        // p * t <= q
        if (p == 0) return q >= 0;
        Rational r = q / p;
        if (p < 0) {
            if (r > t1) return false;
            if (r > t0) t0 = r;
        } else {
            if (r < t0) return false;
            if (r < t1) t1 = r;
        }
        return true;
    };
    if (!cut(-d.x, sa.x - w.xmin)) return false;
    if (!cut(d.x, w.xmax - sa.x)) return false;
    if (!cut(-d.y, sa.y - w.ymin)) return false;
    if (!cut(d.y, w.ymax - sa.y)) return false;
    if (t0 >= t1) return false;
    outa = sa + d * t0;
    outb = sb - d * (1 - t1);
    return true;
}

Point2 cycle_centroid(const std::vector<Point2>& vs, const Rational& area) {
    Rational cx = 0, cy = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point2& a = vs[i];
        const Point2& b = vs[(i + 1) % vs.size()];
        Rational w = cross(a, b);
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    Rational s = 6 * area;
    return {cx / s, cy / s};
}

std::vector<SweepSeg> clip_segments(const std::vector<SweepSeg>& raw, const Box& window) {
    std::vector<SweepSeg> segs;
    for (const auto& s : raw) {
        Point2 a, b;
        if (!clip_to_box(s.a, s.b, window, a, b)) continue;
        SweepSeg cs = s;
        if (a.x == b.x) {
            cs.vertical = true;
            if (a.y <= b.y) {
                cs.a = a;
                cs.b = b;
            } else {
                cs.a = b;
                cs.b = a;
            }
        } else if (a.x < b.x) {
            cs.a = a;
            cs.b = b;
        } else {
            cs.a = b;
            cs.b = a;
        }
        segs.push_back(std::move(cs));
    }
    return segs;
}

// Event x-coordinates: window sides, endpoints, pairwise crossings of
// non-vertical segments (bbox-pruned).
std::vector<Rational> sweep_events(const std::vector<SweepSeg>& segs, const Box& window) {
    std::vector<Rational> xs{window.xmin, window.xmax};
    for (const auto& s : segs) {
        xs.push_back(s.a.x);
        xs.push_back(s.b.x);
    }
    std::vector<std::size_t> byx;
    for (std::size_t i = 0; i < segs.size(); ++i)
        if (!segs[i].vertical) byx.push_back(i);
    std::sort(byx.begin(), byx.end(),
              [&](std::size_t i, std::size_t j) { return segs[i].a.x < segs[j].a.x; });
    for (std::size_t ii = 0; ii < byx.size(); ++ii) {
        const SweepSeg& si = segs[byx[ii]];
        Rational ylo = std::min(si.a.y, si.b.y), yhi = std::max(si.a.y, si.b.y);
        for (std::size_t jj = ii + 1; jj < byx.size(); ++jj) {
            const SweepSeg& sj = segs[byx[jj]];
            if (sj.a.x >= si.b.x) break;
            if (std::max(sj.a.y, sj.b.y) < ylo || std::min(sj.a.y, sj.b.y) > yhi) continue;
            Vec2 di = si.b - si.a;
            Vec2 dj = sj.b - sj.a;
            Rational denom = cross(di, dj);
            if (denom == 0) continue;
            Rational t = cross(sj.a - si.a, dj) / denom;
            Rational x = si.a.x + t * di.x;
            if (x > si.a.x && x < si.b.x && x > sj.a.x && x < sj.b.x) xs.push_back(std::move(x));
        }
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

struct Level {
    Rational yl, yr;
    int delta_up;
};

// Sweep the slabs left to right, handing each maximal trapezoid to `sink`
// together with the cumulative delta_up of all boundaries below it in its
// slab, the bottom-path membership change at the slab's left edge, and a
// new-slab flag.
void sweep(const std::vector<SweepSeg>& segs, const Box& window,
           const std::function<void(ConvexCell&&, int cum_below, int bottom_delta, bool new_slab)>&
               sink) {
    auto xs = sweep_events(segs, window);

    // membership change along the bottom path at each event x
    std::map<Rational, int> bottom_deltas;
    for (const auto& s : segs) {
        if (s.a.y == s.b.y) continue;
        if (s.a.y == window.ymin) bottom_deltas[s.a.x] += s.delta_right;
        if (s.b.y == window.ymin) bottom_deltas[s.b.x] += s.delta_right;
    }

    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < segs.size(); ++i)
        if (!segs[i].vertical) order.push_back(i);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return segs[i].a.x < segs[j].a.x; });

    std::vector<std::size_t> active;
    std::size_t next = 0;
    bool first_slab = true;
    for (std::size_t e = 0; e + 1 < xs.size(); ++e) {
        const Rational& x1 = xs[e];
        const Rational& x2 = xs[e + 1];
        while (next < order.size() && segs[order[next]].a.x <= x1) active.push_back(order[next++]);
        std::erase_if(active, [&](std::size_t i) { return segs[i].b.x <= x1; });

        std::vector<Level> levels;
        for (std::size_t i : active) {
            if (segs[i].a.x > x1 || segs[i].b.x < x2) continue;
            Rational yl = segs[i].y_at(x1), yr = segs[i].y_at(x2);
            // Segments lying on the window bottom sit below the bottom
            // path (the path runs just above ymin); their crossings are
            // carried by the adjacent edges' bottom deltas, so counting
            // them as levels would double-count.
            if (yl == window.ymin && yr == window.ymin) continue;
            levels.push_back({std::move(yl), std::move(yr), segs[i].delta_up});
        }
        std::sort(levels.begin(), levels.end(), [](const Level& u, const Level& v) {
            Rational su = u.yl + u.yr, sv = v.yl + v.yr;
            return su != sv ? su < sv : u.yl < v.yl;
        });

        int bottom_delta = 0;
        if (!first_slab) {
            auto it = bottom_deltas.find(x1);
            if (it != bottom_deltas.end()) bottom_delta = it->second;
        }
        first_slab = false;

        Rational bl = window.ymin, br = window.ymin;
        int cum = 0;
        bool new_slab = true;
        for (std::size_t i = 0; i <= levels.size(); ++i) {
            Rational tl = i < levels.size() ? levels[i].yl : window.ymax;
            Rational tr = i < levels.size() ? levels[i].yr : window.ymax;
            Rational area = ((tl - bl) + (tr - br)) * (x2 - x1) / 2;
            if (area != 0) {
                ConvexCell cell;
                cell.vertices = {{x1, bl}, {x2, br}, {x2, tr}, {x1, tl}};
                cell.vertices.erase(std::unique(cell.vertices.begin(), cell.vertices.end()),
                                    cell.vertices.end());
                if (cell.vertices.size() > 1 && cell.vertices.front() == cell.vertices.back())
                    cell.vertices.pop_back();
                cell.area = std::move(area);
                cell.centroid = cycle_centroid(cell.vertices, cell.area);
                sink(std::move(cell), cum, bottom_delta, new_slab);
                new_slab = false;
            }
            if (i < levels.size()) {
                cum += levels[i].delta_up;
                bl = std::move(tl);
                br = std::move(tr);
            }
        }
    }
}

}  // namespace

Rational cycle_area(const std::vector<Point2>& cycle) {
    Rational s = 0;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        s += cross(cycle[i], cycle[(i + 1) % cycle.size()]);
    return s / 2;
}

std::vector<ConvexCell> slab_decompose(const std::vector<Segment>& segments, const Box& window) {
    if (!window.valid()) throw std::invalid_argument("slab_decompose: degenerate window");
    std::vector<SweepSeg> raw;
    raw.reserve(segments.size());
    for (const auto& s : segments) raw.push_back({s.a, s.b});
    std::vector<ConvexCell> cells;
    sweep(clip_segments(raw, window), window,
          [&](ConvexCell&& c, int, int, bool) { cells.push_back(std::move(c)); });
    return cells;
}

void slab_decompose_stream(const std::vector<Segment>& segments, const Box& window,
                           const std::function<void(const ConvexCell&)>& sink) {
    if (!window.valid()) throw std::invalid_argument("slab_decompose: degenerate window");
    std::vector<SweepSeg> raw;
    raw.reserve(segments.size());
    for (const auto& s : segments) raw.push_back({s.a, s.b});
    sweep(clip_segments(raw, window), window,
          [&](ConvexCell&& c, int, int, bool) { sink(c); });
}

Rational ParityRegion::odd_area() const {
    Rational s = 0;
    for (const auto& c : cells)
        if (c.parity) s += c.cell.area;
    return s;
}

int ParityRegion::max_degree() const {
    int m = 0;
    for (const auto& c : cells) m = std::max(m, c.degree);
    return m;
}

ParityRegion subdivide(const TranslateFamily& family, const Box& window) {
    if (!window.valid()) throw std::invalid_argument("subdivide: degenerate window");
    if (family.offsets.empty()) throw std::invalid_argument("subdivide: empty offset multiset");

    std::vector<Segment> segs;
    const auto& vs = family.base.vertices();
    for (const auto& z : family.offsets)
        for (std::size_t i = 0; i < vs.size(); ++i)
            segs.push_back({vs[i] + z, vs[(i + 1) % vs.size()] + z});

    ParityRegion region;
    region.window = window;
    for (auto& cell : slab_decompose(segs, window)) {
        ParityCell pc;
        for (const auto& z : family.offsets) {
            PointLocation loc = point_in_polygon(family.base, cell.centroid - z);
            if (loc == PointLocation::Boundary)
                throw std::logic_error("subdivide: cell centroid on a translate boundary");
            if (loc == PointLocation::Interior) ++pc.degree;
        }
        pc.parity = pc.degree % 2;
        pc.cell = std::move(cell);
        region.cells.push_back(std::move(pc));
    }
    return region;
}

void degree_decompose(const TranslateFamily& family, const Box& window,
                      const std::function<void(const ConvexCell&, int degree)>& sink) {
    if (!window.valid()) throw std::invalid_argument("degree_decompose: degenerate window");
    if (family.offsets.empty()) throw std::invalid_argument("degree_decompose: empty offset multiset");

    // Oriented boundary edges; crossing deltas come from the CCW
    // orientation (interior on the left).
    std::vector<SweepSeg> raw;
    const auto& vs = family.base.vertices();
    for (const auto& z : family.offsets) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            SweepSeg s;
            s.a = vs[i] + z;
            s.b = vs[(i + 1) % vs.size()] + z;
            Vec2 d = s.b - s.a;
            s.delta_up = d.x > 0 ? 1 : (d.x < 0 ? -1 : 0);
            s.delta_right = d.y < 0 ? 1 : (d.y > 0 ? -1 : 0);
            raw.push_back(std::move(s));
        }
    }
    std::vector<SweepSeg> segs = clip_segments(raw, window);

    // Degrees propagate cell to cell along the window bottom and up each
    // slab; the first emitted cell seeds the sweep with an exact
    // point-in-polygon count and the last cell re-verifies it.
    bool seeded = false;
    int path = 0;  // degree just above the window bottom in the current slab
    auto count_at = [&](const Point2& p) {
        int deg = 0;
        for (const auto& z : family.offsets) {
            PointLocation loc = point_in_polygon(family.base, p - z);
            if (loc == PointLocation::Boundary)
                throw std::logic_error("degree_decompose: cell centroid on a translate boundary");
            if (loc == PointLocation::Interior) ++deg;
        }
        return deg;
    };
    ConvexCell last_cell;
    int last_degree = 0;
    sweep(segs, window, [&](ConvexCell&& cell, int cum_below, int bottom_delta, bool new_slab) {
        if (!seeded) {
            path = count_at(cell.centroid) - cum_below;
            seeded = true;
        } else if (new_slab) {
            path += bottom_delta;
        }
        int degree = path + cum_below;
        if (degree < 0) throw std::logic_error("degree_decompose: negative degree");
        sink(cell, degree);
        last_cell = std::move(cell);
        last_degree = degree;
    });
    if (seeded && count_at(last_cell.centroid) != last_degree)
        throw std::logic_error("degree_decompose: propagation check failed");
}

ParityAtPoint parity_at_point(const TranslateFamily& family, const Point2& x) {
    ParityAtPoint r;
    for (const auto& z : family.offsets) {
        PointLocation loc = point_in_polygon(family.base, x - z);
        if (loc == PointLocation::Boundary) {
            r.boundary = true;
            return r;
        }
        if (loc == PointLocation::Interior) ++r.degree;
    }
    r.parity = r.degree % 2;
    return r;
}

Rational odd_area(const RationalPolygon& p, const std::vector<Vec2>& k) {
    if (k.empty()) throw std::invalid_argument("odd_area: K must be nonempty");
    Rational xmin, xmax, ymin, ymax;
    p.bounding_box(xmin, xmax, ymin, ymax);
    Box w{xmin, xmax, ymin, ymax};
    for (const auto& z : k) {
        w.xmin = std::min(w.xmin, Rational(xmin + z.x));
        w.xmax = std::max(w.xmax, Rational(xmax + z.x));
        w.ymin = std::min(w.ymin, Rational(ymin + z.y));
        w.ymax = std::max(w.ymax, Rational(ymax + z.y));
    }
    return subdivide({p, k}, w).odd_area();
}

std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, const Vec2& n,
                                   const Rational& c) {
    std::vector<Point2> out;
    const std::size_t m = poly.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point2& p = poly[i];
        const Point2& q = poly[(i + 1) % m];
        Rational dp = dot(n, p), dq = dot(n, q);
        bool pin = dp <= c, qin = dq <= c;
        if (pin) out.push_back(p);
        if (pin != qin) {
            Rational t = (c - dp) / (dq - dp);
            out.push_back(p + (q - p) * t);
        }
    }
    return out;
}

Rational odd_area_incl_excl(const RationalPolygon& p, const std::vector<Vec2>& k) {
    if (!p.is_convex()) throw std::invalid_argument("odd_area_incl_excl: polygon must be convex");
    if (k.empty() || k.size() > 12)
        throw std::invalid_argument("odd_area_incl_excl: need 1 <= |K| <= 12");

    const std::size_t m = k.size();
    Rational total = 0;
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) idx.push_back(i);

        std::vector<Point2> cycle;
        for (const auto& v : p.vertices()) cycle.push_back(v + k[idx[0]]);
        for (std::size_t j = 1; j < idx.size() && !cycle.empty(); ++j) {
            for (std::size_t e = 0; e < p.size() && !cycle.empty(); ++e) {
                Point2 a = p[e] + k[idx[j]];
                Point2 b = p[(e + 1) % p.size()] + k[idx[j]];
                Vec2 d = b - a;
                Vec2 nrm{d.y, -d.x};
                cycle = clip_halfplane(cycle, nrm, dot(nrm, a));
            }
        }
        if (cycle.size() < 3) continue;
        Rational area = cycle_area(cycle);
        if (area == 0) continue;
        BigInt coef = BigInt(1) << (idx.size() - 1);
        total += (idx.size() % 2 ? Rational(coef) : Rational(-coef)) * area;
    }
    return total;
}

Rational clipped_area(const RationalPolygon& p, const Box& box) {
    std::vector<Point2> cycle = p.vertices();
    cycle = clip_halfplane(cycle, {1, 0}, box.xmax);
    cycle = clip_halfplane(cycle, {-1, 0}, -box.xmin);
    cycle = clip_halfplane(cycle, {0, 1}, box.ymax);
    cycle = clip_halfplane(cycle, {0, -1}, -box.ymin);
    if (cycle.size() < 3) return 0;
    return cycle_area(cycle);
}

std::string format_parity_region(const ParityRegion& region) {
    std::string out = "parity-region window " + to_string(region.window.xmin) + " " +
                      to_string(region.window.xmax) + " " + to_string(region.window.ymin) + " " +
                      to_string(region.window.ymax) + "\n";
    for (const auto& c : region.cells) {
        out += "cell parity=" + std::to_string(c.parity) + " degree=" + std::to_string(c.degree) +
               " area=" + to_string(c.cell.area);
        for (const auto& v : c.cell.vertices) out += " ; " + to_string(v);
        out += "\n";
    }
    return out;
}

}  // namespace oddcover
