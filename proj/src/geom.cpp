#include "oddcover/geom.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace oddcover {

std::string to_string(const Vec2& v) {
    return to_string(v.x) + " " + to_string(v.y);
}

namespace {

Rational signed_area2(const std::vector<Point2>& vs) {
    Rational s = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point2& a = vs[i];
        const Point2& b = vs[(i + 1) % vs.size()];
        s += cross(a, b);
    }
    return s;
}

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Do closed segments [a,b] and [c,d] share a point?
bool segments_touch(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    Rational d1 = cross(b - a, c - a);
    Rational d2 = cross(b - a, d - a);
    Rational d3 = cross(d - c, a - c);
    Rational d4 = cross(d - c, b - c);
    if (sgn(d1) * sgn(d2) < 0 && sgn(d3) * sgn(d4) < 0) return true;
    if (d1 == 0 && point_on_segment(a, b, c)) return true;
    if (d2 == 0 && point_on_segment(a, b, d)) return true;
    if (d3 == 0 && point_on_segment(c, d, a)) return true;
    if (d4 == 0 && point_on_segment(c, d, b)) return true;
    return false;
}

}  // namespace

bool point_on_segment(const Point2& a, const Point2& b, const Point2& q) {
    if (cross(b - a, q - a) != 0) return false;
    return dot(q - a, b - a) >= 0 && dot(q - b, a - b) >= 0;
}

RationalPolygon::RationalPolygon(std::vector<Point2> vertices) : verts_(std::move(vertices)) {
    if (verts_.size() < 3) throw std::invalid_argument("polygon: need at least 3 vertices");

    // Merge collinear consecutive vertices; a fold-back (spike) is not
    // repairable and gets rejected.
    for (bool changed = true; changed && verts_.size() >= 3;) {
        changed = false;
        for (std::size_t i = 0; i < verts_.size(); ++i) {
            const Point2& prev = verts_[(i + verts_.size() - 1) % verts_.size()];
            const Point2& cur = verts_[i];
            const Point2& next = verts_[(i + 1) % verts_.size()];
            if (cur == prev) throw std::invalid_argument("polygon: repeated vertex");
            if (cross(cur - prev, next - cur) == 0) {
                if (dot(cur - prev, next - cur) <= 0)
                    throw std::invalid_argument("polygon: degenerate spike at vertex " + to_string(cur));
                verts_.erase(verts_.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (verts_.size() < 3) throw std::invalid_argument("polygon: degenerate after collinear merge");

    for (std::size_t i = 0; i < verts_.size(); ++i)
        for (std::size_t j = i + 1; j < verts_.size(); ++j)
            if (verts_[i] == verts_[j]) throw std::invalid_argument("polygon: repeated vertex");

    Rational a2 = signed_area2(verts_);
    if (a2 == 0) throw std::invalid_argument("polygon: zero area");
    if (a2 < 0) std::reverse(verts_.begin(), verts_.end());

    // Simplicity: no two non-adjacent edges may touch.
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_touch(verts_[i], verts_[(i + 1) % n], verts_[j], verts_[(j + 1) % n]))
                throw std::invalid_argument("polygon: self-intersection between edges " +
                                            std::to_string(i) + " and " + std::to_string(j));
        }
    }
}

RationalPolygon RationalPolygon::translated(const Vec2& z) const {
    std::vector<Point2> vs = verts_;
    for (auto& v : vs) v = v + z;
    return RationalPolygon(std::move(vs));
}

bool RationalPolygon::is_convex() const {
    const std::size_t n = verts_.size();
    for (std::size_t i = 0; i < n; ++i) {
        // CCW with collinear runs merged, so every turn must be a strict left.
        if (cross(verts_[(i + 1) % n] - verts_[i], verts_[(i + 2) % n] - verts_[(i + 1) % n]) <= 0)
            return false;
    }
    return true;
}

bool RationalPolygon::is_integral() const {
    return std::all_of(verts_.begin(), verts_.end(), [](const Point2& p) { return p.is_integral(); });
}

void RationalPolygon::bounding_box(Rational& xmin, Rational& xmax, Rational& ymin,
                                   Rational& ymax) const {
    xmin = xmax = verts_[0].x;
    ymin = ymax = verts_[0].y;
    for (const auto& v : verts_) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
}

Rational polygon_area(const RationalPolygon& p) { return signed_area2(p.vertices()) / 2; }

PointLocation point_in_polygon(const RationalPolygon& p, const Point2& q) {
    const auto& vs = p.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i)
        if (point_on_segment(vs[i], vs[(i + 1) % n], q)) return PointLocation::Boundary;

    // Crossing number against the rightward horizontal ray. Boundary is
    // already excluded, so the half-open rule below is exact.
    int crossings = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = vs[i];
        const Point2& b = vs[(i + 1) % n];
        if ((a.y > q.y) == (b.y > q.y)) continue;
        // x-coordinate of the edge at height q.y
        Rational t = (q.y - a.y) / (b.y - a.y);
        Rational xi = a.x + t * (b.x - a.x);
        if (xi > q.x) ++crossings;
    }
    return (crossings % 2) ? PointLocation::Interior : PointLocation::Exterior;
}

namespace {

// g = gcd(a,b) >= 0 and x,y with a*x + b*y = g.
BigInt ext_gcd(BigInt a, BigInt b, BigInt& x, BigInt& y) {
    BigInt x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        BigInt q = a / b;
        BigInt t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
        t = y0 - q * y1;
        y0 = y1;
        y1 = t;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

}  // namespace

std::vector<Point2> lattice_points_on_segment(const Point2& a, const Point2& b) {
    if (a == b) throw std::invalid_argument("lattice_points_on_segment: a == b");

    // Integer line equation A x + B y = C through a and b.
    Vec2 d = b - a;
    Rational ar = d.y, br = -d.x, cr = d.y * a.x - d.x * a.y;
    BigInt L = den(ar) * den(br) * den(cr);
    BigInt A = num(ar) * (L / den(ar));
    BigInt B = num(br) * (L / den(br));
    BigInt C = num(cr) * (L / den(cr));
    BigInt g0 = gcd(gcd(abs(A), abs(B)), abs(C));
    if (g0 > 1) {
        A /= g0;
        B /= g0;
        C /= g0;
    }

    std::vector<Point2> out;
    BigInt x0, y0;
    BigInt g = ext_gcd(A, B, x0, y0);
    if (g == 0 || C % g != 0) return out;
    BigInt m = C / g;
    x0 *= m;
    y0 *= m;
    // All integer solutions: (x0 + t*B/g, y0 - t*A/g).
    BigInt sx = B / g, sy = -A / g;

    // Clamp the parameter t to the segment via whichever coordinate moves.
    Rational lo, hi;
    if (sx != 0) {
        Rational t1 = (a.x - x0) / sx, t2 = (b.x - x0) / sx;
        lo = std::min(t1, t2);
        hi = std::max(t1, t2);
    } else {
        Rational t1 = (a.y - y0) / sy, t2 = (b.y - y0) / sy;
        lo = std::min(t1, t2);
        hi = std::max(t1, t2);
    }
    for (BigInt t = rceil(lo); t <= rfloor(hi); ++t)
        out.emplace_back(Rational(x0 + t * sx), Rational(y0 + t * sy));
    std::sort(out.begin(), out.end(), [&](const Point2& u, const Point2& v) {
        return dot(u - a, d) < dot(v - a, d);
    });
    return out;
}

Vec2 primitive_direction(const Vec2& v) {
    if (!v.is_integral()) throw std::invalid_argument("primitive_direction: non-integer vector");
    if (v.is_zero()) throw std::invalid_argument("primitive_direction: zero vector");
    BigInt gx = abs(num(v.x)), gy = abs(num(v.y));
    BigInt g = gcd(gx, gy);
    Vec2 d{v.x / Rational(g), v.y / Rational(g)};
    if (d.x < 0 || (d.x == 0 && d.y < 0)) d = -d;
    return d;
}

IntegerPolygon normalize_polygon(const RationalPolygon& p) {
    const auto& vs = p.vertices();
    std::size_t o = 0;
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (vs[i] < vs[o]) o = i;
    Point2 origin = vs[o];

    BigInt L = 1;
    for (const auto& v : vs) {
        L = L / gcd(L, den(v.x - origin.x)) * den(v.x - origin.x);
        L = L / gcd(L, den(v.y - origin.y)) * den(v.y - origin.y);
    }
    Rational scale{L};

    auto all_even = [&](const Rational& s) {
        for (const auto& v : vs) {
            Point2 q = (v - origin) * s;
            if (num(q.x) % 2 != 0 || num(q.y) % 2 != 0) return false;
        }
        return true;
    };
    while (all_even(scale)) scale /= 2;

    std::vector<Point2> nv;
    nv.reserve(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        nv.push_back((vs[(o + i) % vs.size()] - origin) * scale);

    IntegerPolygon out{RationalPolygon(std::move(nv)), true, AffineRecord{origin, scale}};
    return out;
}

RationalPolygon parse_polygon_text(const std::string& text) {
    std::vector<Point2> vs;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string xs, ys;
        if (!(ls >> xs)) continue;  // blank
        if (!(ls >> ys)) throw std::invalid_argument("polygon text line " + std::to_string(lineno) +
                                                     ": expected two rationals");
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("polygon text line " + std::to_string(lineno) +
                                        ": trailing tokens");
        vs.emplace_back(parse_rational(xs), parse_rational(ys));
    }
    return RationalPolygon(std::move(vs));
}

RationalPolygon load_polygon_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open polygon file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_polygon_text(ss.str());
}

std::string format_polygon_text(const RationalPolygon& p) {
    std::string out;
    for (const auto& v : p.vertices()) out += to_string(v) + "\n";
    return out;
}

}  // namespace oddcover
