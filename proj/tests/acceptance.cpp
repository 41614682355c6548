// End-to-end acceptance suite. Each numbered criterion prints exactly one
// PASS/FAIL line; the process exits nonzero if any criterion fails.

#include "oddcover/cover.hpp"
#include "oddcover/io.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace oddcover;

namespace {

int failures = 0;

void report(int n, bool pass, const std::string& detail) {
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " - " << detail
              << std::endl;
    if (!pass) ++failures;
}

Rational rand_rat(std::mt19937_64& rng, int span, int maxden) {
    int d = std::uniform_int_distribution<int>(1, maxden)(rng);
    int n = std::uniform_int_distribution<int>(-span * d, span * d)(rng);
    return Rational(n, d);
}

// Random star-shaped polygon with small rational coordinates, capped so the
// certified density bound stays moderate.
RationalPolygon random_polygon(std::mt19937_64& rng, int n) {
    int hi = n <= 4 ? 5 : (n == 5 ? 3 : 2);
    std::uniform_int_distribution<int> numd(0, hi), dend(1, 2);
    while (true) {
        std::vector<Point2> pts;
        for (int i = 0; i < n; ++i)
            pts.push_back({Rational(numd(rng), dend(rng)), Rational(numd(rng), dend(rng))});
        Point2 c{0, 0};
        for (auto& p : pts) c = c + p;
        c = c * Rational(1, n);
        auto lower = [&](const Point2& p) {
            Vec2 d = p - c;
            return d.y < 0 || (d.y == 0 && d.x < 0);
        };
        std::sort(pts.begin(), pts.end(), [&](const Point2& a, const Point2& b) {
            bool ha = lower(a), hb = lower(b);
            if (ha != hb) return hb;
            return cross(a - c, b - c) > 0;
        });
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            Vec2 da = pts[i] - c, db = pts[(i + 1) % n] - c;
            if (da.is_zero() || cross(da, db) == 0) ok = false;
        }
        if (!ok) continue;
        try {
            RationalPolygon p(pts);
            if (p.size() != std::size_t(n)) continue;
            IntegerPolygon ip = normalize_polygon(p);
            auto cls = direction_classes(ip);
            Rational cap = polygon_area(ip.polygon) *
                           Rational(BigInt(std::max<std::size_t>(
                               2, std::size_t(1) << (cls.size() - 1))));
            if (cap > 64) continue;
            return p;
        } catch (...) {
            continue;
        }
    }
}

// 25-polygon corpus: five fixed shapes plus twenty generated ones.
std::vector<RationalPolygon> build_corpus() {
    std::vector<RationalPolygon> corpus = {
        RationalPolygon({{0, 0}, {1, 0}, {0, 1}}),
        RationalPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}),
        // centrally symmetric hexagon: every direction class has two edges
        RationalPolygon({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}}),
        // convex pentagon without parallel edges
        RationalPolygon({{0, 0}, {2, 0}, {3, 2}, {1, 3}, {-1, 1}}),
        // non-convex rectilinear L with half-integer vertices
        RationalPolygon({{0, 0},
                         {Rational(3, 2), 0},
                         {Rational(3, 2), Rational(1, 2)},
                         {Rational(1, 2), Rational(1, 2)},
                         {Rational(1, 2), 2},
                         {0, 2}}),
    };
    std::mt19937_64 rng(20260823);
    int sizes[20] = {3, 4, 5, 6, 7, 3, 4, 5, 6, 7, 3, 4, 5, 6, 7, 3, 4, 5, 6, 7};
    for (int s : sizes) corpus.push_back(random_polygon(rng, s));
    return corpus;
}

template <typename Eval>
Point2 generic_point(std::mt19937_64& rng, const Eval& eval) {
    for (;;) {
        Point2 x{rand_rat(rng, 4, 97), rand_rat(rng, 4, 97)};
        if (eval(x) != Membership::Boundary) return x;
    }
}

void criterion1() {
    bool ok = true;
    std::ostringstream why;
    for (long t = -64; t <= 64 && ok; ++t)
        if (f_eval(1, t) != (t % 2 == 0 ? 1 : 0)) ok = false, why << "f1(" << t << ")";
    for (long t = -64; t <= 64 && ok; ++t) {
        long m = ((t % 4) + 4) % 4;
        if (f_eval(2, t) != (m == 0 || m == 3 ? 1 : 0)) ok = false, why << "f2(" << t << ")";
    }
    for (int k = 1; k <= 20 && ok; ++k)
        for (int t = 1; t <= k; ++t)
            if (f_eval(k, t) != 0) ok = false, why << "f" << k << "(" << t << ") != 0";
    // exact 2^k periodicity: the periodic extension must satisfy the
    // recursion f_k(t+1) = f_k(t) ^ f_(k-1)(t) at every point incl. the wrap
    for (int k = 1; k <= 12 && ok; ++k) {
        auto table = period_table(k);
        auto prev = period_table(k - 1);
        if (table.size() != std::size_t(1) << k || table[0] != 1) {
            ok = false;
            why << "f" << k << " table malformed";
            break;
        }
        for (std::size_t t = 0; t < table.size() && ok; ++t)
            if (table[(t + 1) % table.size()] != (table[t] ^ prev[t % prev.size()]))
                ok = false, why << "f" << k << " recursion breaks at t=" << t;
    }
    report(1, ok,
           ok ? "f1/f2 exact, f_k(1..k)=0 for k<=20, 2^k periodicity exact for k<=12"
              : why.str());
}

void criterion2() {
    bool ok = true;
    std::ostringstream why;
    std::mt19937_64 rng(101);

    StripePattern s{{2, 3}, Rational(1, 5)};
    Vec2 v_full{2, -1};  // normal . v = 1
    ok = ok && annihilator_check(s, v_full).kind == AnnihilatorKind::Full;
    Vec2 v_half{Rational(1, 4), 0};  // normal . v = 1/2
    auto res = annihilator_check(s, v_half);
    ok = ok && res.kind == AnnihilatorKind::Halved && res.halved &&
         res.halved->normal == Vec2{4, 6};
    if (!ok) why << "symbolic classification";

    StripePattern full_shift{s.normal, s.offset - dot(s.normal, v_full)};
    StripePattern half_shift{s.normal, s.offset - dot(s.normal, v_half)};
    for (int i = 0; i < 100000 && ok; ++i) {
        Point2 x = generic_point(rng, [&](const Point2& p) {
            for (const StripePattern* sp : {&s, &full_shift, &half_shift, &*res.halved})
                if (stripe_member(*sp, p) == Membership::Boundary) return Membership::Boundary;
            return Membership::In;
        });
        bool in_s = stripe_member(s, x) == Membership::In;
        if ((in_s != (stripe_member(full_shift, x) == Membership::In)) != true)
            ok = false, why << "full annihilation at " << to_string(x);
        bool halved_lhs = in_s != (stripe_member(half_shift, x) == Membership::In);
        bool halved_rhs = stripe_member(*res.halved, x) == Membership::In;
        if (halved_lhs != halved_rhs) ok = false, why << "halved identity at " << to_string(x);
    }

    // S (*) {0, 2v/3} with U = {0, v/3, 2v/3} is empty
    Vec2 v{0, 1};
    std::vector<WeightedStripeTerm> terms = {{{{0, 1}, 0}, {{0, 0}, v * Rational(2, 3)}}};
    std::vector<Vec2> u = {{0, 0}, v * Rational(1, 3), v * Rational(2, 3)};
    for (int i = 0; i < 100000 && ok; ++i) {
        Point2 x =
            generic_point(rng, [&](const Point2& p) { return covered_eval(terms, u, p); });
        if (covered_eval(terms, u, x) != Membership::Out)
            ok = false, why << "thirds example covered at " << to_string(x);
    }
    report(2, ok,
           ok ? "stripe identities exact (symbolic + 1e5 samples); thirds example empty"
              : why.str());
}

void criterion3() {
    bool ok = true;
    std::ostringstream why;
    std::mt19937_64 rng(102);
    const Vec2 normals[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}};
    for (int k = 2; k <= 6 && ok; ++k) {
        std::vector<WeightedStripeTerm> terms;
        for (int i = 0; i < k; ++i) {
            WeightedStripeTerm t;
            t.stripe = {normals[i], i == 0 ? Rational(0) : rand_rat(rng, 1, 3)};
            t.offsets = {{0, 0}};
            if (i > 0 && rng() % 2)
                t.offsets.push_back({Rational(1 + int(rng() % 2)), Rational(int(rng() % 2))});
            terms.push_back(std::move(t));
        }
        auto u = stripes2_translates(terms);
        if (u.size() != std::size_t(1) << (k - 1)) {
            ok = false;
            why << "k=" << k << ": |U|=" << u.size();
            break;
        }
        auto rep = check_full_cover_cells(terms, u);
        if (!rep.pass) {
            ok = false;
            why << "k=" << k << ": " << rep.detail;
        }
    }
    report(3, ok, ok ? "k=2..6: |U|=2^(k-1), exact period-cell cover certified" : why.str());
}

void criterion4() {
    bool ok = true;
    std::ostringstream why;

    OddCover half = triangle_half_lattice_cover({0, 0}, {1, 0}, {0, 1});
    auto [maxdeg, all_odd] = exact_period_degrees(half);
    if (half.density != 2 || !all_odd || maxdeg != 3) {
        ok = false;
        why << "half-lattice cover: density " << to_string(half.density) << " maxdeg "
            << maxdeg;
    }

    RationalPolygon tri({{0, 0}, {1, 0}, {0, 1}});
    OddCover c = build_cover(tri);
    if (c.density != 2 || c.u.size() != 4) {
        ok = false;
        why << "; build_cover: density " << to_string(c.density) << " |U|=" << c.u.size();
    }

    std::mt19937_64 rng(103);
    for (int iter = 0; iter < 200 && ok; ++iter) {
        std::size_t n = 1 + 2 * (rng() % 4);  // 1, 3, 5, 7
        std::vector<Vec2> k;
        for (std::size_t i = 0; i < n; ++i)
            k.push_back({rand_rat(rng, 2, 4), rand_rat(rng, 2, 4)});
        auto r = compression_check(c, tri, k);
        if (!r.pass || r.ratio < Rational(1, 2)) {
            ok = false;
            why << "K of size " << n << " gives ratio " << to_string(r.ratio);
        }
    }
    report(4, ok,
           ok ? "half-lattice density 2 with degrees in {1,3}; build_cover density 2, |U|=4; "
                "200 random odd K keep ratio >= 1/2"
              : why.str());
}

void criterion5() {
    OddCover c = build_cover(RationalPolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    auto [maxdeg, all_odd] = exact_period_degrees(c);
    bool ok = c.density == 1 && c.bound == 1 && maxdeg == 1 && all_odd;
    std::ostringstream d;
    d << "square: density " << to_string(c.density) << ", bound " << to_string(c.bound)
      << ", degrees == 1: " << (maxdeg == 1 && all_odd ? "yes" : "no");
    report(5, ok, d.str());
}

void criterion6(const std::vector<RationalPolygon>& corpus, std::vector<OddCover>& covers) {
    bool ok = true;
    std::ostringstream why;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        try {
            OddCover c = build_cover(corpus[i]);
            Rational cap =
                polygon_area(c.polygon.polygon) *
                Rational(BigInt(std::max<std::size_t>(
                    2, std::size_t(1) << (c.classes.size() - 1))));
            if (c.density > cap) {
                ok = false;
                why << "polygon " << i << ": density " << to_string(c.density)
                    << " exceeds cap " << to_string(cap) << "; ";
            }
            VerifyReport rep = verify_cover(c, 200, 42 + i);
            if (!rep.pass) {
                ok = false;
                why << "polygon " << i << ": ";
                for (const auto& ch : rep.checks)
                    if (!ch.pass) why << ch.name << " (" << ch.detail << ") ";
            }
            covers.push_back(std::move(c));
        } catch (const std::exception& e) {
            ok = false;
            why << "polygon " << i << ": exception " << e.what() << "; ";
            covers.emplace_back();
        }
    }
    report(6, ok,
           ok ? "25-polygon corpus: all four verification layers pass, density within the "
                "certified cap"
              : why.str());
}

void criterion7(const std::vector<RationalPolygon>& corpus) {
    bool ok = true;
    std::ostringstream why;
    std::mt19937_64 rng(104);
    std::vector<std::size_t> convex;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (corpus[i].is_convex()) convex.push_back(i);
    int instances = 0;
    for (std::size_t pick = 0; instances < 108 && ok && !convex.empty(); ++pick) {
        std::size_t i = convex[pick % convex.size()];
        std::size_t n = 1 + rng() % 6;
        std::vector<Vec2> k;
        for (std::size_t j = 0; j < n; ++j)
            k.push_back({rand_rat(rng, 2, 3), rand_rat(rng, 2, 3)});
        Rational direct = odd_area(corpus[i], k);
        Rational oracle = odd_area_incl_excl(corpus[i], k);
        if (direct != oracle) {
            ok = false;
            why << "polygon " << i << ", |K|=" << n << ": " << to_string(direct)
                << " != " << to_string(oracle);
        }
        ++instances;
    }
    if (instances < 100 && ok) {
        ok = false;
        why << "only " << instances << " instances (no convex corpus polygons?)";
    }
    std::ostringstream d;
    d << instances << " convex instances: odd_area == inclusion-exclusion oracle";
    report(7, ok, ok ? d.str() : why.str());
}

void criterion8() {
    OddCover c = build_cover(RationalPolygon({{0, 0}, {1, 0}, {0, 1}}));
    bool ok = true;
    std::ostringstream d;
    Rational prev_c = -1;
    d << "triangle windowed density:";
    for (int n : {10, 20, 40, 80}) {
        Rational rho = windowed_density(c, n);
        Rational err = rho > 2 ? rho - 2 : Rational(2) - rho;
        Rational cn = err * n;  // fitted constant at this n
        d << " rho_" << n << "=" << to_string(rho);
        if (prev_c >= 0 && cn > prev_c) ok = false;
        prev_c = cn;
    }
    report(8, ok, d.str() + (ok ? " (C_n monotone along doublings)" : " (C_n not monotone)"));
}

void criterion9(const std::vector<OddCover>& covers) {
    bool ok = true;
    std::ostringstream why;
    for (std::size_t i = 0; i < covers.size(); ++i) {
        if (covers[i].polygon.polygon.size() == 0) continue;  // failed earlier
        auto check = check_property1(covers[i], 100, 7 + i);
        if (!check.pass) {
            ok = false;
            why << "polygon " << i << ": " << check.detail << "; ";
        }
    }
    report(9, ok,
           ok ? "100 arrangement edges per corpus polygon: boundary counts odd exactly on "
                "active lines"
              : why.str());
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    auto corpus = build_corpus();
    std::vector<OddCover> covers;
    criterion6(corpus, covers);
    criterion7(corpus);
    criterion8();
    criterion9(covers);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << " (" << ms
              << " ms)" << std::endl;
    return failures == 0 ? 0 : 1;
}
