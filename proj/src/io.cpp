#include "oddcover/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace oddcover {

namespace {

using nlohmann::ordered_json;

std::string rstr(const Rational& r) { return to_string(r); }

ordered_json vec_json(const Vec2& v) { return {rstr(v.x), rstr(v.y)}; }

ordered_json polygon_json(const RationalPolygon& p) {
    ordered_json a = ordered_json::array();
    for (const auto& v : p.vertices()) a.push_back(vec_json(v));
    return a;
}

class TokenReader {
  public:
    explicit TokenReader(const std::string& text) : in_(text) {}

    std::string next() {
        std::string t;
        if (!(in_ >> t)) throw std::invalid_argument("cover file: unexpected end of input");
        return t;
    }
    void expect(const std::string& kw) {
        std::string t = next();
        if (t != kw)
            throw std::invalid_argument("cover file: expected '" + kw + "', got '" + t + "'");
    }
    Rational rational() { return parse_rational(next()); }
    BigInt integer() {
        Rational r = rational();
        if (!is_integer(r)) throw std::invalid_argument("cover file: expected an integer");
        return num(r);
    }
    long count() {
        BigInt n = integer();
        if (n < 0 || n > 1'000'000) throw std::invalid_argument("cover file: count out of range");
        return static_cast<long>(n);
    }
    Vec2 vec() {
        Rational x = rational();
        return {std::move(x), rational()};
    }

  private:
    std::istringstream in_;
};

}  // namespace

std::string format_cover_file(const OddCover& cover) {
    std::ostringstream out;
    out << "oddcover v1\n";
    const auto& vs = cover.polygon.polygon.vertices();
    out << "polygon " << vs.size() << "\n";
    for (const auto& v : vs) out << rstr(v.x) << " " << rstr(v.y) << "\n";
    out << "normalized " << (cover.polygon.normalized ? 1 : 0) << "\n";
    out << "map " << rstr(cover.polygon.map.origin.x) << " " << rstr(cover.polygon.map.origin.y)
        << " " << rstr(cover.polygon.map.scale) << "\n";
    out << "weighting k " << cover.weighting.k << " radix " << cover.weighting.functional.radix
        << "\n";
    out << "residues " << cover.weighting.residues.size();
    for (auto r : cover.weighting.residues) out << " " << r;
    out << "\n";
    out << "basis " << rstr(cover.basis.g1.x) << " " << rstr(cover.basis.g1.y) << " "
        << rstr(cover.basis.g2.x) << " " << rstr(cover.basis.g2.y) << "\n";
    out << "u " << cover.u.size() << "\n";
    for (const auto& v : cover.u) out << rstr(v.x) << " " << rstr(v.y) << "\n";
    if (cover.stripes) {
        out << "stripes " << cover.stripes->stripes.size() << " complemented "
            << (cover.stripes->complemented ? 1 : 0) << "\n";
        for (const auto& s : cover.stripes->stripes)
            out << rstr(s.normal.x) << " " << rstr(s.normal.y) << " " << rstr(s.offset) << "\n";
    } else {
        out << "stripes none\n";
    }
    out << "period " << rstr(cover.period.g1.x) << " " << rstr(cover.period.g1.y) << " "
        << rstr(cover.period.g2.x) << " " << rstr(cover.period.g2.y) << "\n";
    out << "density " << rstr(cover.density) << "\n";
    out << "maxdegree " << cover.max_degree << "\n";
    out << "bound " << rstr(cover.bound) << "\n";
    out << "end\n";
    return out.str();
}

OddCover parse_cover_file(const std::string& text) {
    TokenReader in(text);
    in.expect("oddcover");
    in.expect("v1");

    OddCover c;
    in.expect("polygon");
    long nverts = in.count();
    std::vector<Point2> vs;
    for (long i = 0; i < nverts; ++i) vs.push_back(in.vec());
    c.polygon.polygon = RationalPolygon(vs);
    if (c.polygon.polygon.vertices() != vs)
        throw std::invalid_argument("cover file: polygon vertices not in canonical form");
    in.expect("normalized");
    c.polygon.normalized = in.integer() != 0;
    in.expect("map");
    c.polygon.map.origin = in.vec();
    c.polygon.map.scale = in.rational();
    in.expect("weighting");
    in.expect("k");
    BigInt k = in.integer();
    if (k < 0 || k > kMaxWeightingLevel) throw std::invalid_argument("cover file: bad level k");
    c.weighting.k = static_cast<int>(k);
    in.expect("radix");
    c.weighting.functional = {2, in.integer()};
    in.expect("residues");
    long nres = in.count();
    for (long i = 0; i < nres; ++i) {
        BigInt r = in.integer();
        if (r < 0 || r >= (BigInt(1) << c.weighting.k))
            throw std::invalid_argument("cover file: residue out of range");
        c.weighting.residues.push_back(static_cast<std::uint32_t>(r));
    }
    in.expect("basis");
    c.basis.g1 = in.vec();
    c.basis.g2 = in.vec();
    if (c.basis.det() == 0) throw std::invalid_argument("cover file: degenerate basis");
    in.expect("u");
    long nu = in.count();
    for (long i = 0; i < nu; ++i) c.u.push_back(in.vec());
    in.expect("stripes");
    std::string nstr = in.next();
    if (nstr != "none") {
        long ns = std::stol(nstr);
        StripeXor sx;
        in.expect("complemented");
        sx.complemented = in.integer() != 0;
        for (long i = 0; i < ns; ++i) {
            Vec2 n = in.vec();
            sx.stripes.push_back({n, in.rational()});
        }
        c.stripes = std::move(sx);
    }
    in.expect("period");
    c.period.g1 = in.vec();
    c.period.g2 = in.vec();
    if (c.period.det() == 0) throw std::invalid_argument("cover file: degenerate period");
    in.expect("density");
    c.density = in.rational();
    in.expect("maxdegree");
    c.max_degree = static_cast<int>(in.integer());
    in.expect("bound");
    c.bound = in.rational();
    in.expect("end");
    if (c.density <= 0 || c.bound * c.density != 1)
        throw std::invalid_argument("cover file: inconsistent density/bound");
    return c;
}

OddCover load_cover_file(const std::string& path) {
    return parse_cover_file(read_text_file(path));
}

void save_cover_file(const std::string& path, const OddCover& cover) {
    write_text_file(path, format_cover_file(cover));
}

OddAreaInput parse_odd_area_input(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Point2> verts;
    std::vector<Vec2> k;
    bool in_translates = false;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (a == "translates") {
            if (in_translates) throw std::invalid_argument("odd-area input: repeated 'translates'");
            in_translates = true;
            continue;
        }
        if (!(ls >> b)) throw std::invalid_argument("odd-area input: expected 'x y' pair");
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("odd-area input: trailing tokens");
        Vec2 v{parse_rational(a), parse_rational(b)};
        (in_translates ? k : verts).push_back(std::move(v));
    }
    if (!in_translates) throw std::invalid_argument("odd-area input: missing 'translates' section");
    return {RationalPolygon(verts), std::move(k)};
}

OddAreaInput load_odd_area_input(const std::string& path) {
    return parse_odd_area_input(read_text_file(path));
}

namespace {

ordered_json weighting_json(const StableWeighting& w) {
    ordered_json j;
    j["k"] = w.k;
    j["radix"] = w.functional.radix.str();
    j["residues"] = w.residues;
    return j;
}

ordered_json cover_json(const OddCover& c) {
    ordered_json j;
    j["polygon"] = polygon_json(c.polygon.polygon);
    j["normalized"] = c.polygon.normalized;
    j["weighting"] = weighting_json(c.weighting);
    j["basis"] = ordered_json::array({vec_json(c.basis.g1), vec_json(c.basis.g2)});
    ordered_json uj = ordered_json::array();
    for (const auto& v : c.u) uj.push_back(vec_json(v));
    j["u"] = std::move(uj);
    if (c.stripes) {
        ordered_json sj = ordered_json::array();
        for (const auto& s : c.stripes->stripes)
            sj.push_back({{"normal", vec_json(s.normal)}, {"offset", rstr(s.offset)}});
        j["stripes"] = std::move(sj);
        j["complemented"] = c.stripes->complemented;
    } else {
        j["stripes"] = nullptr;
    }
    j["period"] = ordered_json::array({vec_json(c.period.g1), vec_json(c.period.g2)});
    j["density"] = rstr(c.density);
    j["max_degree"] = c.max_degree;
    j["bound"] = rstr(c.bound);
    // the bound is stated for the canonical reduced polygon's area
    j["area_used"] = rstr(polygon_area(c.polygon.polygon));
    return j;
}

}  // namespace

std::string json_normalize_report(const IntegerPolygon& p) {
    ordered_json j;
    j["polygon"] = polygon_json(p.polygon);
    j["normalized"] = p.normalized;
    j["map"] = {{"origin", vec_json(p.map.origin)}, {"scale", rstr(p.map.scale)}};
    return j.dump(2) + "\n";
}

std::string json_analyze_report(const OddCover& c) {
    ordered_json j;
    j["polygon"] = polygon_json(c.polygon.polygon);
    ordered_json cj = ordered_json::array();
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        ordered_json e;
        e["direction"] = vec_json(c.classes[i].d);
        e["stripe_normal"] = vec_json(c.classes[i].stripe_normal);
        e["edges"] = c.classes[i].edges;
        ordered_json mj = ordered_json::array();
        for (const auto& m : c.markers[i].points) mj.push_back(vec_json(m));
        e["markers"] = std::move(mj);
        e["active"] = static_cast<bool>(c.active[i]);
        cj.push_back(std::move(e));
    }
    j["classes"] = std::move(cj);
    j["weighting"] = weighting_json(c.weighting);
    return j.dump(2) + "\n";
}

std::string json_cover_report(const OddCover& c) { return cover_json(c).dump(2) + "\n"; }

std::string json_verify_report(const VerifyReport& report) {
    ordered_json j;
    j["pass"] = report.pass;
    ordered_json cj = ordered_json::array();
    for (const auto& c : report.checks)
        cj.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(cj);
    return j.dump(2) + "\n";
}

std::string json_odd_area_report(const RationalPolygon& p, const std::vector<Vec2>& k,
                                 const Rational& area, const Rational& ratio) {
    ordered_json j;
    j["polygon"] = polygon_json(p);
    ordered_json kj = ordered_json::array();
    for (const auto& v : k) kj.push_back(vec_json(v));
    j["translates"] = std::move(kj);
    j["odd_area"] = rstr(area);
    j["ratio"] = rstr(ratio);
    return j.dump(2) + "\n";
}

std::string json_error(const std::string& kind, const std::string& detail) {
    ordered_json j;
    j["error"] = kind;
    j["detail"] = detail;
    return j.dump(2) + "\n";
}

std::string text_normalize_report(const IntegerPolygon& p) {
    std::ostringstream out;
    out << "normalized polygon (" << (p.normalized ? "canonical" : "as given") << ")\n";
    out << format_polygon_text(p.polygon);
    out << "map: origin " << to_string(p.map.origin) << " scale " << rstr(p.map.scale) << "\n";
    return out.str();
}

std::string text_analyze_report(const OddCover& c) {
    std::ostringstream out;
    out << "direction classes: " << c.classes.size() << "\n";
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        out << "  d=" << to_string(c.classes[i].d) << " normal=" << to_string(c.classes[i].stripe_normal)
            << " edges=" << c.classes[i].edges.size() << " markers=" << c.markers[i].points.size()
            << (c.active[i] ? " active" : " passive") << "\n";
    }
    out << "weighting: k=" << c.weighting.k << " radix=" << c.weighting.functional.radix
        << " |R|=" << c.weighting.residues.size() << "\n";
    return out.str();
}

std::string text_cover_report(const OddCover& c) {
    std::ostringstream out;
    out << "odd cover: |U|=" << c.u.size() << " density=" << rstr(c.density)
        << " max degree=" << c.max_degree << " bound=" << rstr(c.bound) << "\n";
    return out.str();
}

std::string text_verify_report(const VerifyReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks)
        out << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": " << c.detail << "\n";
    out << (report.pass ? "verification passed" : "verification FAILED") << "\n";
    return out.str();
}

namespace {

// decimal rendering of an exact rational for SVG coordinates
std::string svg_num(const Rational& r) {
    BigInt scaled = rfloor(r * 1000000);
    std::ostringstream out;
    Rational v = Rational(scaled) / 1000000;
    BigInt ip = rfloor(v);
    Rational frac = v - Rational(ip);
    out << ip.str();
    if (frac != 0) {
        BigInt digits = num(frac * 1000000);
        std::string d = digits.str();
        d.insert(d.begin(), 6 - d.size(), '0');
        while (!d.empty() && d.back() == '0') d.pop_back();
        out << "." << d;
    }
    return out.str();
}

}  // namespace

std::string render_svg(const OddCover& cover, int window, int scale) {
    if (window <= 0 || scale <= 0) throw std::invalid_argument("render_svg: bad window/scale");
    Rational h(window, 2);
    Box q{-h, h, -h, h};
    Rational s(scale);
    // svg y axis points down; flip via y -> (h - y) * scale
    auto px = [&](const Rational& x) { return svg_num((x + h) * s); };
    auto py = [&](const Rational& y) { return svg_num((h - y) * s); };

    std::ostringstream out;
    int side = window * scale;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
        << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";

    // parity cells shaded by degree
    out << "<g stroke=\"none\">\n";
    Rational px0, px1, py0, py1;
    cover.polygon.polygon.bounding_box(px0, px1, py0, py1);
    std::vector<Vec2> offsets;
    for (const auto& u : cover.u) {
        Box zbox{q.xmin - u.x - px1, q.xmax - u.x - px0, q.ymin - u.y - py1, q.ymax - u.y - py0};
        for (const auto& z : cover.translates_in_box(zbox)) offsets.push_back(z + u);
    }
    int maxdeg = std::max(cover.max_degree, 1);
    degree_decompose({cover.polygon.polygon, offsets}, q, [&](const ConvexCell& cell, int degree) {
        int shade = 240 - (200 * degree) / maxdeg;
        out << "<path d=\"M";
        for (std::size_t i = 0; i < cell.vertices.size(); ++i) {
            if (i) out << " L";
            out << px(cell.vertices[i].x) << " " << py(cell.vertices[i].y);
        }
        out << " Z\" fill=\"rgb(" << shade << "," << shade << ",255)\"/>\n";
    });
    out << "</g>\n";

    // stripe boundary lines
    if (cover.stripes) {
        out << "<g stroke=\"#cc3333\" stroke-width=\"1\">\n";
        for (const auto& st : cover.stripes->stripes) {
            const Vec2& n = st.normal;
            std::vector<Rational> vals;
            for (const Point2& corner :
                 {Point2{q.xmin, q.ymin}, Point2{q.xmax, q.ymin}, Point2{q.xmin, q.ymax},
                  Point2{q.xmax, q.ymax}})
                vals.push_back(dot(n, corner));
            Rational lo = *std::min_element(vals.begin(), vals.end());
            Rational hi = *std::max_element(vals.begin(), vals.end());
            for (BigInt m = rceil(lo + st.offset); m <= rfloor(hi + st.offset); ++m) {
                Rational c = Rational(m) - st.offset;
                Point2 a, b;
                if (n.y == 0) {
                    a = {c / n.x, q.ymin};
                    b = {c / n.x, q.ymax};
                } else {
                    a = {q.xmin, (c - n.x * q.xmin) / n.y};
                    b = {q.xmax, (c - n.x * q.xmax) / n.y};
                }
                out << "<line x1=\"" << px(a.x) << "\" y1=\"" << py(a.y) << "\" x2=\"" << px(b.x)
                    << "\" y2=\"" << py(b.y) << "\"/>\n";
            }
        }
        out << "</g>\n";
    }

    // base polygon outline at the origin translate
    out << "<g fill=\"none\" stroke=\"#222222\" stroke-width=\"2\">\n<path d=\"M";
    const auto& vs = cover.polygon.polygon.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out << " L";
        out << px(vs[i].x) << " " << py(vs[i].y);
    }
    out << " Z\"/>\n</g>\n";

    // marker points
    if (!cover.markers.empty()) {
        out << "<g fill=\"#117711\">\n";
        for (const auto& ms : cover.markers)
            for (const auto& m : ms.points)
                if (q.contains(m))
                    out << "<circle cx=\"" << px(m.x) << "\" cy=\"" << py(m.y) << "\" r=\"4\"/>\n";
        out << "</g>\n";
    }

    out << "</svg>\n";
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace oddcover
