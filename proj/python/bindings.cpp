#include "oddcover/cover.hpp"
#include "oddcover/io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace oddcover;

namespace {

// Accept int, "p/q" strings, or anything whose str() parses as a rational
// (fractions.Fraction included). Exact values go back out as strings.
Rational to_rational(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj)) return Rational(BigInt(py::str(obj).cast<std::string>()));
    return parse_rational(py::str(obj).cast<std::string>());
}

Vec2 to_vec(const py::handle& obj) {
    auto seq = py::cast<py::sequence>(obj);
    if (seq.size() != 2) throw py::value_error("expected an (x, y) pair");
    return {to_rational(seq[0]), to_rational(seq[1])};
}

std::vector<Vec2> to_vecs(const py::handle& obj) {
    std::vector<Vec2> out;
    for (const auto& item : py::cast<py::sequence>(obj)) out.push_back(to_vec(item));
    return out;
}

RationalPolygon to_polygon(const py::handle& obj) { return RationalPolygon(to_vecs(obj)); }

py::tuple vec_out(const Vec2& v) { return py::make_tuple(to_string(v.x), to_string(v.y)); }

py::list vecs_out(const std::vector<Vec2>& vs) {
    py::list out;
    for (const auto& v : vs) out.append(vec_out(v));
    return out;
}

py::dict verify_out(const VerifyReport& rep) {
    py::dict d;
    d["pass"] = rep.pass;
    py::list checks;
    for (const auto& c : rep.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["pass"] = c.pass;
        cd["detail"] = c.detail;
        checks.append(cd);
    }
    d["checks"] = checks;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "odd plane coverings by polygon translates (exact rational core)";

    py::class_<OddCover>(m, "Cover")
        .def_property_readonly("density", [](const OddCover& c) { return to_string(c.density); })
        .def_property_readonly("bound", [](const OddCover& c) { return to_string(c.bound); })
        .def_property_readonly("max_degree", [](const OddCover& c) { return c.max_degree; })
        .def_property_readonly("level", [](const OddCover& c) { return c.weighting.k; })
        .def_property_readonly("residues", [](const OddCover& c) { return c.weighting.residues; })
        .def_property_readonly("u", [](const OddCover& c) { return vecs_out(c.u); })
        .def_property_readonly("vertices",
                               [](const OddCover& c) {
                                   return vecs_out(c.polygon.polygon.vertices());
                               })
        .def_property_readonly("period",
                               [](const OddCover& c) {
                                   return py::make_tuple(vec_out(c.period.g1),
                                                         vec_out(c.period.g2));
                               })
        .def_property_readonly(
            "stripes",
            [](const OddCover& c) -> py::object {
                if (!c.stripes) return py::none();
                py::list out;
                for (const auto& s : c.stripes->stripes) {
                    py::dict d;
                    d["normal"] = vec_out(s.normal);
                    d["offset"] = to_string(s.offset);
                    out.append(d);
                }
                py::dict d;
                d["terms"] = out;
                d["complemented"] = c.stripes->complemented;
                return d;
            })
        .def("to_text", [](const OddCover& c) { return format_cover_file(c); })
        .def_static("from_text", [](const std::string& s) { return parse_cover_file(s); })
        .def("__repr__", [](const OddCover& c) {
            std::ostringstream s;
            s << "<Cover density=" << to_string(c.density) << " max_degree=" << c.max_degree
              << " bound=" << to_string(c.bound) << ">";
            return s.str();
        });

    m.def(
        "build_cover", [](const py::object& verts) { return build_cover(to_polygon(verts)); },
        py::arg("vertices"));

    m.def(
        "triangle_half_lattice_cover",
        [](const py::object& a, const py::object& b, const py::object& c) {
            return triangle_half_lattice_cover(to_vec(a), to_vec(b), to_vec(c));
        },
        py::arg("a"), py::arg("b"), py::arg("c"));

    m.def(
        "verify_cover",
        [](const OddCover& c, std::size_t samples, std::uint64_t seed) {
            return verify_out(verify_cover(c, samples, seed));
        },
        py::arg("cover"), py::arg("samples") = 500, py::arg("seed") = 0);

    m.def(
        "normalize",
        [](const py::object& verts) {
            IntegerPolygon p = normalize_polygon(to_polygon(verts));
            py::dict d;
            d["vertices"] = vecs_out(p.polygon.vertices());
            d["origin"] = vec_out(p.map.origin);
            d["scale"] = to_string(p.map.scale);
            return d;
        },
        py::arg("vertices"));

    m.def(
        "odd_area",
        [](const py::object& verts, const py::object& translates) {
            return to_string(odd_area(to_polygon(verts), to_vecs(translates)));
        },
        py::arg("vertices"), py::arg("translates"));

    m.def(
        "odd_area_incl_excl",
        [](const py::object& verts, const py::object& translates) {
            return to_string(odd_area_incl_excl(to_polygon(verts), to_vecs(translates)));
        },
        py::arg("vertices"), py::arg("translates"));

    m.def(
        "compression_check",
        [](const py::object& verts, const py::object& translates) {
            auto r = compression_check(to_polygon(verts), to_vecs(translates));
            py::dict d;
            d["ratio"] = to_string(r.ratio);
            d["bound"] = to_string(r.bound);
            d["pass"] = r.pass;
            return d;
        },
        py::arg("vertices"), py::arg("translates"));

    m.def(
        "windowed_density",
        [](const OddCover& c, int n) { return to_string(windowed_density(c, n)); },
        py::arg("cover"), py::arg("n"));

    m.def(
        "render_svg", [](const OddCover& c, int window) { return render_svg(c, window); },
        py::arg("cover"), py::arg("window") = 4);

    m.def(
        "f_eval", [](int k, long long t) { return f_eval(k, BigInt(t)); }, py::arg("k"),
        py::arg("t"), "value of the level-k parity function at integer t");
}
