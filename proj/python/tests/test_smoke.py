from fractions import Fraction

import pytest

import oddcover
from oddcover import frac

TRIANGLE = [(0, 0), (1, 0), (0, 1)]
SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def test_square_cover_is_a_tiling():
    c = oddcover.build_cover(SQUARE)
    assert frac(c.density) == 1
    assert frac(c.bound) == 1
    assert c.max_degree == 1
    assert len(c.u) == 2


def test_triangle_cover_frozen_values():
    c = oddcover.build_cover(TRIANGLE)
    assert frac(c.density) == 2
    assert frac(c.bound) == Fraction(1, 2)
    assert c.max_degree == 3
    assert len(c.u) == 4
    assert c.level == 0
    assert c.stripes is not None
    assert len(c.stripes["terms"]) == 3
    assert not c.stripes["complemented"]


def test_rational_inputs_accept_strings_and_fractions():
    lshape = [
        (0, 0),
        ("3/2", 0),
        ("3/2", "1/2"),
        (Fraction(1, 2), Fraction(1, 2)),
        ("1/2", 2),
        (0, 2),
    ]
    c = oddcover.build_cover(lshape)
    assert frac(c.density) == 6
    assert c.max_degree == 7


def test_verify_round_trip_through_text():
    c = oddcover.build_cover(TRIANGLE)
    back = oddcover.Cover.from_text(c.to_text())
    assert back.to_text() == c.to_text()
    report = oddcover.verify_cover(back, samples=100, seed=3)
    assert report["pass"]
    assert all(ch["pass"] for ch in report["checks"])


def test_half_lattice_triangle():
    c = oddcover.triangle_half_lattice_cover((0, 0), (1, 0), (0, 1))
    assert frac(c.density) == 2
    assert c.stripes is None


def test_odd_area_matches_oracle():
    k = [(0, 0), ("1/2", "1/2"), (1, 1)]
    assert frac(oddcover.odd_area(TRIANGLE, k)) == Fraction(3, 2)
    assert oddcover.odd_area(TRIANGLE, k) == oddcover.odd_area_incl_excl(TRIANGLE, k)


def test_compression_check():
    r = oddcover.compression_check(TRIANGLE, [(0, 0), ("1/2", "1/2"), (1, 1)])
    assert r["pass"]
    assert frac(r["ratio"]) == 3
    assert frac(r["bound"]) == Fraction(1, 2)
    with pytest.raises(ValueError):
        oddcover.compression_check(TRIANGLE, [(0, 0), (1, 1)])


def test_normalize():
    lshape = [(0, 0), ("3/2", 0), ("3/2", "1/2"), ("1/2", "1/2"), ("1/2", 2), (0, 2)]
    n = oddcover.normalize(lshape)
    assert frac(n["scale"]) == 2
    assert all(
        Fraction(x).denominator == 1 and Fraction(y).denominator == 1
        for x, y in n["vertices"]
    )


def test_windowed_density_and_svg():
    c = oddcover.build_cover(TRIANGLE)
    assert frac(oddcover.windowed_density(c, 8)) == 2
    svg = oddcover.render_svg(c, window=4)
    assert svg.startswith("<svg") or "<svg" in svg
    assert "</svg>" in svg


def test_f_eval():
    assert [oddcover.f_eval(1, t) for t in range(4)] == [1, 0, 1, 0]
    assert [oddcover.f_eval(2, t) for t in range(4)] == [1, 0, 0, 1]
    assert all(oddcover.f_eval(5, t) == 0 for t in range(1, 6))


def test_invalid_polygon_raises():
    with pytest.raises(ValueError):
        oddcover.build_cover([(0, 0), (1, 1), (1, 0), (0, 1)])  # bowtie
