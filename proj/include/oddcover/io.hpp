#pragma once

#include "oddcover/cover.hpp"

#include <string>

namespace oddcover {

// --- cover file -------------------------------------------------------------
// Structured text, all scalars exact "p/q" rationals; format/parse are
// bit-exact inverses.

std::string format_cover_file(const OddCover& cover);
OddCover parse_cover_file(const std::string& text);

OddCover load_cover_file(const std::string& path);
void save_cover_file(const std::string& path, const OddCover& cover);

// --- odd-area input ---------------------------------------------------------
// Polygon vertices, then a line "translates", then one translate per line.

struct OddAreaInput {
    RationalPolygon polygon;
    std::vector<Vec2> k;
};

OddAreaInput parse_odd_area_input(const std::string& text);
OddAreaInput load_odd_area_input(const std::string& path);

// --- structured reports (JSON text) ----------------------------------------

std::string json_normalize_report(const IntegerPolygon& p);
std::string json_analyze_report(const OddCover& cover);
std::string json_cover_report(const OddCover& cover);
std::string json_verify_report(const VerifyReport& report);
std::string json_odd_area_report(const RationalPolygon& p, const std::vector<Vec2>& k,
                                 const Rational& area, const Rational& ratio);
std::string json_error(const std::string& kind, const std::string& detail);

// --- text reports -----------------------------------------------------------

std::string text_normalize_report(const IntegerPolygon& p);
std::string text_analyze_report(const OddCover& cover);
std::string text_cover_report(const OddCover& cover);
std::string text_verify_report(const VerifyReport& report);

// --- SVG --------------------------------------------------------------------
// Deterministic composite figure over the origin-centered n x n window:
// cover parity cells shaded by degree, stripe boundary lines, translate
// outlines, and marker points. Nothing is rasterized; every cell is an
// exact-coordinate path scaled by `scale`.

std::string render_svg(const OddCover& cover, int window, int scale = 80);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace oddcover
