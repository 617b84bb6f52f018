#ifndef LATPATH_RENDER_HPP
#define LATPATH_RENDER_HPP

#include "latpath/bijection.hpp"
#include "latpath/path.hpp"

#include <optional>
#include <string>

namespace latpath {

struct Annotations {
    bool show_axes = false;      // ASCII: height gutter; SVG: baseline y = 0
    bool show_peaks = true;      // 'B' marks / circles at b_points
    bool show_lines = true;      // reflection levels
    bool label_points = true;    // 'G' marks, text labels B1, G1, ...
    bool highlight_segments = true;  // SVG: reflected spans [B_i, G_i) in colour
};

// Overlays that need a trace are skipped when `trace` is empty.
struct RenderSpec {
    LatticePath path;
    std::optional<BijectionTrace> trace;
    int cell_size = 20;
    Annotations annotations;
};

inline constexpr std::size_t kMaxAsciiLength = 120;

// One column per step, '/' for Up and '\' for Down, top row first. The cell
// row r holds the steps between heights r and r + 1, so row 0 sits on the
// baseline. Trailing blanks are trimmed; every line ends with '\n'.
// Throws RangeError for paths longer than kMaxAsciiLength.
std::string render_ascii(const RenderSpec& spec);

// SVG 1.1 using svg, polyline, line, circle and text only. Vertex j sits at
// (j * cell, (H - h_j) * cell) with H the maximum height.
std::string render_svg(const RenderSpec& spec);

}  // namespace latpath

#endif  // LATPATH_RENDER_HPP
