#include "latpath/render.hpp"

#include "latpath/errors.hpp"

#include <algorithm>
#include <sstream>

namespace latpath {

namespace {

class CharGrid {
public:
    CharGrid(int row_lo, int row_hi, std::size_t width)
        : row_lo_(row_lo), rows_(static_cast<std::size_t>(row_hi - row_lo + 1),
                                 std::string(width, ' ')) {}

    char at(int row, std::size_t col) const { return rows_[index(row)][col]; }
    void put(int row, std::size_t col, char c) { rows_[index(row)][col] = c; }
    bool free(int row, std::size_t col) const {
        const char c = at(row, col);
        return c == ' ' || c == '-';
    }

    std::string str(bool gutter) const {
        std::ostringstream out;
        for (std::size_t k = rows_.size(); k-- > 0;) {
            std::string line = rows_[k];
            if (gutter) {
                std::string label = std::to_string(row_lo_ + static_cast<int>(k));
                line = std::string(label.size() < 3 ? 3 - label.size() : 0, ' ') + label + " |" +
                       line;
            }
            line.erase(line.find_last_not_of(' ') + 1);
            out << line << '\n';
        }
        return out.str();
    }

private:
    std::size_t index(int row) const { return static_cast<std::size_t>(row - row_lo_); }

    int row_lo_;
    std::vector<std::string> rows_;
};

// Cell row for a mark on vertex (index, height): above the vertex, or below
// it when a step already occupies that cell.
int mark_row(const CharGrid& grid, const HeightPoint& pt) {
    return grid.free(pt.height, pt.index) ? pt.height : pt.height - 1;
}

// Trace points belong to either side of the map; only those lying on the
// drawn path are marked.
bool on_path(const LatticePath& p, const HeightPoint& pt) {
    return pt.index <= p.length() && p.height(pt.index) == pt.height;
}

}  // namespace

std::string render_ascii(const RenderSpec& spec) {
    const LatticePath& p = spec.path;
    if (p.length() > kMaxAsciiLength) {
        throw RangeError("ASCII rendering supports at most " + std::to_string(kMaxAsciiLength) +
                         " steps, got " + std::to_string(p.length()));
    }
    const auto& a = spec.annotations;
    const BijectionTrace* trace = spec.trace ? &*spec.trace : nullptr;
    const auto h = p.heights();

    int row_lo = 0;
    int row_hi = -1;
    std::size_t width = p.length();
    for (std::size_t j = 0; j < p.length(); ++j) {
        const int row = std::min(h[j], h[j + 1]);
        row_lo = std::min(row_lo, row);
        row_hi = std::max(row_hi, row);
    }
    if (trace) {
        auto include_point = [&](const HeightPoint& pt) {
            if (!on_path(p, pt)) return;
            row_lo = std::min(row_lo, pt.height - 1);
            row_hi = std::max(row_hi, pt.height);
            width = std::max(width, pt.index + 1);
        };
        if (a.show_peaks) std::for_each(trace->b_points.begin(), trace->b_points.end(), include_point);
        if (a.label_points) std::for_each(trace->g_points.begin(), trace->g_points.end(), include_point);
        if (a.show_lines) {
            for (int level : trace->reflection_lines) {
                row_lo = std::min(row_lo, level);
                row_hi = std::max(row_hi, level);
            }
        }
    }
    if (row_hi < row_lo) return {};

    CharGrid grid(row_lo, row_hi, width);
    for (std::size_t j = 0; j < p.length(); ++j) {
        if (p.step(j) == Step::Up) {
            grid.put(h[j], j, '/');
        } else {
            grid.put(h[j + 1], j, '\\');
        }
    }
    if (trace) {
        if (a.show_lines) {
            for (int level : trace->reflection_lines) {
                for (std::size_t col = 0; col < width; ++col) {
                    if (grid.at(level, col) == ' ') grid.put(level, col, '-');
                }
            }
        }
        if (a.label_points) {
            for (const auto& g : trace->g_points) {
                if (on_path(p, g)) grid.put(mark_row(grid, g), g.index, 'G');
            }
        }
        if (a.show_peaks) {
            for (const auto& b : trace->b_points) {
                if (on_path(p, b)) grid.put(mark_row(grid, b), b.index, 'B');
            }
        }
    }
    return grid.str(a.show_axes);
}

std::string render_svg(const RenderSpec& spec) {
    const LatticePath& p = spec.path;
    const auto& a = spec.annotations;
    const BijectionTrace* trace = spec.trace ? &*spec.trace : nullptr;
    const long cell = std::max(1, spec.cell_size);
    const auto h = p.heights();

    const int top = *std::max_element(h.begin(), h.end());
    int bottom = *std::min_element(h.begin(), h.end());
    if (trace && a.show_lines) {
        for (int level : trace->reflection_lines) bottom = std::min(bottom, level);
    }
    auto x_of = [cell](std::size_t j) { return static_cast<long>(j) * cell; };
    auto y_of = [cell, top](int height) { return static_cast<long>(top - height) * cell; };

    const long width = static_cast<long>(p.length()) * cell;
    const long height = static_cast<long>(top - bottom) * cell;
    const long margin = cell;

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << width + 2 * margin << "\" height=\"" << height + 2 * margin << "\" viewBox=\""
        << -margin << ' ' << -margin << ' ' << width + 2 * margin << ' ' << height + 2 * margin
        << "\">\n";

    if (a.show_axes) {
        out << "  <line class=\"axis\" x1=\"0\" y1=\"" << y_of(0) << "\" x2=\"" << width
            << "\" y2=\"" << y_of(0) << "\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
    }
    if (trace && a.show_lines) {
        for (int level : trace->reflection_lines) {
            out << "  <line class=\"reflection\" x1=\"0\" y1=\"" << y_of(level) << "\" x2=\""
                << width << "\" y2=\"" << y_of(level)
                << "\" stroke=\"#1f77b4\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n";
        }
    }

    out << "  <polyline id=\"path\" points=\"";
    for (std::size_t j = 0; j < h.size(); ++j) {
        if (j > 0) out << ' ';
        out << x_of(j) << ',' << y_of(h[j]);
    }
    out << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";

    if (trace && a.highlight_segments) {
        const std::size_t spans = std::min(trace->b_points.size(), trace->g_points.size());
        for (std::size_t i = 0; i < spans; ++i) {
            const std::size_t from = trace->b_points[i].index;
            const std::size_t to = std::min(trace->g_points[i].index, p.length());
            if (from >= to) continue;
            out << "  <polyline class=\"segment\" points=\"";
            for (std::size_t j = from; j <= to; ++j) {
                if (j > from) out << ' ';
                out << x_of(j) << ',' << y_of(h[j]);
            }
            out << "\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"3\" stroke-opacity=\"0.6\"/>\n";
        }
    }

    const long radius = std::max(2L, cell / 5);
    auto point = [&](const HeightPoint& pt, const char* prefix, std::size_t ordinal,
                     const char* colour) {
        if (!on_path(p, pt)) return;
        out << "  <circle cx=\"" << x_of(pt.index) << "\" cy=\"" << y_of(pt.height) << "\" r=\""
            << radius << "\" fill=\"" << colour << "\"/>\n";
        if (a.label_points) {
            out << "  <text x=\"" << x_of(pt.index) + radius << "\" y=\""
                << y_of(pt.height) - radius << "\" font-family=\"monospace\" font-size=\""
                << std::max(8L, cell / 2) << "\">" << prefix << ordinal << "</text>\n";
        }
    };
    if (trace && a.show_peaks) {
        for (std::size_t i = 0; i < trace->b_points.size(); ++i) {
            point(trace->b_points[i], "B", i + 1, "#d62728");
        }
    }
    if (trace && a.label_points) {
        for (std::size_t i = 0; i < trace->g_points.size(); ++i) {
            point(trace->g_points[i], "G", i + 1, "#2ca02c");
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace latpath
