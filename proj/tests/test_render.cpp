#include "latpath/errors.hpp"
#include "latpath/render.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <sstream>

#include "doctest.h"

using namespace latpath;

namespace {

LatticePath P(const char* s) { return parse_path(s); }

RenderSpec spec_of(const char* path, int cell = 10) {
    RenderSpec s;
    s.path = P(path);
    s.cell_size = cell;
    return s;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

boost::property_tree::ptree parse_xml(const std::string& xml) {
    std::istringstream in(xml);
    boost::property_tree::ptree tree;
    boost::property_tree::read_xml(in, tree);
    return tree;
}

std::string polyline_points(const boost::property_tree::ptree& svg) {
    for (const auto& [name, child] : svg) {
        if (name == "polyline" && child.get<std::string>("<xmlattr>.id", "") == "path") {
            return child.get<std::string>("<xmlattr>.points");
        }
    }
    return "<missing>";
}

}  // namespace

TEST_CASE("ascii: smallest paths") {
    CHECK(render_ascii(spec_of("UD")) == "/\\\n");
    CHECK(render_ascii(spec_of("UU")) == " /\n/\n");
    CHECK(render_ascii(spec_of("")).empty());
    CHECK(render_ascii(spec_of("DU")) == "\\/\n");
}

TEST_CASE("ascii: rows below the baseline") {
    CHECK(render_ascii(spec_of("UDDU")) == "/\\\n  \\/\n");
}

TEST_CASE("ascii: peaks of UDUUDD") {
    RenderSpec s = spec_of("UDUUDD");
    s.trace = phi(s.path).trace;
    const auto rows = lines_of(render_ascii(s));
    std::vector<std::size_t> b_columns;
    for (const auto& row : rows) {
        for (std::size_t col = 0; col < row.size(); ++col) {
            if (row[col] == 'B') b_columns.push_back(col);
        }
    }
    std::sort(b_columns.begin(), b_columns.end());
    CHECK(b_columns == std::vector<std::size_t>{1, 4});
    CHECK(render_ascii(s) ==
          "----B-\n"
          "-B-/\\-\n"
          "/\\/G \\\n");

    // On the image, G_1 = (6, 4) is a vertex and gets marked.
    s.path = phi(s.path).path;
    CHECK(render_ascii(s) ==
          "      G\n"
          "     /\n"
          "----/--\n"
          "-/\\/B--\n"
          "/B G\n");
}

TEST_CASE("ascii: axes gutter and size limit") {
    RenderSpec s = spec_of("UUDD");
    s.annotations.show_axes = true;
    CHECK(render_ascii(s) == "  1 | /\\\n  0 |/  \\\n");
    CHECK_THROWS_AS((void)render_ascii(RenderSpec{LatticePath(std::vector<Step>(121, Step::Up))}),
                    RangeError);
}

TEST_CASE("svg: coordinates of UD") {
    const auto svg = render_svg(spec_of("UD", 10));
    const auto tree = parse_xml(svg);
    CHECK(polyline_points(tree.get_child("svg")) == "0,10 10,0 20,10");
}

TEST_CASE("svg: empty path is still a document") {
    const auto tree = parse_xml(render_svg(spec_of("", 10)));
    CHECK(polyline_points(tree.get_child("svg")) == "0,0");
}

TEST_CASE("svg: inverse trace draws the first reflection level dashed") {
    RenderSpec s = spec_of("UUDUUU", 10);
    s.trace = phi_inverse(s.path).trace;
    const auto tree = parse_xml(render_svg(s));
    // Max height 4, so level 2 sits at y = (4 - 2) * 10.
    std::vector<std::string> dashed_y;
    for (const auto& [name, child] : tree.get_child("svg")) {
        if (name == "line" && child.get<std::string>("<xmlattr>.class", "") == "reflection") {
            CHECK_FALSE(child.get<std::string>("<xmlattr>.stroke-dasharray", "").empty());
            dashed_y.push_back(child.get<std::string>("<xmlattr>.y1"));
        }
    }
    CHECK(dashed_y == std::vector<std::string>{"20", "30"});
}

TEST_CASE("svg: vertex count and height map hold on random paths") {
    for (std::uint64_t code = 0; code < 4096; code += 37) {
        RenderSpec s{unrank(12, code)};
        s.cell_size = 7;
        if (is_balanced(s.path)) s.trace = phi(s.path).trace;
        const std::string svg = render_svg(s);
        CHECK(svg == render_svg(s));  // deterministic
        const auto tree = parse_xml(svg);
        std::istringstream pts(polyline_points(tree.get_child("svg")));
        const auto h = s.path.heights();
        const int top = *std::max_element(h.begin(), h.end());
        std::size_t j = 0;
        for (std::string vertex; pts >> vertex; ++j) {
            const auto comma = vertex.find(',');
            REQUIRE(j < h.size());
            CHECK(std::stol(vertex.substr(0, comma)) == static_cast<long>(j) * 7);
            CHECK(std::stol(vertex.substr(comma + 1)) == static_cast<long>(top - h[j]) * 7);
        }
        CHECK(j == s.path.length() + 1);
    }
}

TEST_CASE("svg: uses only the allowed elements") {
    RenderSpec s = spec_of("UDUUDD", 12);
    s.trace = phi(s.path).trace;
    s.annotations.show_axes = true;
    const auto tree = parse_xml(render_svg(s));
    for (const auto& [name, child] : tree.get_child("svg")) {
        const bool allowed = name == "<xmlattr>" || name == "polyline" || name == "line" ||
                             name == "circle" || name == "text";
        CHECK_MESSAGE(allowed, name);
    }
}
