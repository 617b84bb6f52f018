#include "latpath/cli.hpp"

#include "latpath/bijection.hpp"
#include "latpath/census.hpp"
#include "latpath/decompose.hpp"
#include "latpath/errors.hpp"
#include "latpath/render.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "json.hpp"

namespace latpath::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
    std::string path_arg;
    std::string alphabet = "ud";
    bool trace = false;
    bool json = false;
    bool timing = false;
    unsigned n = 0;
    unsigned partitions = 1;
    std::string mode = "arithmetic";
    std::string class_filter = "any";
    std::size_t length = 0;
    bool count_only = false;
    std::string svg_file;
    int cell_size = 20;
    bool axes = false;
    bool image = false;
    bool inject_fault = false;
};

Alphabet alphabet_of(const Options& o) { return o.alphabet == "ne" ? Alphabet::NE : Alphabet::UD; }

LatticePath read_path(const Options& o, std::istream& in) {
    if (o.path_arg == "-") {
        const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        return parse_path(text, alphabet_of(o));
    }
    return parse_path(o.path_arg, alphabet_of(o));
}

std::string points_text(const std::vector<HeightPoint>& pts) {
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i > 0) s += ' ';
        s += "(" + std::to_string(pts[i].index) + "," + std::to_string(pts[i].height) + ")";
    }
    return s;
}

json points_json(const std::vector<HeightPoint>& pts) {
    json arr = json::array();
    for (const auto& p : pts) arr.push_back({{"index", p.index}, {"height", p.height}});
    return arr;
}

int print_mapping(const LatticePath& input, const MapResult& r, const Options& o,
                  std::ostream& out) {
    const Alphabet alpha = alphabet_of(o);
    if (o.json) {
        json j;
        j["input"] = format_path(input, alpha);
        j["output"] = format_path(r.path, alpha);
        j["class_in"] = to_string(classify(input));
        j["class_out"] = to_string(classify(r.path));
        j["direction"] = to_string(r.trace.direction);
        j["conjugated"] = r.trace.conjugated;
        j["b_points"] = points_json(r.trace.b_points);
        j["g_points"] = points_json(r.trace.g_points);
        j["lines"] = r.trace.reflection_lines;
        out << j.dump() << '\n';
        return kSuccess;
    }
    out << format_path(r.path, alpha) << '\n';
    if (o.trace) {
        out << "class_in=" << to_string(classify(input)) << '\n';
        out << "class_out=" << to_string(classify(r.path)) << '\n';
        out << "b_points=" << points_text(r.trace.b_points) << '\n';
        out << "g_points=" << points_text(r.trace.g_points) << '\n';
        out << "lines=";
        for (std::size_t i = 0; i < r.trace.reflection_lines.size(); ++i) {
            out << (i > 0 ? " " : "") << r.trace.reflection_lines[i];
        }
        out << '\n';
        out << "conjugated=" << (r.trace.conjugated ? "true" : "false") << '\n';
    }
    return kSuccess;
}

int cmd_decompose(const Options& o, std::istream& in, std::ostream& out) {
    const Alphabet alpha = alphabet_of(o);
    const LatticePath p = read_path(o, in);
    const Decomposition d = decompose(p);
    if (o.json) {
        json j;
        j["input"] = format_path(p, alpha);
        json parts = json::array();
        for (const auto& part : d.parts) {
            parts.push_back({{"uprun", part.uprun_length},
                             {"segment", format_path(part.segment.steps, alpha)},
                             {"kind", to_string(part.segment.kind)},
                             {"start", part.segment.start_index}});
        }
        j["parts"] = parts;
        j["peak_indices"] = d.peak_indices;
        j["peak_heights"] = d.peak_heights;
        out << j.dump() << '\n';
        return kSuccess;
    }
    out << "path=" << format_path(p, alpha) << '\n';
    std::vector<HeightPoint> peaks;
    for (std::size_t i = 0; i < d.peak_indices.size(); ++i) {
        peaks.push_back({d.peak_heights[i], d.peak_indices[i]});
    }
    out << "peaks=" << points_text(peaks) << '\n';
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const auto& part = d.parts[i];
        out << "part " << i + 1 << ": uprun=" << part.uprun_length
            << " segment=" << format_path(part.segment.steps, alpha)
            << " kind=" << to_string(part.segment.kind) << " start=" << part.segment.start_index
            << '\n';
    }
    return kSuccess;
}

int print_report(const CensusReport& r, const Options& o, std::ostream& out) {
    if (o.json) {
        out << to_json(r, o.timing).dump() << '\n';
    } else {
        out << to_key_value(r, o.timing);
    }
    return r.ok() ? kSuccess : kVerificationFailed;
}

const std::map<std::string, ClassFilter> kClassFilters{
    {"any", ClassFilter::Any},
    {"balanced", ClassFilter::Balanced},
    {"up", ClassFilter::UpUnbalanced},
    {"down", ClassFilter::DownUnbalanced},
    {"unbalanced", ClassFilter::Unbalanced},
    {"other", ClassFilter::Other},
};

int cmd_enumerate(const Options& o, std::ostream& out) {
    std::uint64_t count = 0;
    for (const LatticePath& p : enumerate_class(o.length, kClassFilters.at(o.class_filter))) {
        ++count;
        if (!o.count_only) out << format_path(p, alphabet_of(o)) << '\n';
    }
    if (o.count_only) out << count << '\n';
    return kSuccess;
}

int cmd_render(const Options& o, std::istream& in, std::ostream& out) {
    RenderSpec spec;
    spec.path = read_path(o, in);
    spec.cell_size = o.cell_size;
    spec.annotations.show_axes = o.axes;
    if (o.image || o.trace) {
        const MapResult r = is_balanced(spec.path) ? phi(spec.path) : phi_inverse(spec.path);
        if (o.image) spec.path = r.path;
        if (o.trace) spec.trace = r.trace;
    }
    if (o.svg_file.empty()) {
        out << render_ascii(spec);
        return kSuccess;
    }
    const std::string svg = render_svg(spec);
    if (o.svg_file == "-") {
        out << svg;
        return kSuccess;
    }
    std::ofstream file(o.svg_file, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + o.svg_file + " for writing");
    file << svg;
    return kSuccess;
}

// Sends the alternating path UDUD... to the mirror of its image, so it
// collides with the image of DUDU... and the check must fail.
BijectionKernel faulty_kernel() {
    BijectionKernel k = BijectionKernel::standard();
    k.forward = [](const LatticePath& p) {
        const LatticePath image = phi(p).path;
        for (std::size_t j = 0; j < p.length(); ++j) {
            if (p.step(j) != (j % 2 == 0 ? Step::Up : Step::Down)) return image;
        }
        return reflect_all(image);
    };
    return k;
}

int cmd_bench(const Options& o, std::ostream& out) {
    const CensusReport r = verify_bijection(o.n, o.partitions);
    const double seconds = std::chrono::duration<double>(r.elapsed).count();
    const double paths = r.total_paths.convert_to<double>();
    out << "n=" << o.n << '\n';
    out << "partitions=" << o.partitions << '\n';
    out << "paths=" << r.total_paths.str() << '\n';
    out << "elapsed_ms="
        << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << '\n';
    out << "paths_per_sec=" << static_cast<long long>(seconds > 0 ? paths / seconds : 0) << '\n';
    out << "ok=" << (r.ok() ? "true" : "false") << '\n';
    return r.ok() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    Options o;
    CLI::App app{"Partial-reflection bijection between balanced lattice paths and unbalanced "
                 "Dyck paths",
                 "latpath"};
    app.require_subcommand(1);

    auto add_path = [&o](CLI::App* sub) {
        sub->add_option("path", o.path_arg, "Path text, or - to read stdin")->required();
        sub->add_option("--alphabet", o.alphabet, "Step letters: ud (U/D) or ne (N/E)")
            ->check(CLI::IsMember({"ud", "ne"}));
    };

    auto* map_cmd = app.add_subcommand("map", "Apply phi to a balanced path");
    add_path(map_cmd);
    map_cmd->add_flag("--trace", o.trace, "Print B/G points and reflection levels");
    map_cmd->add_flag("--json", o.json, "Emit a JSON object");

    auto* invert_cmd = app.add_subcommand("invert", "Apply the inverse to an unbalanced path");
    add_path(invert_cmd);
    invert_cmd->add_flag("--trace", o.trace, "Print B/G points and reflection levels");
    invert_cmd->add_flag("--json", o.json, "Emit a JSON object");

    auto* decompose_cmd = app.add_subcommand("decompose", "Peak decomposition of a path");
    add_path(decompose_cmd);
    decompose_cmd->add_flag("--json", o.json, "Emit a JSON object");

    auto* verify_cmd = app.add_subcommand("verify", "Exhaustive verification");
    verify_cmd->require_subcommand(1);
    auto* bij_cmd = verify_cmd->add_subcommand("bijection", "Check phi over all 2^{2n} paths");
    bij_cmd->add_option("--n", o.n, "Half-length")->required();
    bij_cmd->add_option("--partitions", o.partitions, "Rank intervals run concurrently");
    bij_cmd->add_flag("--json", o.json, "Emit a JSON object");
    bij_cmd->add_flag("--timing", o.timing, "Include elapsed time");
    bij_cmd->add_flag("--inject-fault", o.inject_fault, "Corrupt one image (harness check)")
        ->group("");
    auto* id_cmd = verify_cmd->add_subcommand("identity", "Check sum C(2i,i)C(2n-2i,n-i) = 4^n");
    id_cmd->add_option("--n", o.n, "Half-length")->required();
    id_cmd->add_option("--mode", o.mode, "arithmetic or structural")
        ->check(CLI::IsMember({"arithmetic", "structural"}));
    id_cmd->add_flag("--json", o.json, "Emit a JSON object");
    id_cmd->add_flag("--timing", o.timing, "Include elapsed time");

    auto* enum_cmd = app.add_subcommand("enumerate", "List paths of a class in rank order");
    enum_cmd->add_option("--len", o.length, "Path length")->required();
    enum_cmd->add_option("--class", o.class_filter,
                         "any, balanced, up, down, unbalanced or other")
        ->check(CLI::IsMember({"any", "balanced", "up", "down", "unbalanced", "other"}));
    enum_cmd->add_option("--alphabet", o.alphabet, "Step letters: ud or ne")
        ->check(CLI::IsMember({"ud", "ne"}));
    enum_cmd->add_flag("--count", o.count_only, "Print only the number of paths");

    auto* render_cmd = app.add_subcommand("render", "Draw a path as ASCII or SVG");
    add_path(render_cmd);
    render_cmd->add_flag("--trace", o.trace, "Overlay the trace of phi or its inverse");
    render_cmd->add_flag("--image", o.image, "Draw the image of the path instead");
    render_cmd->add_option("--svg", o.svg_file, "Write SVG to FILE (- for stdout)");
    render_cmd->add_option("--cell", o.cell_size, "SVG pixels per unit")
        ->check(CLI::PositiveNumber);
    render_cmd->add_flag("--axes", o.axes, "Draw axes");

    auto* bench_cmd = app.add_subcommand("bench", "Time the exhaustive bijection check");
    bench_cmd->add_option("--n", o.n, "Half-length")->required();
    bench_cmd->add_option("--partitions", o.partitions, "Rank intervals run concurrently");

    std::vector<std::string> argv_store{"latpath"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (map_cmd->parsed()) {
            const LatticePath p = read_path(o, in);
            return print_mapping(p, phi(p), o, out);
        }
        if (invert_cmd->parsed()) {
            const LatticePath p = read_path(o, in);
            return print_mapping(p, phi_inverse(p), o, out);
        }
        if (decompose_cmd->parsed()) return cmd_decompose(o, in, out);
        if (bij_cmd->parsed()) {
            const BijectionKernel kernel =
                o.inject_fault ? faulty_kernel() : BijectionKernel::standard();
            return print_report(verify_bijection(o.n, o.partitions, kernel), o, out);
        }
        if (id_cmd->parsed()) {
            const IdentityMode mode =
                o.mode == "structural" ? IdentityMode::Structural : IdentityMode::Arithmetic;
            return print_report(verify_identity(o.n, mode), o, out);
        }
        if (enum_cmd->parsed()) return cmd_enumerate(o, out);
        if (render_cmd->parsed()) return cmd_render(o, in, out);
        if (bench_cmd->parsed()) return cmd_bench(o, out);
    } catch (const Error& e) {
        err << "error: " << e.variant() << ": " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace latpath::cli
