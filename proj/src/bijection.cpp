#include "latpath/bijection.hpp"

#include "latpath/decompose.hpp"
#include "latpath/errors.hpp"

namespace latpath {

std::string_view to_string(Direction d) noexcept {
    return d == Direction::Forward ? "Forward" : "Inverse";
}

namespace {

BijectionTrace mirrored(BijectionTrace t) {
    for (auto& b : t.b_points) b.height = -b.height;
    for (auto& g : t.g_points) g.height = -g.height;
    for (auto& level : t.reflection_lines) level = -level;
    t.conjugated = true;
    return t;
}

// Up-start balanced input: every segment of the peak decomposition is
// reflected about its peak's level, upruns are kept.
MapResult phi_up(const LatticePath& p) {
    const Decomposition d = decompose(p);

    std::vector<Step> out;
    out.reserve(p.length());
    for (const auto& part : d.parts) {
        out.insert(out.end(), static_cast<std::size_t>(part.uprun_length), Step::Up);
        for (Step s : part.segment.steps.steps()) out.push_back(flip(s));
    }
    MapResult r{LatticePath(std::move(out)), {}};

    auto& t = r.trace;
    t.direction = Direction::Forward;
    const auto ends = d.segment_end_indices();
    for (std::size_t i = d.parts.size(); i-- > 0;) {
        const HeightPoint b{d.peak_heights[i], d.peak_indices[i]};
        t.b_points.push_back(b);
        t.reflection_lines.push_back(b.height);
        if (i + 1 == d.parts.size()) {
            t.g_points.push_back({r.path.end_height(), r.path.length()});
        } else {
            t.g_points.push_back({r.path.height(ends[i]), ends[i]});
        }
    }
    return r;
}

// Up-unbalanced input of even length: undo the reflections from right to
// left, locating each peak as the rightmost crossing of its level.
MapResult phi_inverse_up(const LatticePath& p) {
    MapResult r{p, {}};
    auto& t = r.trace;
    t.direction = Direction::Inverse;

    std::size_t g = p.length();
    int level = p.end_height() / 2;
    for (;;) {
        const auto b = rightmost_crossing(r.path, level, g);
        if (!b) {
            throw InternalError("no crossing of level " + std::to_string(level) +
                                " before index " + std::to_string(g));
        }
        t.g_points.push_back({r.path.height(g), g});
        t.b_points.push_back({level, *b});
        t.reflection_lines.push_back(level);
        r.path = reflect_segment(r.path, *b, g);

        std::size_t k = *b;
        while (k > 0 && r.path.step(k - 1) == Step::Up) --k;
        if (k == 0) break;  // no down step left of this peak
        g = k;
        level = r.path.height(g);
    }
    return r;
}

}  // namespace

MapResult phi(const LatticePath& p) {
    if (!is_balanced(p)) {
        throw DomainError(DomainErrorKind::NotBalanced,
                          "phi expects a balanced path, end height is " +
                              std::to_string(p.end_height()));
    }
    if (p.empty()) return {p, {}};
    if (p.step(0) == Step::Up) return phi_up(p);

    MapResult r = phi_up(reflect_all(p));
    return {reflect_all(r.path), mirrored(std::move(r.trace))};
}

MapResult phi_inverse(const LatticePath& p) {
    if (p.empty()) {
        MapResult r{p, {}};
        r.trace.direction = Direction::Inverse;
        return r;
    }
    const PathClass c = classify(p);
    if (c != PathClass::UpUnbalanced && c != PathClass::DownUnbalanced) {
        throw DomainError(DomainErrorKind::NotUnbalanced,
                          "phi_inverse expects an unbalanced path, got " +
                              std::string(to_string(c)));
    }
    if (p.length() % 2 != 0) {
        throw DomainError(DomainErrorKind::OddLength,
                          "phi_inverse expects even length, got " + std::to_string(p.length()));
    }
    if (c == PathClass::UpUnbalanced) return phi_inverse_up(p);

    MapResult r = phi_inverse_up(reflect_all(p));
    return {reflect_all(r.path), mirrored(std::move(r.trace))};
}

bool verify_roundtrip(const LatticePath& p) {
    if (is_balanced(p)) return phi_inverse(phi(p).path).path == p;
    return phi(phi_inverse(p).path).path == p;
}

bool compose_law_check(const LatticePath& t1, const LatticePath& t2) {
    if (t1.empty() || !is_balanced(t1) || t1.step(0) != Step::Up) {
        throw PreconditionError("t1 must be a nonempty balanced path starting with an up step");
    }
    if (!is_balanced(t2)) throw PreconditionError("t2 must be balanced");
    if (max_height(t2).height > max_height(t1).height) {
        throw PreconditionError("t2 rises higher than t1");
    }
    return phi(concat(t1, t2)).path == concat(phi(t1).path, reflect_all(t2));
}

}  // namespace latpath
