#include "latpath/decompose.hpp"

#include "latpath/errors.hpp"

#include <algorithm>

namespace latpath {

std::string_view to_string(SegmentKind k) noexcept {
    return k == SegmentKind::DownDyck ? "DownDyck" : "DownUnbalanced";
}

std::vector<std::size_t> Decomposition::segment_end_indices() const {
    std::vector<std::size_t> ends;
    ends.reserve(parts.size());
    for (const auto& part : parts) {
        ends.push_back(part.segment.start_index + part.segment.steps.length());
    }
    return ends;
}

namespace {

std::size_t leftmost_max_index(std::span<const int> h, std::size_t last) {
    const auto it = std::max_element(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    return static_cast<std::size_t>(it - h.begin());
}

// Emits the parts without checking invariants.
LatticePath build(const Decomposition& d) {
    std::vector<Step> steps;
    for (const auto& part : d.parts) {
        steps.insert(steps.end(), static_cast<std::size_t>(std::max(part.uprun_length, 0)),
                     Step::Up);
        steps.insert(steps.end(), part.segment.steps.steps().begin(),
                     part.segment.steps.steps().end());
    }
    return LatticePath(std::move(steps));
}

}  // namespace

Decomposition decompose(const LatticePath& p) {
    if (p.empty()) throw DomainError(DomainErrorKind::Empty, "cannot decompose the empty path");
    if (!is_balanced(p)) {
        throw DomainError(DomainErrorKind::NotBalanced,
                          "path ends at height " + std::to_string(p.end_height()) + ", not 0");
    }
    if (p.step(0) == Step::Down) {
        throw DomainError(DomainErrorKind::DownStart,
                          "path starts with a down step; reflect it first");
    }

    const auto h = p.heights();

    // Discovery order B_1, B_2, ...; segment i spans [peaks[i], ends[i]).
    std::vector<std::size_t> peaks{max_height(p).index};
    std::vector<std::size_t> ends{p.length()};
    for (;;) {
        const std::size_t peak = peaks.back();
        std::size_t run_start = peak;
        while (run_start > 0 && p.step(run_start - 1) == Step::Up) --run_start;
        if (run_start == 0) break;  // no down step in front of this peak

        const std::size_t next = leftmost_max_index(h, run_start);
        peaks.push_back(next);
        ends.push_back(peak - static_cast<std::size_t>(h[peak] - h[next]));
    }

    Decomposition d;
    std::size_t pos = 0;
    for (std::size_t i = peaks.size(); i-- > 0;) {
        const std::size_t peak = peaks[i];
        DecompositionPart part;
        part.uprun_length = static_cast<int>(peak - pos);
        part.segment.kind = i == 0 ? SegmentKind::DownUnbalanced : SegmentKind::DownDyck;
        part.segment.steps = p.slice(peak, ends[i]);
        part.segment.start_index = peak;
        d.parts.push_back(std::move(part));
        d.peak_indices.push_back(peak);
        d.peak_heights.push_back(h[peak]);
        pos = ends[i];
    }
    return d;
}

std::vector<Violation> validate(const Decomposition& d) {
    std::vector<Violation> out;
    auto report = [&out](std::string code, std::string message) {
        out.push_back({std::move(code), std::move(message)});
    };

    if (d.parts.empty()) {
        report("structure", "decomposition has no parts");
        return out;
    }
    if (d.peak_indices.size() != d.parts.size() || d.peak_heights.size() != d.parts.size()) {
        report("structure", "peak lists and parts differ in length");
        return out;
    }

    std::size_t pos = 0;
    int height = 0;
    int prefix_max = 0;  // highest vertex strictly before the current position
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const auto& part = d.parts[i];
        const auto& seg = part.segment;
        const std::string where = "part " + std::to_string(i);
        const bool last = i + 1 == d.parts.size();

        if (part.uprun_length < 1) {
            report("uprun-length", where + ": uprun length " +
                                       std::to_string(part.uprun_length) + " < 1");
        }
        if (part.uprun_length > 0) {
            prefix_max = std::max(prefix_max, height + part.uprun_length - 1);
            pos += static_cast<std::size_t>(part.uprun_length);
            height += part.uprun_length;
        }

        if (pos != d.peak_indices[i] || height != d.peak_heights[i] || seg.start_index != pos) {
            report("peak-position", where + ": peak recorded at index " +
                                        std::to_string(d.peak_indices[i]) + " height " +
                                        std::to_string(d.peak_heights[i]) +
                                        ", segment starts at index " + std::to_string(pos) +
                                        " height " + std::to_string(height));
        }
        if (i > 0 && d.peak_heights[i] <= d.peak_heights[i - 1]) {
            report("peak-order", where + ": peak heights must strictly increase");
        }
        if (i > 0 && prefix_max >= height) {
            report("leftmost", where + ": an earlier vertex reaches the peak height");
        }

        const auto rel = seg.steps.heights();
        if (seg.steps.empty() || seg.steps.step(0) != Step::Down) {
            report("segment-shape", where + ": segment must start with a down step");
        }
        if (std::any_of(rel.begin(), rel.end(), [](int v) { return v > 0; })) {
            report("segment-shape", where + ": segment rises above its start level");
        }

        const SegmentKind expected = last ? SegmentKind::DownUnbalanced : SegmentKind::DownDyck;
        if (seg.kind != expected) {
            report("segment-kind", where + ": expected " + std::string(to_string(expected)) +
                                       ", got " + std::string(to_string(seg.kind)));
        }
        const int rel_end = seg.steps.end_height();
        if (seg.kind == SegmentKind::DownDyck && rel_end != 0) {
            report("segment-kind", where + ": DownDyck segment ends at relative height " +
                                       std::to_string(rel_end));
        }
        if (seg.kind == SegmentKind::DownUnbalanced && (rel_end >= 0 || height + rel_end != 0)) {
            report("segment-kind", where + ": DownUnbalanced segment must end at height 0 below "
                                           "its start, ends at " +
                                           std::to_string(height + rel_end));
        }

        for (std::size_t j = 0; j < seg.steps.length(); ++j) {
            prefix_max = std::max(prefix_max, height + rel[j]);
        }
        pos += seg.steps.length();
        height += rel_end;
    }
    return out;
}

LatticePath recompose(const Decomposition& d) {
    const auto violations = validate(d);
    if (!violations.empty()) {
        throw ValidationError(violations.front().code + ": " + violations.front().message);
    }
    return build(d);
}

}  // namespace latpath
