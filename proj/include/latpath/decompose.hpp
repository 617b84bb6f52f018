#ifndef LATPATH_DECOMPOSE_HPP
#define LATPATH_DECOMPOSE_HPP

#include "latpath/path.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace latpath {

// Peak decomposition of an up-starting balanced path:
//
//   T = [ups, D(B_n), ups, D(B_{n-1}), ..., ups, D(B_2), ups, D'(B_1)]
//
// B_1 is the leftmost global maximum. Each D(B_i) starts with a Down step at
// B_i, never rises above B_i's level and returns to it; D'(B_1) descends
// from B_1 and ends at height 0. Peaks are found right to left (B_1 first)
// but stored left to right, in the order they are emitted.

enum class SegmentKind { DownDyck, DownUnbalanced };

std::string_view to_string(SegmentKind k) noexcept;

struct Segment {
    SegmentKind kind = SegmentKind::DownDyck;
    LatticePath steps;            // heights relative to the segment start
    std::size_t start_index = 0;  // vertex index of the peak in the parent path

    friend bool operator==(const Segment&, const Segment&) = default;
};

struct DecompositionPart {
    int uprun_length = 0;
    Segment segment;

    friend bool operator==(const DecompositionPart&, const DecompositionPart&) = default;
};

struct Decomposition {
    std::vector<DecompositionPart> parts;
    std::vector<std::size_t> peak_indices;  // B_n, ..., B_1
    std::vector<int> peak_heights;

    // Vertex index at which each segment ends (G_n, ..., G_2, then the path end).
    std::vector<std::size_t> segment_end_indices() const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct Violation {
    std::string code;  // "uprun-length", "segment-kind", "peak-order", ...
    std::string message;
};

// Throws DomainError (Empty, NotBalanced, DownStart).
Decomposition decompose(const LatticePath& p);

// Throws ValidationError naming the first violated invariant.
LatticePath recompose(const Decomposition& d);

std::vector<Violation> validate(const Decomposition& d);

}  // namespace latpath

#endif  // LATPATH_DECOMPOSE_HPP
