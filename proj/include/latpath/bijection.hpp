#ifndef LATPATH_BIJECTION_HPP
#define LATPATH_BIJECTION_HPP

#include "latpath/path.hpp"

#include <vector>

namespace latpath {

enum class Direction { Forward, Inverse };

std::string_view to_string(Direction d) noexcept;

// Points and reflection levels recorded while mapping. Indices refer to the
// vertices of the path being mapped; heights are in the caller's frame even
// when the path was handled by conjugating with reflect_all.
//
// Forward: b_points are B_1, B_2, ... (discovery order), g_points are G_1
// (the end of the image) followed by the segment ends G_2, G_3, ...;
// reflection_lines[i] is the height of b_points[i].
// Inverse: the same points as recovered by the crossing search; the first
// level is half the end height of the input.
struct BijectionTrace {
    std::vector<HeightPoint> b_points;
    std::vector<HeightPoint> g_points;
    std::vector<int> reflection_lines;
    Direction direction = Direction::Forward;
    bool conjugated = false;

    friend bool operator==(const BijectionTrace&, const BijectionTrace&) = default;
};

struct MapResult {
    LatticePath path;
    BijectionTrace trace;
};

// Balanced -> unbalanced, same length. Up-start inputs become up-unbalanced
// with end height 2 * max_height; down-start inputs are handled through
// reflect_all. Throws DomainError(NotBalanced).
MapResult phi(const LatticePath& p);

// Unbalanced (or empty) -> balanced. Throws DomainError(NotUnbalanced,
// OddLength); InternalError if no crossing exists where one must.
MapResult phi_inverse(const LatticePath& p);

// Applies the map for the input's class and its inverse, and compares with
// the input. Propagates DomainError for paths in neither domain.
bool verify_roundtrip(const LatticePath& p);

// phi(t1 + t2) == phi(t1) + reflect_all(t2), for t1 balanced and up-start,
// t2 balanced, max_height(t2) <= max_height(t1). Throws PreconditionError.
bool compose_law_check(const LatticePath& t1, const LatticePath& t2);

}  // namespace latpath

#endif  // LATPATH_BIJECTION_HPP
