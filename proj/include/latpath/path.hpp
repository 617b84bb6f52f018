#ifndef LATPATH_PATH_HPP
#define LATPATH_PATH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace latpath {

// One unit move in the rotated frame: the lattice diagonal is the horizontal
// axis, an N step becomes Up (+1) and an E step becomes Down (-1).
enum class Step : std::uint8_t { Up, Down };

constexpr int delta(Step s) noexcept { return s == Step::Up ? 1 : -1; }
constexpr Step flip(Step s) noexcept { return s == Step::Up ? Step::Down : Step::Up; }

enum class Alphabet { UD, NE };

enum class PathClass { Balanced, UpUnbalanced, DownUnbalanced, Other };

std::string_view to_string(PathClass c) noexcept;

// Immutable step sequence together with its height profile h_0 = 0, ..., h_L.
class LatticePath {
public:
    LatticePath() : heights_{0} {}
    explicit LatticePath(std::vector<Step> steps);
    LatticePath(std::initializer_list<Step> steps) : LatticePath(std::vector<Step>(steps)) {}

    std::size_t length() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }

    std::span<const Step> steps() const noexcept { return steps_; }
    std::span<const int> heights() const noexcept { return heights_; }

    Step step(std::size_t j) const { return steps_.at(j); }
    int height(std::size_t j) const { return heights_.at(j); }
    int end_height() const noexcept { return heights_.back(); }

    // Sub-path of steps [from, to), re-based to start at height 0.
    LatticePath slice(std::size_t from, std::size_t to) const;

    std::size_t count_up() const noexcept;

    friend bool operator==(const LatticePath& a, const LatticePath& b) noexcept {
        return a.steps_ == b.steps_;
    }

private:
    std::vector<Step> steps_;
    std::vector<int> heights_;
};

struct HeightPoint {
    int height = 0;
    std::size_t index = 0;

    friend bool operator==(const HeightPoint&, const HeightPoint&) = default;
};

// Case-insensitive; leading/trailing whitespace ignored. Throws ParseError.
LatticePath parse_path(std::string_view text, Alphabet alphabet = Alphabet::UD);
std::string format_path(const LatticePath& p, Alphabet alphabet = Alphabet::UD);

PathClass classify(const LatticePath& p) noexcept;
bool is_balanced(const LatticePath& p) noexcept;
bool is_unbalanced(const LatticePath& p) noexcept;

// Reflection about y = 0: every step flipped.
LatticePath reflect_all(const LatticePath& p);

// Reflection of the steps in [from, to) about the horizontal line through
// vertex `from`. Throws IndexError unless from <= to <= length.
LatticePath reflect_segment(const LatticePath& p, std::size_t from, std::size_t to);

// Second path is attached at the end point of the first.
LatticePath concat(const LatticePath& a, const LatticePath& b);

// Highest vertex, leftmost on ties. Empty path gives {0, 0}.
HeightPoint max_height(const LatticePath& p) noexcept;

// Interior vertex j with h_{j-1} != h_{j+1}: the path passes through level
// h_j instead of touching it from one side.
bool is_crossing(const LatticePath& p, std::size_t j);

// Largest j with 0 < j < search_end, h_j == level and is_crossing(p, j).
// Throws IndexError if search_end > length.
std::optional<std::size_t> rightmost_crossing(const LatticePath& p, int level,
                                              std::size_t search_end);

// Paths of length <= kMaxRankLength map to codes in [0, 2^length):
// bit j set <=> step j is Up.
inline constexpr std::size_t kMaxRankLength = 62;

LatticePath unrank(std::size_t length, std::uint64_t code);
std::uint64_t rank(const LatticePath& p);

}  // namespace latpath

#endif  // LATPATH_PATH_HPP
