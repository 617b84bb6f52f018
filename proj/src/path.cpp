#include "latpath/path.hpp"

#include "latpath/errors.hpp"

#include <algorithm>
#include <cctype>

namespace latpath {

std::string_view to_string(PathClass c) noexcept {
    switch (c) {
        case PathClass::Balanced: return "Balanced";
        case PathClass::UpUnbalanced: return "UpUnbalanced";
        case PathClass::DownUnbalanced: return "DownUnbalanced";
        case PathClass::Other: return "Other";
    }
    return "Other";
}

LatticePath::LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
    heights_.reserve(steps_.size() + 1);
    heights_.push_back(0);
    for (Step s : steps_) heights_.push_back(heights_.back() + delta(s));
}

LatticePath LatticePath::slice(std::size_t from, std::size_t to) const {
    if (from > to || to > steps_.size()) {
        throw IndexError("slice [" + std::to_string(from) + ", " + std::to_string(to) +
                         ") out of bounds for length " + std::to_string(steps_.size()));
    }
    return LatticePath(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(from),
                                         steps_.begin() + static_cast<std::ptrdiff_t>(to)));
}

std::size_t LatticePath::count_up() const noexcept {
    return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), Step::Up));
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

LatticePath parse_path(std::string_view text, Alphabet alphabet) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;

    const char up = alphabet == Alphabet::UD ? 'U' : 'N';
    const char down = alphabet == Alphabet::UD ? 'D' : 'E';

    std::vector<Step> steps;
    steps.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        if (c == up) {
            steps.push_back(Step::Up);
        } else if (c == down) {
            steps.push_back(Step::Down);
        } else {
            throw ParseError(i, text[i]);
        }
    }
    return LatticePath(std::move(steps));
}

std::string format_path(const LatticePath& p, Alphabet alphabet) {
    const char up = alphabet == Alphabet::UD ? 'U' : 'N';
    const char down = alphabet == Alphabet::UD ? 'D' : 'E';
    std::string out;
    out.reserve(p.length());
    for (Step s : p.steps()) out.push_back(s == Step::Up ? up : down);
    return out;
}

PathClass classify(const LatticePath& p) noexcept {
    if (p.end_height() == 0) return PathClass::Balanced;
    const auto h = p.heights().subspan(1);
    if (std::all_of(h.begin(), h.end(), [](int v) { return v > 0; })) {
        return PathClass::UpUnbalanced;
    }
    if (std::all_of(h.begin(), h.end(), [](int v) { return v < 0; })) {
        return PathClass::DownUnbalanced;
    }
    return PathClass::Other;
}

bool is_balanced(const LatticePath& p) noexcept { return p.end_height() == 0; }

bool is_unbalanced(const LatticePath& p) noexcept {
    const PathClass c = classify(p);
    return c == PathClass::UpUnbalanced || c == PathClass::DownUnbalanced;
}

LatticePath reflect_all(const LatticePath& p) { return reflect_segment(p, 0, p.length()); }

LatticePath reflect_segment(const LatticePath& p, std::size_t from, std::size_t to) {
    if (from > to || to > p.length()) {
        throw IndexError("reflect_segment [" + std::to_string(from) + ", " + std::to_string(to) +
                         ") out of bounds for length " + std::to_string(p.length()));
    }
    std::vector<Step> steps(p.steps().begin(), p.steps().end());
    for (std::size_t j = from; j < to; ++j) steps[j] = flip(steps[j]);
    return LatticePath(std::move(steps));
}

LatticePath concat(const LatticePath& a, const LatticePath& b) {
    std::vector<Step> steps;
    steps.reserve(a.length() + b.length());
    steps.insert(steps.end(), a.steps().begin(), a.steps().end());
    steps.insert(steps.end(), b.steps().begin(), b.steps().end());
    return LatticePath(std::move(steps));
}

HeightPoint max_height(const LatticePath& p) noexcept {
    const auto h = p.heights();
    const auto it = std::max_element(h.begin(), h.end());  // first of equal maxima
    return {*it, static_cast<std::size_t>(it - h.begin())};
}

bool is_crossing(const LatticePath& p, std::size_t j) {
    if (j == 0 || j >= p.length()) return false;
    return p.height(j - 1) != p.height(j + 1);
}

std::optional<std::size_t> rightmost_crossing(const LatticePath& p, int level,
                                              std::size_t search_end) {
    if (search_end > p.length()) {
        throw IndexError("search_end " + std::to_string(search_end) + " exceeds length " +
                         std::to_string(p.length()));
    }
    const auto h = p.heights();
    for (std::size_t j = search_end; j-- > 1;) {
        if (h[j] == level && h[j - 1] != h[j + 1]) return j;
    }
    return std::nullopt;
}

LatticePath unrank(std::size_t length, std::uint64_t code) {
    if (length > kMaxRankLength) {
        throw RangeError("length " + std::to_string(length) + " exceeds rank cap " +
                         std::to_string(kMaxRankLength));
    }
    if (code >> length != 0) {
        throw RangeError("code " + std::to_string(code) + " does not fit in " +
                         std::to_string(length) + " steps");
    }
    std::vector<Step> steps(length);
    for (std::size_t j = 0; j < length; ++j) {
        steps[j] = ((code >> j) & 1U) != 0 ? Step::Up : Step::Down;
    }
    return LatticePath(std::move(steps));
}

std::uint64_t rank(const LatticePath& p) {
    if (p.length() > kMaxRankLength) {
        throw RangeError("length " + std::to_string(p.length()) + " exceeds rank cap " +
                         std::to_string(kMaxRankLength));
    }
    std::uint64_t code = 0;
    for (std::size_t j = 0; j < p.length(); ++j) {
        if (p.step(j) == Step::Up) code |= std::uint64_t{1} << j;
    }
    return code;
}

}  // namespace latpath
