#include "latpath/decompose.hpp"
#include "latpath/errors.hpp"

#include "doctest.h"

using namespace latpath;

namespace {

LatticePath P(const char* s) { return parse_path(s); }

bool has_code(const std::vector<Violation>& vs, const std::string& code) {
    for (const auto& v : vs) {
        if (v.code == code) return true;
    }
    return false;
}

DomainErrorKind domain_kind_of(const LatticePath& p) {
    try {
        (void)decompose(p);
    } catch (const DomainError& e) {
        return e.kind();
    }
    FAIL("expected DomainError");
    return DomainErrorKind::Empty;
}

}  // namespace

TEST_CASE("single peak") {
    const auto d = decompose(P("UUDD"));
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0].uprun_length == 2);
    CHECK(d.parts[0].segment.kind == SegmentKind::DownUnbalanced);
    CHECK(d.parts[0].segment.steps == P("DD"));
    CHECK(d.parts[0].segment.start_index == 2);
    CHECK(d.peak_indices == std::vector<std::size_t>{2});
    CHECK(d.peak_heights == std::vector<int>{2});
}

TEST_CASE("later points at the peak height stay inside the final segment") {
    const auto d = decompose(P("UDUD"));
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0].uprun_length == 1);
    CHECK(d.parts[0].segment.steps == P("DUD"));
    CHECK(d.peak_indices == std::vector<std::size_t>{1});
    CHECK(d.peak_heights == std::vector<int>{1});
}

TEST_CASE("two peaks") {
    const auto d = decompose(P("UDUUDD"));
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0].uprun_length == 1);
    CHECK(d.parts[0].segment.kind == SegmentKind::DownDyck);
    CHECK(d.parts[0].segment.steps == P("DU"));
    CHECK(d.parts[1].uprun_length == 1);
    CHECK(d.parts[1].segment.kind == SegmentKind::DownUnbalanced);
    CHECK(d.parts[1].segment.steps == P("DD"));
    CHECK(d.peak_indices == std::vector<std::size_t>{1, 4});
    CHECK(d.peak_heights == std::vector<int>{1, 2});
    CHECK(d.segment_end_indices() == std::vector<std::size_t>{3, 6});
    CHECK(validate(d).empty());
}

TEST_CASE("no empty segment when the uprun into a peak is longer than one") {
    // h: 0 1 2 1 2 3 4 3 2 1 0. The up-run into B_1 = 6 starts at 3, so B_2
    // is the leftmost maximum of h_0..h_3 (index 2) and the uprun has length 2.
    const auto d = decompose(P("UUDUUUDDDD"));
    REQUIRE(d.parts.size() == 2);
    CHECK(d.peak_indices == std::vector<std::size_t>{2, 6});
    CHECK(d.parts[0].uprun_length == 2);
    CHECK(d.parts[0].segment.steps == P("DU"));
    CHECK(d.parts[1].uprun_length == 2);
    CHECK(d.parts[1].segment.steps == P("DDDD"));
}

TEST_CASE("intermediate segments may touch their start level") {
    const auto p = P("UDUDUUDD");  // B_2 = 1 with D = "DUDU", B_1 = 6
    const auto d = decompose(p);
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0].segment.steps == P("DUDU"));
    CHECK(d.parts[0].segment.kind == SegmentKind::DownDyck);
    CHECK(validate(d).empty());
    CHECK(recompose(d) == p);
}

TEST_CASE("segment rising back to the peak level after a deep dip") {
    // h: 0 1 2 3 2 1 0 1 2 3 4 ... ; B_2 = 3 with D = "DDDUUU".
    const auto p = P("UUUDDDUUUUDDDD");
    const auto d = decompose(p);
    REQUIRE(d.parts.size() == 2);
    CHECK(d.parts[0].uprun_length == 3);
    CHECK(d.parts[0].segment.steps == P("DDDUUU"));
    CHECK(d.parts[1].uprun_length == 1);
    CHECK(recompose(d) == p);
}

TEST_CASE("decompose domain errors") {
    CHECK(domain_kind_of(P("")) == DomainErrorKind::Empty);
    CHECK(domain_kind_of(P("UU")) == DomainErrorKind::NotBalanced);
    CHECK(domain_kind_of(P("DU")) == DomainErrorKind::DownStart);
}

TEST_CASE("recompose") {
    CHECK(recompose(decompose(P("UDUUDD"))) == P("UDUUDD"));

    Decomposition d;
    d.parts.push_back({2, {SegmentKind::DownUnbalanced, P("DD"), 2}});
    d.peak_indices = {2};
    d.peak_heights = {2};
    CHECK(recompose(d) == P("UUDD"));

    d.parts[0].uprun_length = 0;
    CHECK_THROWS_AS((void)recompose(d), ValidationError);
    try {
        (void)recompose(d);
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("uprun-length") != std::string::npos);
    }
}

TEST_CASE("validate flags each broken invariant") {
    const auto good = decompose(P("UDUUDD"));
    CHECK(validate(good).empty());

    SUBCASE("DownDyck segment ending below its start") {
        auto d = good;
        d.parts[0].segment.steps = P("DD");
        CHECK(has_code(validate(d), "segment-kind"));
    }
    SUBCASE("non-increasing peak heights") {
        auto d = good;
        d.peak_heights = {2, 2};
        CHECK(has_code(validate(d), "peak-order"));
    }
    SUBCASE("segment starting upward") {
        auto d = good;
        d.parts[0].segment.steps = P("UD");
        CHECK(has_code(validate(d), "segment-shape"));
    }
    SUBCASE("final segment marked DownDyck") {
        auto d = good;
        d.parts[1].segment.kind = SegmentKind::DownDyck;
        CHECK(has_code(validate(d), "segment-kind"));
    }
    SUBCASE("peak index out of step with the parts") {
        auto d = good;
        d.peak_indices = {1, 5};
        CHECK(has_code(validate(d), "peak-position"));
    }
    SUBCASE("missing parts") {
        CHECK(has_code(validate(Decomposition{}), "structure"));
    }
    SUBCASE("earlier vertex as high as a later peak") {
        // U + DUUD + U + DD: the first segment climbs to height 2 at index 4,
        // before the claimed B_1 at index 6.
        Decomposition d;
        d.parts.push_back({1, {SegmentKind::DownDyck, P("DUUD"), 1}});
        d.parts.push_back({1, {SegmentKind::DownUnbalanced, P("DD"), 6}});
        d.peak_indices = {1, 6};
        d.peak_heights = {1, 2};
        const auto vs = validate(d);
        CHECK(has_code(vs, "leftmost"));
        CHECK(has_code(vs, "segment-shape"));
    }
}

TEST_CASE("exhaustive: decompose is total, round-trips, and satisfies its invariants") {
    for (std::size_t len = 2; len <= 20; len += 2) {
        std::size_t checked = 0;
        for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
            if ((code & 1U) == 0) continue;  // first step must be Up
            const auto p = unrank(len, code);
            if (!is_balanced(p)) continue;
            ++checked;
            const auto d = decompose(p);
            REQUIRE(validate(d).empty());
            REQUIRE(recompose(d) == p);

            const auto h = p.heights();
            for (std::size_t i = 0; i < d.peak_indices.size(); ++i) {
                const std::size_t b = d.peak_indices[i];
                for (std::size_t j = 0; j < b; ++j) REQUIRE(h[j] < h[b]);
                const int below = i == 0 ? 0 : d.peak_heights[i - 1];
                REQUIRE(d.parts[i].uprun_length == d.peak_heights[i] - below);
            }
            REQUIRE(d.peak_indices.back() == max_height(p).index);
        }
        // Up-start balanced paths of length 2n: C(2n, n) / 2.
        const std::size_t n = len / 2;
        std::uint64_t c = 1;
        for (std::size_t i = 1; i <= n; ++i) c = c * (n + i) / i;
        CHECK(checked == c / 2);
    }
}
