#include "sk/certify.hpp"

#include "sk/curve.hpp"
#include "sk/dyadic.hpp"
#include "sk/isometry.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

using sk::CandidateTable;
using sk::CheckId;
using sk::Dyadic;
using sk::dyadic;
using sk::Point;
using sk::TableEncoding;

namespace {

const Dyadic kZero(0);

CandidateTable transformed_reference(unsigned depth, Point (*map)(const Point&)) {
    CandidateTable table = sk::export_reference_table(depth);
    for (auto& p : table.points) p = map(p);
    return table;
}

}  // namespace

TEST_CASE("the curve's own tables certify exactly") {
    for (unsigned depth = 1; depth <= 6; ++depth) {
        const auto table = sk::export_reference_table(depth);
        const auto verdict = sk::certify(table, kZero);
        CHECK(verdict.pass);
        CHECK_FALSE(verdict.failed_check.has_value());
        REQUIRE(verdict.isometry.has_value());
        // The detected map is the identity: it fixes all three anchors.
        const auto& iso = *verdict.isometry;
        CHECK(iso.apply(Point{Dyadic(0), Dyadic(0)}) ==
              sk::QuadPoint{sk::QuadDyadic(Dyadic(0)), sk::QuadDyadic(Dyadic(0))});
        CHECK(iso.apply(Point{Dyadic(2), Dyadic(0)}) ==
              sk::QuadPoint{sk::QuadDyadic(Dyadic(2)), sk::QuadDyadic(Dyadic(0))});
        CHECK(verdict.statement.find("consistent with") != std::string::npos);
    }
}

TEST_CASE("the verdict names its own limits") {
    const auto verdict = sk::certify(sk::export_reference_table(3), kZero);
    REQUIRE(verdict.pass);
    // A passing verdict must not overclaim: agreement is sampled, modulo an
    // isometry, and continuity between samples is only the growth bound.
    CHECK(verdict.statement.find("up to the reported plane isometry") != std::string::npos);
    CHECK(verdict.statement.find("sampled pairs") != std::string::npos);
}

TEST_CASE("translated, reflected, and rotated copies certify with the inverse map reported") {
    const unsigned depth = 4;

    SUBCASE("translation by (5, 7)") {
        const auto table = transformed_reference(depth, +[](const Point& p) {
            return Point{p.x + Dyadic(5), p.y + Dyadic(7)};
        });
        const auto verdict = sk::certify(table, kZero);
        CHECK(verdict.pass);
    }
    SUBCASE("reflection across x = 1") {
        const auto table = transformed_reference(depth, +[](const Point& p) {
            return Point{Dyadic(2) - p.x, p.y};
        });
        const auto verdict = sk::certify(table, kZero);
        CHECK(verdict.pass);
    }
    SUBCASE("rotation by 90 degrees") {
        const auto table = transformed_reference(depth, +[](const Point& p) {
            return Point{-p.y, p.x};
        });
        const auto verdict = sk::certify(table, kZero);
        CHECK(verdict.pass);
    }
    SUBCASE("rotation by 180 degrees plus a dyadic shift") {
        const auto table = transformed_reference(depth, +[](const Point& p) {
            return Point{dyadic(7, 1) - p.x, Dyadic(1) - p.y};
        });
        const auto verdict = sk::certify(table, kZero);
        CHECK(verdict.pass);
    }
}

TEST_CASE("single-point perturbations are rejected") {
    const unsigned depth = 4;

    SUBCASE("interior point") {
        auto table = sk::export_reference_table(depth);
        table.points[5].x = table.points[5].x + dyadic(1, 4);  // shift by 1/16
        const auto verdict = sk::certify(table, kZero);
        CHECK_FALSE(verdict.pass);
        REQUIRE(verdict.failed_check.has_value());
        CHECK_FALSE(verdict.first_violation.empty());
    }
    SUBCASE("midpoint anchor") {
        auto table = sk::export_reference_table(depth);
        const std::size_t mid = (table.points.size() - 1) / 2;
        table.points[mid].y = table.points[mid].y + dyadic(1, 3);
        const auto verdict = sk::certify(table, kZero);
        CHECK_FALSE(verdict.pass);
        CHECK(verdict.failed_check == CheckId::C1);
    }
    SUBCASE("endpoint anchor") {
        auto table = sk::export_reference_table(depth);
        table.points.back().x = table.points.back().x - dyadic(1, 2);
        const auto verdict = sk::certify(table, kZero);
        CHECK_FALSE(verdict.pass);
        CHECK(verdict.failed_check == CheckId::C1);
    }
}

TEST_CASE("growth-bound violations report the first offending pair") {
    auto table = sk::export_reference_table(3);
    // Swap two interior points; distances break before the recursion runs.
    std::swap(table.points[1], table.points[5]);
    const auto verdict = sk::certify(table, kZero);
    CHECK_FALSE(verdict.pass);
    REQUIRE(verdict.failed_check.has_value());
    CHECK(*verdict.failed_check == CheckId::C2);
    CHECK(verdict.first_violation.find("pair") != std::string::npos);
}

TEST_CASE("a non-admissible rotation passes the intrinsic checks but fails the match") {
    // Rotate the reference by 30 degrees, which no 45-degree-grid isometry
    // can undo. Distances survive (C1 through C3 hold within tolerance) but
    // the pointwise match must fail with the no-isometry diagnosis.
    const double c = std::cos(3.14159265358979323846 / 6.0);
    const double s = std::sin(3.14159265358979323846 / 6.0);
    CandidateTable table = sk::export_reference_table(3);
    for (auto& p : table.points) {
        const double x = p.x.to_double();
        const double y = p.y.to_double();
        p.x = Dyadic::from_double(c * x - s * y);
        p.y = Dyadic::from_double(s * x + c * y);
    }
    const auto verdict = sk::certify(table, dyadic(1, 40));
    CHECK_FALSE(verdict.pass);
    CHECK(verdict.failed_check == CheckId::C4);
    CHECK(verdict.first_violation.find("no isometry") != std::string::npos);
}

TEST_CASE("decimal tables round to the stated precision and certify within tolerance") {
    // Depth 2 samples are quarters, so the decimal encoding is exact; add
    // noise in the 13th digit to exercise the tolerance path.
    std::istringstream doc(R"({
        "depth": 2,
        "encoding": "decimal",
        "precision": 53,
        "points": [["0", "0"],
                   ["1", "0.0000000000001"],
                   ["1", "1"],
                   ["1", "0"],
                   ["2", "0"]]
    })");
    const CandidateTable table = sk::load_table(doc);
    CHECK(table.encoding == TableEncoding::Decimal);
    CHECK(table.precision == 53);

    // Exact certification must reject the noisy coordinate...
    CHECK_FALSE(sk::certify(table, kZero).pass);
    // ...but the default decimal tolerance absorbs it.
    const auto verdict = sk::certify(table, sk::default_tolerance(TableEncoding::Decimal));
    CHECK(verdict.pass);
}

TEST_CASE("decimal parsing honors ties-to-even at the stated precision") {
    // At precision 1 the grid is multiples of 1/2: 0.25 and 0.75 are ties,
    // rounding to 0 and 1 respectively (the even neighbors).
    std::istringstream doc(R"({
        "depth": 1,
        "encoding": "decimal",
        "precision": 1,
        "points": [["0.25", "0"], ["0.75", "2.49e2"], ["-0.25", "1e-3"]]
    })");
    const CandidateTable table = sk::load_table(doc);
    CHECK(table.points[0].x == Dyadic(0));
    CHECK(table.points[1].x == Dyadic(1));
    CHECK(table.points[1].y == Dyadic(249));     // scientific notation, exact integer
    CHECK(table.points[2].x == Dyadic(0));       // -0.25 also ties to even 0
    CHECK(table.points[2].y == dyadic(0, 0));    // 0.001 rounds to 0 at precision 1
}

TEST_CASE("table loading reports structural problems precisely") {
    SUBCASE("wrong point count") {
        std::istringstream doc(R"({"depth": 2, "encoding": "dyadic",
                                   "points": [["0","0"],["1","1"],["2","0"]]})");
        CHECK_THROWS_WITH_AS(sk::load_table(doc),
                             doctest::Contains("must list 5 points, found 3"), std::invalid_argument);
    }
    SUBCASE("malformed coordinate names its index") {
        std::istringstream doc(R"({"depth": 1, "encoding": "dyadic",
                                   "points": [["0","0"],["1","oops"],["2","0"]]})");
        CHECK_THROWS_WITH_AS(sk::load_table(doc), doctest::Contains("point 1"), std::invalid_argument);
    }
    SUBCASE("non-string coordinate names its index") {
        std::istringstream doc(R"({"depth": 1, "encoding": "dyadic",
                                   "points": [["0","0"],["1",1],["2","0"]]})");
        CHECK_THROWS_WITH_AS(sk::load_table(doc), doctest::Contains("point 1"), std::invalid_argument);
    }
    SUBCASE("depth zero has no midpoint anchor") {
        std::istringstream doc(R"({"depth": 0, "encoding": "dyadic", "points": [["0","0"],["2","0"]]})");
        CHECK_THROWS_AS(sk::load_table(doc), std::invalid_argument);
    }
    SUBCASE("unknown encoding") {
        std::istringstream doc(R"({"depth": 1, "encoding": "binary",
                                   "points": [["0","0"],["1","1"],["2","0"]]})");
        CHECK_THROWS_AS(sk::load_table(doc), std::invalid_argument);
    }
}

TEST_CASE("serialization round-trips exactly") {
    const auto table = sk::export_reference_table(5);
    const std::string text = sk::table_to_json_text(table);
    std::istringstream in(text);
    const auto reloaded = sk::load_table(in);
    REQUIRE(reloaded.points.size() == table.points.size());
    CHECK(reloaded.depth == table.depth);
    for (std::size_t i = 0; i < table.points.size(); ++i) {
        CHECK(reloaded.points[i] == table.points[i]);
    }
    CHECK(sk::certify(reloaded, kZero).pass);
}

TEST_CASE("certify validates the table shape before running checks") {
    CandidateTable bad;
    bad.depth = 3;
    bad.points.resize(4);
    CHECK_THROWS_AS(sk::certify(bad, kZero), std::domain_error);
    CHECK_THROWS_AS(sk::certify(sk::export_reference_table(2), Dyadic(-1)), std::domain_error);
}

TEST_CASE("isometry detection matches anchors directly") {
    const Point a{Dyadic(0), Dyadic(0)};
    const Point m{Dyadic(1), Dyadic(1)};
    const Point b{Dyadic(2), Dyadic(0)};
    const auto identity = sk::detect_isometry(a, m, b, kZero);
    CHECK(identity.apply(m) == sk::QuadPoint{sk::QuadDyadic(Dyadic(1)), sk::QuadDyadic(Dyadic(1))});

    // Anchors of the wrong size admit no isometry at all.
    CHECK_THROWS_AS(sk::detect_isometry(a, Point{Dyadic(2), Dyadic(2)}, Point{Dyadic(4), Dyadic(0)}, kZero),
                    std::domain_error);
}
