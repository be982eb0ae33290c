#include "sk/metrics.hpp"

#include "sk/curve.hpp"
#include "sk/dyadic.hpp"

#include <doctest.h>

#include <stdexcept>
#include <vector>

using sk::Dyadic;
using sk::dyadic;
using sk::ExactRatio;

namespace {

ExactRatio ratio(long num, long den) { return ExactRatio(Dyadic(num), Dyadic(den)); }

}  // namespace

TEST_CASE("square-to-linear ratio at hand-checked pairs") {
    CHECK(sk::slr(Dyadic(0), Dyadic(1)) == ratio(4, 1));
    CHECK(sk::slr(Dyadic(0), dyadic(1, 1)) == ratio(4, 1));
    CHECK(sk::slr(dyadic(1, 1), Dyadic(1)) == ratio(4, 1));
    // s(1/4) = s(3/4) = (1, 0): coincident images, ratio zero.
    CHECK(sk::slr(dyadic(1, 2), dyadic(3, 2)) == ratio(0, 1));
    // Symmetry.
    CHECK(sk::slr(Dyadic(1), Dyadic(0)) == ratio(4, 1));
    CHECK_THROWS_AS(sk::slr(dyadic(1, 1), dyadic(1, 1)), std::domain_error);
}

TEST_CASE("every fraction attains ratio 4 across its own window") {
    for (unsigned order = 0; order <= 10; ++order) {
        const auto f = sk::fraction_at(order, (std::uint64_t{1} << order) / 3);
        const auto m = sk::fraction_metrics(f);
        CHECK(m.leg_sq == dyadic(2, order));
        CHECK(m.hyp_sq == dyadic(4, order));
        CHECK(m.slr_across.compare(Dyadic(4)) == std::strong_ordering::equal);
        if (order > 0) {
            CHECK(sk::slr(f.time_start(), f.time_end()) == ratio(4, 1));
        }
    }
}

TEST_CASE("locality scan at depth 1 finds the first witness") {
    const auto report = sk::locality_dyadic(1);
    CHECK(report.attained_max == ratio(4, 1));
    CHECK(report.witness.t1 == Dyadic(0));
    CHECK(report.witness.t2 == dyadic(1, 1));
    CHECK(report.depth == 1);
    CHECK_FALSE(report.certified_upper.has_value());
}

TEST_CASE("locality scan agrees with direct per-pair evaluation") {
    const unsigned depth = 4;
    const auto report = sk::locality_dyadic(depth);

    ExactRatio best = ratio(0, 1);
    Dyadic bt1(0), bt2(1);
    bool first = true;
    const std::uint64_t n = std::uint64_t{1} << depth;
    for (std::uint64_t i = 0; i < n; ++i) {
        for (std::uint64_t j = i + 1; j <= n; ++j) {
            const Dyadic t1 = dyadic(static_cast<long>(i), depth);
            const Dyadic t2 = dyadic(static_cast<long>(j), depth);
            const ExactRatio v = sk::slr(t1, t2);
            if (first || v > best) {
                best = v;
                bt1 = t1;
                bt2 = t2;
                first = false;
            }
        }
    }
    CHECK(report.attained_max == best);
    CHECK(report.witness.t1 == bt1);
    CHECK(report.witness.t2 == bt2);
}

TEST_CASE("locality scan takes the exact path for wide exponents") {
    // Translating every sample leaves all pairwise distances unchanged, but
    // an exponent-30 offset forces the scan off its 64-bit fast path; the
    // two paths must report identical results.
    const unsigned depth = 3;
    const std::size_t count = (std::size_t{1} << depth) + 1;
    std::vector<sk::Point> base;
    base.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        base.push_back(sk::evaluate(dyadic(static_cast<long>(i), depth)));
    }
    std::vector<sk::Point> shifted = base;
    for (auto& p : shifted) p.x = p.x + dyadic(1, 30);

    const auto fast = sk::locality_over_samples(base, depth);
    const auto exact = sk::locality_over_samples(shifted, depth);
    CHECK(fast.attained_max == exact.attained_max);
    CHECK(fast.witness.t1 == exact.witness.t1);
    CHECK(fast.witness.t2 == exact.witness.t2);
}

TEST_CASE("locality scan validates its input") {
    std::vector<sk::Point> wrong(4);
    CHECK_THROWS_AS(sk::locality_over_samples(wrong, 2), std::domain_error);
}

TEST_CASE("certified upper bound dominates 4 and tightens with depth") {
    ExactRatio prev = ratio(1000, 1);
    for (unsigned limit = 2; limit <= 9; ++limit) {
        const auto report = sk::locality_certified(limit);
        REQUIRE(report.certified_upper.has_value());
        const ExactRatio upper = *report.certified_upper;
        CHECK(upper.compare(Dyadic(4)) != std::strong_ordering::less);
        CHECK(report.attained_max == ratio(4, 1));
        // Nonincreasing in the refinement limit.
        CHECK_FALSE(upper > prev);
        prev = upper;
    }
}

TEST_CASE("certified bound is unchanged by limits below the closure order") {
    // Limits 2 and 3 share the same refinement frontier.
    const auto u2 = *sk::locality_certified(2).certified_upper;
    const auto u3 = *sk::locality_certified(3).certified_upper;
    CHECK(u2 == u3);
    CHECK_THROWS_AS(sk::locality_certified(1), std::domain_error);
}

TEST_CASE("certified bound closes in on the attained value") {
    const auto report = sk::locality_certified(12);
    const ExactRatio upper = *report.certified_upper;
    // Within 1% of 4 by depth 12.
    CHECK_FALSE(upper > ExactRatio(dyadic(404, 2), Dyadic(25)));  // 4.04
}

TEST_CASE("angle classification at hand-checked triples") {
    {
        // (0, 1/2, 1): legs 2, 2, hypotenuse 4; right angle at the middle.
        const auto t = sk::angle_triple(Dyadic(0), dyadic(1, 1), Dyadic(1));
        CHECK(t.d12_sq == Dyadic(2));
        CHECK(t.d23_sq == Dyadic(2));
        CHECK(t.d13_sq == Dyadic(4));
        CHECK(t.angle_class == sk::AngleClass::RightAtMiddle);
        CHECK(t.slr12 == ratio(4, 1));
        CHECK(t.slr23 == ratio(4, 1));
        CHECK(t.slr13 == ratio(4, 1));
        CHECK(t.lemma_holds);
    }
    {
        const auto t = sk::angle_triple(Dyadic(0), dyadic(1, 2), dyadic(1, 1));
        CHECK(t.d12_sq == Dyadic(1));
        CHECK(t.d23_sq == Dyadic(1));
        CHECK(t.d13_sq == Dyadic(2));
        CHECK(t.angle_class == sk::AngleClass::RightAtMiddle);
        CHECK(t.lemma_holds);
    }
    {
        // s(1/4) = s(3/4): the first pair degenerates, ratio 0.
        const auto t = sk::angle_triple(dyadic(1, 2), dyadic(3, 2), Dyadic(1));
        CHECK(t.d12_sq == Dyadic(0));
        CHECK(t.angle_class == sk::AngleClass::RightAtMiddle);
        CHECK(t.slr12 == ratio(0, 1));
        CHECK(t.slr23 == ratio(4, 1));
        CHECK(t.slr13 == ratio(4, 3));
        CHECK(t.lemma_holds);
    }
    CHECK_THROWS_AS(sk::angle_triple(Dyadic(0), Dyadic(0), Dyadic(1)), std::domain_error);
    CHECK_THROWS_AS(sk::angle_triple(dyadic(1, 1), dyadic(1, 2), Dyadic(1)), std::domain_error);
}

TEST_CASE("split inequality and its obtuse converse on a dense sweep") {
    // All strictly increasing triples on the depth-5 grid.
    const unsigned depth = 5;
    const long n = 1L << depth;
    for (long i = 0; i <= n - 2; ++i) {
        for (long j = i + 1; j <= n - 1; ++j) {
            for (long k = j + 1; k <= n; ++k) {
                const auto t = sk::angle_triple(dyadic(i, depth), dyadic(j, depth), dyadic(k, depth));
                CHECK(t.lemma_holds);
                if (t.angle_class == sk::AngleClass::ObtuseAtMiddle) {
                    // Converse direction: the long chord's ratio dominates
                    // the smaller of the two short ones.
                    const auto lo = t.slr12 < t.slr23 ? t.slr12 : t.slr23;
                    CHECK_FALSE(t.slr13 < lo);
                } else {
                    const auto hi = t.slr12 < t.slr23 ? t.slr23 : t.slr12;
                    CHECK_FALSE(hi < t.slr13);
                }
            }
        }
    }
}

TEST_CASE("disk containment holds on small fractions") {
    CHECK(sk::disk_containment(0, 0, 6));
    CHECK(sk::disk_containment(1, 0, 6));
    CHECK(sk::disk_containment(1, 1, 6));
    for (unsigned order = 2; order <= 4; ++order) {
        for (std::uint64_t index = 0; index < (std::uint64_t{1} << order); ++index) {
            CHECK(sk::disk_containment(order, index, 8));
        }
    }
    CHECK_THROWS_AS(sk::disk_containment(4, 0, 3), std::domain_error);
}
