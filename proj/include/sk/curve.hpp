#pragma once

#include "sk/dyadic.hpp"
#include "sk/geometry.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace sk {

// One fraction of the curve: the restriction to [k/2^n, (k+1)/2^n], carried
// by an oriented right isosceles triangle. The curve enters at `entry`,
// leaves at `exit`, and the right angle sits at `right_angle`. Exact vertex
// invariants: |entry - right_angle|^2 = |exit - right_angle|^2 = 2 * 2^-n and
// |entry - exit|^2 = 4 * 2^-n.
struct OrientedFraction {
    unsigned order;        // n
    std::uint64_t index;   // k, 0 <= k < 2^n
    Point entry;
    Point right_angle;
    Point exit;

    Dyadic time_start() const { return Dyadic(mpz_class(index), order); }
    Dyadic time_end() const { return Dyadic(mpz_class(index) + 1, order); }
};

// The whole curve as a single fraction: entry (0,0), right angle (1,1),
// exit (2,0); area exactly 1.
OrientedFraction root_fraction();

// Halves a fraction across the altitude from the right angle. The new apex
// is the midpoint of entry and exit, so every vertex stays dyadic. Children
// chain: left exit == right entry == the parent's right-angle vertex.
// Throws std::overflow_error at order 64 (child indices would leave 64 bits).
std::array<OrientedFraction, 2> subdivide(const OrientedFraction& f);

// Descends the bits of `index` most significant first. index >= 2^order or
// order > 64 is a domain error.
OrientedFraction fraction_at(unsigned order, std::uint64_t index);

// Exact evaluation at a dyadic time. t must lie in [0, 1]; t == 1 returns
// the exit of the last fraction, (2, 0).
Point evaluate(const Dyadic& t);

struct RealEvaluation {
    Point point;                  // entry vertex of the containing fraction
    Dyadic squared_error_bound;   // 4 * 2^-depth, the fraction's squared diameter
};

// Approximate evaluation for arbitrary real t in [0, 1]: locates the depth-
// `depth` fraction containing t (exactly; the double is converted without
// rounding) and returns its entry vertex with the squared diameter bound.
RealEvaluation evaluate_real(double t, unsigned depth);

// Indices k of all depth-`depth` fractions whose closed triangle contains p,
// in increasing order. A point strictly outside the root triangle yields an
// empty list. Point-in-triangle tests are exact sign computations.
std::vector<std::uint64_t> preimages(const Point& p, unsigned depth);

// All 2^order fractions of the given order, in time order.
std::vector<OrientedFraction> tiling(unsigned order);

Dyadic fraction_area(const OrientedFraction& f);

}  // namespace sk
