#pragma once

#include "sk/dyadic.hpp"
#include "sk/geometry.hpp"

#include <array>
#include <string>

namespace sk {

// Element of the ring Z[sqrt 2] over dyadics: value a + b * sqrt(2). The
// representation is unique (sqrt 2 is irrational), so equality is
// structural, and signs are decidable exactly by comparing a^2 with 2 b^2.
struct QuadDyadic {
    Dyadic a;  // rational part
    Dyadic b;  // coefficient of sqrt(2)

    QuadDyadic() = default;
    QuadDyadic(Dyadic rational) : a(std::move(rational)), b(0) {}
    QuadDyadic(Dyadic rational, Dyadic root2) : a(std::move(rational)), b(std::move(root2)) {}

    int sign() const;
    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    QuadDyadic operator-() const { return {-a, -b}; }
    friend QuadDyadic operator+(const QuadDyadic& x, const QuadDyadic& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend QuadDyadic operator-(const QuadDyadic& x, const QuadDyadic& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend QuadDyadic operator*(const QuadDyadic& x, const QuadDyadic& y) {
        // (a + b r)(c + d r) = ac + 2bd + (ad + bc) r, r^2 = 2
        return {x.a * y.a + Dyadic(2) * (x.b * y.b), x.a * y.b + x.b * y.a};
    }
    friend bool operator==(const QuadDyadic& x, const QuadDyadic& y) {
        return x.a == y.a && x.b == y.b;
    }

    double to_double() const;
    std::string str() const;  // "a + b*sqrt(2)" with dyadic parts
};

struct QuadPoint {
    QuadDyadic x;
    QuadDyadic y;

    friend bool operator==(const QuadPoint& p, const QuadPoint& q) {
        return p.x == q.x && p.y == q.y;
    }
};

QuadDyadic squared_distance(const QuadPoint& p, const QuadPoint& q);

// Plane isometry x -> M x + t whose linear part is orthogonal with entries
// of the form (p + q * sqrt 2) / 2 (the rotations by multiples of 45 degrees
// and their reflections); such isometries act exactly on dyadic points.
struct Isometry {
    std::array<std::array<QuadDyadic, 2>, 2> m;
    QuadDyadic tx, ty;

    QuadPoint apply(const Point& p) const;
};

// The 16 admissible linear parts: 8 rotations, then 8 reflections; the
// identity comes first so exact matches prefer it.
const std::array<std::array<std::array<QuadDyadic, 2>, 2>, 16>& orthogonal_group();

// The unique isometry carrying the anchor triple (p0, mid, pN) onto
// ((0,0), (1,1), (2,0)), matched within tol on squared distances at the
// anchors. Throws std::domain_error("no isometry...") when the anchors are
// not congruent to the canonical triangle within tol.
Isometry detect_isometry(const Point& p0, const Point& mid, const Point& pN, const Dyadic& tol);

}  // namespace sk
