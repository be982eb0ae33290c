#pragma once

#include "sk/dyadic.hpp"

namespace sk {

struct Point {
    Dyadic x;
    Dyadic y;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline Point midpoint(const Point& a, const Point& b) {
    return {(a.x + b.x).half(), (a.y + b.y).half()};
}

Dyadic squared_distance(const Point& a, const Point& b);

// Cross product (b - a) x (c - a); positive for a counterclockwise turn.
Dyadic cross(const Point& a, const Point& b, const Point& c);
int orientation_sign(const Point& a, const Point& b, const Point& c);

// Closed triangle: boundary points (edges and vertices) count as inside.
// Works for either vertex orientation.
bool point_in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c);

// |cross| / 2, exact (halving a dyadic is exact).
Dyadic triangle_area(const Point& a, const Point& b, const Point& c);

}  // namespace sk
