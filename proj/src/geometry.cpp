#include "sk/geometry.hpp"

namespace sk {

Dyadic squared_distance(const Point& a, const Point& b) {
    Dyadic dx = a.x - b.x;
    Dyadic dy = a.y - b.y;
    return dx * dx + dy * dy;
}

Dyadic cross(const Point& a, const Point& b, const Point& c) {
    Dyadic ux = b.x - a.x, uy = b.y - a.y;
    Dyadic vx = c.x - a.x, vy = c.y - a.y;
    return ux * vy - uy * vx;
}

int orientation_sign(const Point& a, const Point& b, const Point& c) {
    return cross(a, b, c).sign();
}

bool point_in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
    int o = orientation_sign(a, b, c);
    int s1 = orientation_sign(a, b, p);
    int s2 = orientation_sign(b, c, p);
    int s3 = orientation_sign(c, a, p);
    if (o >= 0) return s1 >= 0 && s2 >= 0 && s3 >= 0;
    return s1 <= 0 && s2 <= 0 && s3 <= 0;
}

Dyadic triangle_area(const Point& a, const Point& b, const Point& c) {
    Dyadic twice = cross(a, b, c);
    if (twice.sign() < 0) twice = -twice;
    return twice.half();
}

}  // namespace sk
