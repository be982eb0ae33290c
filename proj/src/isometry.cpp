#include "sk/isometry.hpp"

#include <cmath>
#include <stdexcept>

namespace sk {

int QuadDyadic::sign() const {
    int sa = a.sign(), sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: a + b sqrt(2) has the sign of the larger magnitude,
    // decided by a^2 vs 2 b^2 (equality is impossible for nonzero dyadics).
    auto c = a * a <=> Dyadic(2) * (b * b);
    return c == std::strong_ordering::greater ? sa : sb;
}

double QuadDyadic::to_double() const {
    return a.to_double() + b.to_double() * std::sqrt(2.0);
}

std::string QuadDyadic::str() const {
    if (b.is_zero()) return a.str();
    if (a.is_zero()) return b.str() + "*sqrt(2)";
    return a.str() + " + " + b.str() + "*sqrt(2)";
}

QuadDyadic squared_distance(const QuadPoint& p, const QuadPoint& q) {
    QuadDyadic dx = p.x - q.x;
    QuadDyadic dy = p.y - q.y;
    return dx * dx + dy * dy;
}

QuadPoint Isometry::apply(const Point& p) const {
    QuadDyadic x{p.x}, y{p.y};
    return {m[0][0] * x + m[0][1] * y + tx, m[1][0] * x + m[1][1] * y + ty};
}

const std::array<std::array<std::array<QuadDyadic, 2>, 2>, 16>& orthogonal_group() {
    static const auto matrices = [] {
        std::array<std::array<std::array<QuadDyadic, 2>, 2>, 16> out;
        // (cos, sin) of k * 45 degrees; sqrt(2)/2 is QuadDyadic(0, 1/2).
        const QuadDyadic zero{Dyadic(0)};
        const QuadDyadic one{Dyadic(1)};
        const QuadDyadic r{Dyadic(0), Dyadic(1).half()};  // sqrt(2)/2
        const QuadDyadic cs[8][2] = {
            {one, zero}, {r, r}, {zero, one}, {-r, r},
            {-one, zero}, {-r, -r}, {zero, -one}, {r, -r},
        };
        for (int k = 0; k < 8; ++k) {
            const QuadDyadic& c = cs[k][0];
            const QuadDyadic& s = cs[k][1];
            // rotation by k * 45 degrees
            out[k][0][0] = c;
            out[k][0][1] = -s;
            out[k][1][0] = s;
            out[k][1][1] = c;
            // reflection across the line at k * 22.5 degrees
            out[8 + k][0][0] = c;
            out[8 + k][0][1] = s;
            out[8 + k][1][0] = s;
            out[8 + k][1][1] = -c;
        }
        return out;
    }();
    return matrices;
}

Isometry detect_isometry(const Point& p0, const Point& mid, const Point& pN, const Dyadic& tol) {
    const QuadPoint target_mid{QuadDyadic{Dyadic(1)}, QuadDyadic{Dyadic(1)}};
    const QuadPoint target_end{QuadDyadic{Dyadic(2)}, QuadDyadic{Dyadic(0)}};
    const QuadDyadic tol_q{tol};

    auto within = [&](const QuadDyadic& err) { return (err - tol_q).sign() <= 0; };

    for (const auto& m : orthogonal_group()) {
        Isometry iso{m, {}, {}};
        // Pin p0 to the origin, then test the other two anchors.
        QuadPoint image0 = iso.apply(p0);
        iso.tx = -image0.x;
        iso.ty = -image0.y;
        if (!within(squared_distance(iso.apply(mid), target_mid))) continue;
        if (!within(squared_distance(iso.apply(pN), target_end))) continue;
        return iso;
    }
    throw std::domain_error(
        "no isometry carries the anchor triangle onto the canonical one within tolerance");
}

}  // namespace sk
