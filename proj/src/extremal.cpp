#include "sk/extremal.hpp"

#include <cmath>
#include <stdexcept>

namespace sk {

double heron_area(const TriangleSides& sides) {
    double a = sides.a, b = sides.b, c = sides.c;
    if (!(a >= 0.0 && a <= b && b <= c)) {
        throw std::domain_error("heron_area: sides must satisfy 0 <= a <= b <= c");
    }
    if (a + b < c) throw std::domain_error("heron_area: triangle inequality violated");
    double s = 0.5 * (a + b + c);
    double radicand = s * (s - a) * (s - b) * (s - c);
    if (radicand < 0.0) radicand = 0.0;  // rounding can push degenerate cases slightly negative
    return std::sqrt(radicand);
}

ExtremalSearchResult grid_search(unsigned resolution) {
    if (resolution < 2) throw std::domain_error("grid_search: resolution must be >= 2");
    const double step = 2.0 / static_cast<double>(resolution);

    double best_area = 0.0;
    TriangleSides best{0.0, 0.0, 0.0};
    bool have_best = false;

    auto consider = [&](double a, double b, double c) {
        if (c < b || c * c > 4.0) return;
        if (a + b < c) return;
        double area = heron_area({a, b, c});
        if (!have_best || area > best_area) {
            best_area = area;
            best = {a, b, c};
            have_best = true;
        }
        // Equal areas keep the earlier candidate; the loops run in
        // lexicographic (a, b, c) order, so ties resolve deterministically.
    };

    for (unsigned i = 0; i <= resolution; ++i) {
        double a = step * static_cast<double>(i);
        for (unsigned j = i; j <= resolution; ++j) {
            double b = step * static_cast<double>(j);
            if (a * a + b * b > 4.0) break;  // b only grows within the row
            double clipped = std::min(2.0, a + b);
            consider(a, b, clipped);
            if (clipped != 2.0) consider(a, b, 2.0);
        }
    }
    return {best_area, best};
}

}  // namespace sk
