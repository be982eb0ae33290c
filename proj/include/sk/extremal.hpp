#pragma once

namespace sk {

// Triangle side lengths in sorted order, a <= b <= c.
struct TriangleSides {
    double a;
    double b;
    double c;
};

// Heron's formula. Requires 0 <= a <= b <= c and the triangle inequality
// a + b >= c (degenerate triangles are fine and have area 0); anything else
// is a domain error.
double heron_area(const TriangleSides& sides);

struct ExtremalSearchResult {
    double max_area;
    TriangleSides argmax;
};

// Grid search for the largest-area triangle subject to a^2 + b^2 <= 4 and
// c^2 <= 4: (a, b) ranges over the grid [0, 2]^2 with step 2/resolution and
// c over the candidates {min(2, a + b), 2}. This module is intentionally
// floating point; it exists as an independent numeric check that the
// constrained maximum is the unit-area triangle (sqrt 2, sqrt 2, 2), and
// nothing downstream consumes its output. Deterministic: single-threaded
// scan, ties keep the lexicographically smallest (a, b, c).
// Precondition: resolution >= 2. Nested power-of-two resolutions give
// monotonically nondecreasing max_area (cell candidates depend only on the
// (a, b) grid point, and coarse grids are subsets of fine ones).
ExtremalSearchResult grid_search(unsigned resolution);

}  // namespace sk
