#pragma once

#include "sk/dyadic.hpp"
#include "sk/geometry.hpp"
#include "sk/metrics.hpp"

namespace sk {

enum class RivalCurveId { Hilbert };

// Exact point of the Hilbert curve on the unit square, entry (0,0) and exit
// (1,0), for dyadic t in [0,1]. The four quadrant maps contract by 1/2, so
// dyadic times resolve exactly in finitely many steps.
Point hilbert_point(const Dyadic& t);

// Attained square-to-linear maximum of the rival over the depth-d sample
// grid, for comparison against this curve's constant 4.
LocalityReport rival_locality(RivalCurveId id, unsigned depth);

}  // namespace sk
