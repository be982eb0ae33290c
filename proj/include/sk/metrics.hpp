#pragma once

#include "sk/curve.hpp"
#include "sk/dyadic.hpp"
#include "sk/geometry.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace sk {

// Square-to-linear ratio |s(t2) - s(t1)|^2 / |t2 - t1|, exact. Symmetric in
// its arguments; t1 == t2 is a domain error. Coincident images at distinct
// times give ratio 0.
ExactRatio slr(const Dyadic& t1, const Dyadic& t2);

struct SlrWitness {
    Dyadic t1;
    Dyadic t2;
    ExactRatio value;
};

struct LocalityReport {
    ExactRatio attained_max;
    SlrWitness witness;
    std::optional<ExactRatio> certified_upper;
    unsigned depth;
};

// Exhaustive exact maximum of the ratio over all pairs drawn from the given
// sample grid, where samples[k] is the curve position at time k / 2^depth
// (so samples.size() == 2^depth + 1). The witness is the lexicographically
// smallest (t1, t2) attaining the maximum. Shared by the rival-curve search.
LocalityReport locality_over_samples(const std::vector<Point>& samples, unsigned depth);

// locality_over_samples applied to this curve's own dyadic grid.
LocalityReport locality_dyadic(unsigned depth);

// Branch-and-bound certificate: returns a report whose certified_upper is an
// exact upper bound for the ratio over ALL time pairs, not just a sample
// grid. Bound for a pair of same-order fractions with positive time gap g:
// (max squared vertex-to-vertex distance) / g. Pairs inside one fraction are
// the whole problem again (the similarity preserves the ratio), so they
// close without recursion, as does the pair hugging a junction once the
// chain reaches order 3 (that configuration is exactly similar to the root
// sibling pair). certified_upper >= 4 always, is monotonically nonincreasing
// in depth_limit, and converges toward 4. Precondition: depth_limit >= 2.
LocalityReport locality_certified(unsigned depth_limit);

enum class AngleClass { AcuteAtMiddle, RightAtMiddle, ObtuseAtMiddle };

struct AngleTriple {
    Dyadic d12_sq, d23_sq, d13_sq;
    ExactRatio slr12, slr23, slr13;
    AngleClass angle_class;
    bool lemma_holds;
};

// Classifies the angle at the middle image by comparing d13^2 with
// d12^2 + d23^2 (law of cosines, exact) and evaluates the split inequality:
// a non-obtuse middle angle forces max(slr12, slr23) >= slr13, strictly when
// the comparison is strict. The obtuse case leaves lemma_holds vacuously
// true. Precondition: t1 < t2 < t3.
AngleTriple angle_triple(const Dyadic& t1, const Dyadic& t2, const Dyadic& t3);

// True iff every sample s(j / 2^sample_depth) inside the fraction's time
// window stays within the disk on the fraction's hypotenuse as diameter:
// |s(t) - midpoint(entry, exit)|^2 <= 2^-order, checked exactly.
// Precondition: sample_depth >= order.
bool disk_containment(unsigned order, std::uint64_t index, unsigned sample_depth);

struct FractionMetrics {
    Dyadic leg_sq;         // 2 * 2^-order
    Dyadic hyp_sq;         // 4 * 2^-order
    ExactRatio slr_across; // hyp_sq over the time span, always 4
};

FractionMetrics fraction_metrics(const OrientedFraction& f);

}  // namespace sk
