#include "sk/metrics.hpp"

#include <algorithm>
#include <stdexcept>

namespace sk {

ExactRatio slr(const Dyadic& t1, const Dyadic& t2) {
    if (t1 == t2) throw std::domain_error("slr: t1 and t2 must differ");
    Dyadic dt = t2 - t1;
    if (dt.sign() < 0) dt = -dt;
    Dyadic d2 = squared_distance(evaluate(t1), evaluate(t2));
    return ExactRatio(d2, dt);
}

namespace {

// Scaled-integer scan: coordinates are brought to a common power-of-two
// denominator so each pair costs a handful of machine multiplies, with
// products compared in 128-bit. Falls back to full Dyadic arithmetic when
// the scaled values could overflow.
struct ScaledSamples {
    std::vector<std::int64_t> xs, ys;
    unsigned long common_exp;
};

bool try_scale(const std::vector<Point>& samples, unsigned depth, ScaledSamples& out) {
    unsigned long e = 0;
    for (const Point& p : samples) {
        e = std::max({e, p.x.exponent(), p.y.exponent()});
    }
    // dx^2 + dy^2 must fit in int64 and its product with a time numerator in
    // int128: coordinates here live in [-2, 2], so |x * 2^e| <= 2^(e+1).
    if (e > 28 || depth > 40) return false;
    out.common_exp = e;
    out.xs.reserve(samples.size());
    out.ys.reserve(samples.size());
    for (const Point& p : samples) {
        mpz_class sx = p.x.numerator() << (e - p.x.exponent());
        mpz_class sy = p.y.numerator() << (e - p.y.exponent());
        if (!sx.fits_slong_p() || !sy.fits_slong_p()) return false;
        out.xs.push_back(sx.get_si());
        out.ys.push_back(sy.get_si());
    }
    return true;
}

LocalityReport report_from_indices(std::uint64_t i, std::uint64_t j, const Dyadic& d2,
                                   unsigned depth) {
    Dyadic t1(mpz_class(i), depth);
    Dyadic t2(mpz_class(j), depth);
    ExactRatio value(d2, t2 - t1);
    return {value, {t1, t2, value}, std::nullopt, depth};
}

LocalityReport scan_scaled(const ScaledSamples& s, unsigned depth) {
    const std::size_t n = s.xs.size();
    std::size_t bi = 0, bj = 1;
    std::int64_t bnum = 0;
    std::int64_t bden = 1;
    {
        std::int64_t dx = s.xs[1] - s.xs[0], dy = s.ys[1] - s.ys[0];
        bnum = dx * dx + dy * dy;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::int64_t dx = s.xs[j] - s.xs[i];
            std::int64_t dy = s.ys[j] - s.ys[i];
            std::int64_t num = dx * dx + dy * dy;
            std::int64_t den = static_cast<std::int64_t>(j - i);
            // num/den > bnum/bden, cross-multiplied (denominators share the
            // factor 2^-depth, which cancels)
            if (static_cast<__int128>(num) * bden > static_cast<__int128>(bnum) * den) {
                bnum = num;
                bden = den;
                bi = i;
                bj = j;
            }
        }
    }
    return report_from_indices(bi, bj, Dyadic(mpz_class(bnum), 2 * s.common_exp), depth);
}

LocalityReport scan_exact(const std::vector<Point>& samples, unsigned depth) {
    const std::size_t n = samples.size();
    std::size_t bi = 0, bj = 1;
    Dyadic bnum = squared_distance(samples[0], samples[1]);
    mpz_class bden = 1;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Dyadic num = squared_distance(samples[i], samples[j]);
            mpz_class den(j - i);
            if (num * Dyadic(bden, 0) > bnum * Dyadic(den, 0)) {
                bnum = num;
                bden = den;
                bi = i;
                bj = j;
            }
        }
    }
    return report_from_indices(bi, bj, bnum, depth);
}

}  // namespace

LocalityReport locality_over_samples(const std::vector<Point>& samples, unsigned depth) {
    if (depth > 63) throw std::domain_error("locality_over_samples: depth exceeds 64-bit range");
    if (samples.size() != (std::size_t{1} << depth) + 1) {
        throw std::domain_error("locality_over_samples: expected 2^depth + 1 samples");
    }
    ScaledSamples scaled;
    if (try_scale(samples, depth, scaled)) return scan_scaled(scaled, depth);
    return scan_exact(samples, depth);
}

LocalityReport locality_dyadic(unsigned depth) {
    if (depth > 63) throw std::domain_error("locality_dyadic: depth exceeds 64-bit range");
    std::vector<Point> samples;
    samples.reserve((std::size_t{1} << depth) + 1);
    std::uint64_t count = std::uint64_t{1} << depth;
    for (std::uint64_t k = 0; k <= count; ++k) {
        samples.push_back(evaluate(Dyadic(mpz_class(k), depth)));
    }
    return locality_over_samples(samples, depth);
}

namespace {

struct FractionPair {
    OrientedFraction a, b;  // same order, a entirely before b in time
};

Dyadic max_vertex_squared_distance(const OrientedFraction& a, const OrientedFraction& b) {
    const Point* va[3] = {&a.entry, &a.right_angle, &a.exit};
    const Point* vb[3] = {&b.entry, &b.right_angle, &b.exit};
    Dyadic best(0);
    for (const Point* p : va) {
        for (const Point* q : vb) {
            Dyadic d2 = squared_distance(*p, *q);
            if (d2 > best) best = d2;
        }
    }
    return best;
}

}  // namespace

LocalityReport locality_certified(unsigned depth_limit) {
    if (depth_limit < 2) throw std::domain_error("locality_certified: depth_limit must be >= 2");
    // The junction closure below needs the order-2 and order-3 spawn pairs,
    // so refinement always runs to order 3 at least; deeper limits only
    // shrink the result.
    unsigned limit = std::max(depth_limit, 3u);

    std::vector<FractionPair> work;
    // Subdivides both halves of a pair that shares a time endpoint, queues
    // the three separated child pairs, and returns the new pair hugging the
    // junction.
    auto spawn = [&work](const FractionPair& p) -> FractionPair {
        auto ca = subdivide(p.a);
        auto cb = subdivide(p.b);
        work.push_back({ca[0], cb[0]});
        work.push_back({ca[0], cb[1]});
        work.push_back({ca[1], cb[1]});
        return {ca[1], cb[0]};
    };

    auto halves = subdivide(root_fraction());
    // The sibling pair is the whole problem (every other pair maps into it
    // by the similarity of its smallest enclosing fraction), so the search
    // space is its separated descendants.
    FractionPair sibling{halves[0], halves[1]};
    FractionPair junction2 = spawn(sibling);
    // One more level; the order-3 pair hugging t = 1/2 is carried onto the
    // sibling pair by the similarity z -> z/2 + (1/2, 1/2) with time map
    // t -> 3/8 + t/4, which preserves every squared-distance/time ratio. Its
    // supremum is therefore the global one, already represented by the
    // attained witness below, and the chain ends here.
    spawn(junction2);

    const Dyadic four(4);
    const ExactRatio attained = slr(Dyadic(0), Dyadic(1));  // exactly 4, witness (0, 1)
    ExactRatio upper = attained;
    while (!work.empty()) {
        FractionPair p = work.back();
        work.pop_back();
        Dyadic gap = p.b.time_start() - p.a.time_end();  // > 0 for every queued pair
        Dyadic far2 = max_vertex_squared_distance(p.a, p.b);
        ExactRatio bound(far2, gap);
        // A fraction's image is its closed triangle, so every time pair
        // drawn from (a, b) has squared displacement <= far2 and time
        // difference >= gap.
        if (bound.compare(four) <= 0) continue;  // can never raise the certificate
        if (p.a.order >= limit) {
            if (bound > upper) upper = bound;
            continue;
        }
        auto ca = subdivide(p.a);
        auto cb = subdivide(p.b);
        for (const auto& a : ca) {
            for (const auto& b : cb) {
                work.push_back({a, b});
            }
        }
    }

    return {attained, {Dyadic(0), Dyadic(1), attained}, upper, depth_limit};
}

AngleTriple angle_triple(const Dyadic& t1, const Dyadic& t2, const Dyadic& t3) {
    if (!(t1 < t2 && t2 < t3)) throw std::domain_error("angle_triple: need t1 < t2 < t3");
    Point p1 = evaluate(t1), p2 = evaluate(t2), p3 = evaluate(t3);
    Dyadic d12 = squared_distance(p1, p2);
    Dyadic d23 = squared_distance(p2, p3);
    Dyadic d13 = squared_distance(p1, p3);
    ExactRatio s12(d12, t2 - t1);
    ExactRatio s23(d23, t3 - t2);
    ExactRatio s13(d13, t3 - t1);

    auto c = d13 <=> d12 + d23;
    AngleClass cls = c == std::strong_ordering::greater ? AngleClass::ObtuseAtMiddle
                     : c == std::strong_ordering::less  ? AngleClass::AcuteAtMiddle
                                                        : AngleClass::RightAtMiddle;
    bool holds = true;
    if (cls != AngleClass::ObtuseAtMiddle) {
        const ExactRatio& mx = s12 < s23 ? s23 : s12;
        holds = cls == AngleClass::AcuteAtMiddle ? mx > s13 : mx >= s13;
    }
    return {d12, d23, d13, s12, s23, s13, cls, holds};
}

bool disk_containment(unsigned order, std::uint64_t index, unsigned sample_depth) {
    if (sample_depth < order) {
        throw std::domain_error("disk_containment: sample_depth must be >= order");
    }
    if (sample_depth > 63) throw std::domain_error("disk_containment: depth exceeds 64-bit range");
    OrientedFraction f = fraction_at(order, index);
    Point center = midpoint(f.entry, f.exit);
    Dyadic radius_sq(1, order);  // (hyp/2)^2 = (4 * 2^-order) / 4
    std::uint64_t first = index << (sample_depth - order);
    std::uint64_t last = (index + 1) << (sample_depth - order);
    for (std::uint64_t j = first; j <= last; ++j) {
        Point p = evaluate(Dyadic(mpz_class(j), sample_depth));
        if (squared_distance(p, center) > radius_sq) return false;
    }
    return true;
}

FractionMetrics fraction_metrics(const OrientedFraction& f) {
    Dyadic leg = squared_distance(f.entry, f.right_angle);
    Dyadic hyp = squared_distance(f.entry, f.exit);
    return {leg, hyp, ExactRatio(hyp, f.time_end() - f.time_start())};
}

}  // namespace sk
