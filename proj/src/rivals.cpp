#include "sk/rivals.hpp"

#include <stdexcept>
#include <vector>

namespace sk {
namespace {

// One subdivision step: peel the leading base-4 digit of t and apply the
// corresponding quadrant map to the recursive point.
Point hilbert_rec(const Dyadic& t) {
    if (t.is_zero()) return {Dyadic(0), Dyadic(0)};
    if (t == Dyadic(1)) return {Dyadic(1), Dyadic(0)};

    const Dyadic t4 = t.times_pow2(2);
    mpz_class digit;
    mpz_fdiv_q_2exp(digit.get_mpz_t(), t4.numerator().get_mpz_t(), t4.exponent());
    const Dyadic rest = t4 - Dyadic(digit, 0);
    const Point p = hilbert_rec(rest);
    const Dyadic half(1, 1);
    const Dyadic hx = p.x.half();
    const Dyadic hy = p.y.half();

    switch (digit.get_ui()) {
        case 0: return {hy, hx};                         // transposed lower-left
        case 1: return {hx, hy + half};                  // upper-left
        case 2: return {hx + half, hy + half};           // upper-right
        default: return {Dyadic(1) - hy, half - hx};     // anti-transposed lower-right
    }
}

}  // namespace

Point hilbert_point(const Dyadic& t) {
    if (t.sign() < 0 || t > Dyadic(1)) {
        throw std::domain_error("hilbert_point: time must lie in [0, 1]");
    }
    return hilbert_rec(t);
}

LocalityReport rival_locality(RivalCurveId id, unsigned depth) {
    if (id != RivalCurveId::Hilbert) throw std::domain_error("unknown rival curve");
    if (depth > 24) throw std::domain_error("rival locality depth is limited to 24");
    const std::size_t count = (std::size_t{1} << depth) + 1;
    std::vector<Point> samples;
    samples.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        samples.push_back(hilbert_point(Dyadic(mpz_class(static_cast<unsigned long>(i)), depth)));
    }
    return locality_over_samples(samples, depth);
}

}  // namespace sk
