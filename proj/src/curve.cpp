#include "sk/curve.hpp"

#include <stdexcept>
#include <string>

namespace sk {

namespace {

const Point kEntry{Dyadic(0), Dyadic(0)};
const Point kApex{Dyadic(1), Dyadic(1)};
const Point kExit{Dyadic(2), Dyadic(0)};

struct VertexTriple {
    Point entry, right_angle, exit;
};

// Vertex part of the subdivision step, shared by evaluate() so it can walk
// deeper than the 64-bit index range if ever asked to.
VertexTriple child_vertices(const VertexTriple& f, int bit) {
    Point foot = midpoint(f.entry, f.exit);
    if (bit == 0) return {f.entry, foot, f.right_angle};
    return {f.right_angle, foot, f.exit};
}

}  // namespace

OrientedFraction root_fraction() {
    return {0, 0, kEntry, kApex, kExit};
}

std::array<OrientedFraction, 2> subdivide(const OrientedFraction& f) {
    if (f.order >= 64) {
        throw std::overflow_error("subdivide: child index would exceed the 64-bit range at order " +
                                  std::to_string(f.order + 1));
    }
    Point foot = midpoint(f.entry, f.exit);
    OrientedFraction left{f.order + 1, 2 * f.index, f.entry, foot, f.right_angle};
    OrientedFraction right{f.order + 1, 2 * f.index + 1, f.right_angle, foot, f.exit};
    return {left, right};
}

OrientedFraction fraction_at(unsigned order, std::uint64_t index) {
    if (order > 64) throw std::domain_error("fraction_at: order exceeds the 64-bit index range");
    if (order < 64 && (index >> order) != 0) {
        throw std::domain_error("fraction_at: index " + std::to_string(index) +
                                " is out of range for order " + std::to_string(order));
    }
    OrientedFraction f = root_fraction();
    for (unsigned i = order; i-- > 0;) {
        int bit = static_cast<int>((index >> i) & 1u);
        f = subdivide(f)[static_cast<std::size_t>(bit)];
    }
    return f;
}

Point evaluate(const Dyadic& t) {
    if (t.sign() < 0 || t > Dyadic(1)) {
        throw std::domain_error("evaluate: time " + t.str() + " is outside [0, 1]");
    }
    if (t == Dyadic(1)) return kExit;
    // t = m / 2^e with 0 <= m < 2^e; descend one bit per level.
    VertexTriple f{kEntry, kApex, kExit};
    const mpz_class& m = t.numerator();
    for (unsigned long i = t.exponent(); i-- > 0;) {
        int bit = mpz_tstbit(m.get_mpz_t(), i);
        f = child_vertices(f, bit);
    }
    return f.entry;
}

RealEvaluation evaluate_real(double t, unsigned depth) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("evaluate_real: time is outside [0, 1]");
    }
    if (depth > 64) throw std::domain_error("evaluate_real: depth exceeds the 64-bit index range");
    Dyadic td = Dyadic::from_double(t);
    // k = floor(t * 2^depth), clamped so t == 1 lands in the last fraction.
    mpz_class scaled = td.numerator() << depth;
    mpz_class k;
    mpz_fdiv_q_2exp(k.get_mpz_t(), scaled.get_mpz_t(), td.exponent());
    mpz_class limit = mpz_class(1) << depth;
    if (k >= limit) k = limit - 1;
    OrientedFraction f = fraction_at(depth, k.get_ui());
    return {f.entry, Dyadic(4, depth)};
}

namespace {

void collect_preimages(const OrientedFraction& f, const Point& p, unsigned depth,
                       std::vector<std::uint64_t>& out) {
    if (!point_in_closed_triangle(p, f.entry, f.right_angle, f.exit)) return;
    if (f.order == depth) {
        out.push_back(f.index);
        return;
    }
    auto children = subdivide(f);
    collect_preimages(children[0], p, depth, out);
    collect_preimages(children[1], p, depth, out);
}

void collect_tiling(const OrientedFraction& f, unsigned order, std::vector<OrientedFraction>& out) {
    if (f.order == order) {
        out.push_back(f);
        return;
    }
    auto children = subdivide(f);
    collect_tiling(children[0], order, out);
    collect_tiling(children[1], order, out);
}

}  // namespace

std::vector<std::uint64_t> preimages(const Point& p, unsigned depth) {
    if (depth > 64) throw std::domain_error("preimages: depth exceeds the 64-bit index range");
    std::vector<std::uint64_t> out;
    collect_preimages(root_fraction(), p, depth, out);
    return out;  // DFS in index order, so already sorted
}

std::vector<OrientedFraction> tiling(unsigned order) {
    // 2^20 cells is already hundreds of megabytes of bignum vertices; refuse
    // anything bigger rather than thrash.
    if (order > 20) throw std::domain_error("tiling: order " + std::to_string(order) + " would materialize " +
                                            "more than 2^20 cells");
    std::vector<OrientedFraction> out;
    out.reserve(std::size_t{1} << order);
    collect_tiling(root_fraction(), order, out);
    return out;
}

Dyadic fraction_area(const OrientedFraction& f) {
    return triangle_area(f.entry, f.right_angle, f.exit);
}

}  // namespace sk
