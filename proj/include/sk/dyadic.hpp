#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

namespace sk {

// Dyadic rational m / 2^e.
//
// Normal form: the exponent is minimal, i.e. e == 0 or m is odd, and m == 0
// forces e == 0. Two Dyadics are equal as values iff they are structurally
// equal, so operator== compares fields. Numerators are GMP integers, which
// keeps every operation exact at any curve depth.
class Dyadic {
public:
    Dyadic() : num_(0), exp_(0) {}
    Dyadic(long value) : num_(value), exp_(0) {}
    Dyadic(mpz_class numerator, unsigned long exponent)
        : num_(std::move(numerator)), exp_(exponent) {
        normalize();
    }

    // Exact conversion; every finite double is a dyadic rational.
    static Dyadic from_double(double value);

    // Accepts "m" or "m/2^e" with an optional leading minus sign.
    static Dyadic parse(const std::string& text);

    const mpz_class& numerator() const { return num_; }
    unsigned long exponent() const { return exp_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return sgn(num_); }

    // Exact halving / doubling; used heavily by the midpoint recursion.
    Dyadic half() const { return Dyadic(num_, exp_ + 1); }
    Dyadic times_pow2(unsigned long k) const;

    Dyadic operator-() const;
    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    std::strong_ordering operator<=>(const Dyadic& other) const;

    double to_double() const;
    std::string str() const;

private:
    mpz_class num_;
    unsigned long exp_;

    void normalize();
};

// Convenience constructor: dyadic(m, e) normalizes (2, 2) -> (1, 1),
// (0, 5) -> (0, 0) and leaves (3, 2) alone.
inline Dyadic dyadic(mpz_class m, unsigned long e) { return Dyadic(std::move(m), e); }

// Ratio of two dyadics with num >= 0 and den > 0. Construction rejects
// anything else. Comparisons cross-multiply, so no rounding ever happens;
// the stored pair is not reduced (canonical() produces the reduced integer
// fraction for display and structural tests).
class ExactRatio {
public:
    ExactRatio(Dyadic num, Dyadic den);

    const Dyadic& num() const { return num_; }
    const Dyadic& den() const { return den_; }

    std::strong_ordering operator<=>(const ExactRatio& other) const;
    bool operator==(const ExactRatio& other) const {
        return (*this <=> other) == std::strong_ordering::equal;
    }
    // Compares num/den against a plain dyadic bound.
    std::strong_ordering compare(const Dyadic& bound) const;

    // Reduced integer fraction (A, B) with gcd(A, B) == 1 and B >= 1.
    std::pair<mpz_class, mpz_class> canonical() const;

    double to_double() const;
    // "A/B", or just "A" when B == 1.
    std::string str() const;

private:
    Dyadic num_;
    Dyadic den_;
};

// Compares num/den to bound by cross-multiplication. den <= 0 is a domain
// error. num may be negative (unlike ExactRatio, which stores a certified
// nonnegative value).
std::strong_ordering cmp_ratio(const Dyadic& num, const Dyadic& den, const Dyadic& bound);

}  // namespace sk
