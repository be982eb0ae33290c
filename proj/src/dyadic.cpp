#include "sk/dyadic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sk {

void Dyadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    unsigned long trailing = mpz_scan1(num_.get_mpz_t(), 0);
    unsigned long shift = std::min(trailing, exp_);
    if (shift > 0) {
        mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
        exp_ -= shift;
    }
}

Dyadic Dyadic::from_double(double value) {
    if (!std::isfinite(value)) throw std::domain_error("from_double: value is not finite");
    // mpq_set_d is exact: a finite double is mantissa * 2^k.
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), value);
    mpz_class den = q.get_den();  // always a power of two here
    unsigned long e = mpz_scan1(den.get_mpz_t(), 0);
    return Dyadic(q.get_num(), e);
}

Dyadic Dyadic::parse(const std::string& text) {
    auto fail = [&]() -> Dyadic {
        throw std::invalid_argument("not a dyadic literal (expected \"m\" or \"m/2^e\"): " + text);
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t digits_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_begin) return fail();
    mpz_class m(text.substr(digits_begin, pos - digits_begin));
    if (negative) m = -m;
    if (pos == text.size()) return Dyadic(m, 0);
    if (text.compare(pos, 3, "/2^") != 0) return fail();
    pos += 3;
    std::size_t exp_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == exp_begin || pos != text.size()) return fail();
    unsigned long e = std::stoul(text.substr(exp_begin, pos - exp_begin));
    return Dyadic(m, e);
}

Dyadic Dyadic::times_pow2(unsigned long k) const {
    if (num_ == 0 || k == 0) return *this;
    if (k >= exp_) {
        mpz_class n = num_ << (k - exp_);
        return Dyadic(std::move(n), 0);
    }
    Dyadic r;
    r.num_ = num_;
    r.exp_ = exp_ - k;  // numerator stays odd, no renormalization needed
    return r;
}

Dyadic Dyadic::operator-() const {
    Dyadic r;
    r.num_ = -num_;
    r.exp_ = exp_;
    return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    unsigned long e = std::max(a.exp_, b.exp_);
    mpz_class n = (a.num_ << (e - a.exp_)) + (b.num_ << (e - b.exp_));
    return Dyadic(std::move(n), e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    unsigned long e = std::max(a.exp_, b.exp_);
    mpz_class n = (a.num_ << (e - a.exp_)) - (b.num_ << (e - b.exp_));
    return Dyadic(std::move(n), e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    // Product of two odd numerators is odd, but exponent-0 operands may have
    // even numerators, so the constructor still normalizes.
    return Dyadic(a.num_ * b.num_, a.exp_ + b.exp_);
}

std::strong_ordering Dyadic::operator<=>(const Dyadic& other) const {
    int sa = sign(), sb = other.sign();
    if (sa != sb) return sa <=> sb;
    // Same sign: compare num * 2^other.exp against other.num * 2^exp.
    mpz_class lhs = num_ << other.exp_;
    mpz_class rhs = other.num_ << exp_;
    int c = cmp(lhs, rhs);
    return c <=> 0;
}

double Dyadic::to_double() const {
    // Display-only conversion; rounding here never feeds back into arithmetic.
    signed long e = -static_cast<signed long>(exp_);
    return std::ldexp(num_.get_d(), static_cast<int>(std::max<signed long>(e, -4000)));
}

std::string Dyadic::str() const {
    if (exp_ == 0) return num_.get_str();
    return num_.get_str() + "/2^" + std::to_string(exp_);
}

ExactRatio::ExactRatio(Dyadic num, Dyadic den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.sign() <= 0) throw std::domain_error("ExactRatio: denominator must be positive");
    if (num_.sign() < 0) throw std::domain_error("ExactRatio: numerator must be nonnegative");
}

std::strong_ordering ExactRatio::operator<=>(const ExactRatio& other) const {
    // a/b vs c/d  <=>  a*d vs c*b, exact since b, d > 0.
    return (num_ * other.den_) <=> (other.num_ * den_);
}

std::strong_ordering ExactRatio::compare(const Dyadic& bound) const {
    return num_ <=> bound * den_;
}

std::pair<mpz_class, mpz_class> ExactRatio::canonical() const {
    // (a/2^p) / (b/2^q) = (a * 2^q) / (b * 2^p); reduce by gcd.
    mpz_class a = num_.numerator() << den_.exponent();
    mpz_class b = den_.numerator() << num_.exponent();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= g;  // g >= 1 because b >= 1
    b /= g;
    return {a, b};
}

double ExactRatio::to_double() const {
    return num_.to_double() / den_.to_double();
}

std::string ExactRatio::str() const {
    auto [a, b] = canonical();
    if (b == 1) return a.get_str();
    return a.get_str() + "/" + b.get_str();
}

std::strong_ordering cmp_ratio(const Dyadic& num, const Dyadic& den, const Dyadic& bound) {
    if (den.sign() <= 0) throw std::domain_error("cmp_ratio: denominator must be positive");
    return num <=> bound * den;
}

}  // namespace sk
