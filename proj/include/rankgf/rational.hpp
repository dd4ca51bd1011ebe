#ifndef RANKGF_RATIONAL_HPP
#define RANKGF_RATIONAL_HPP

#include <compare>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include "rankgf/bigint.hpp"

namespace rankgf {

// Exact rational kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(const BigInt& num, const BigInt& den = 1)
    {
        if (den == 0)
            throw std::invalid_argument("zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return from(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.q_ == 0)
            throw std::domain_error("division by zero");
        return from(a.q_ / b.q_);
    }
    Rational operator-() const { return from(-q_); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "-1/96"; integers render without a denominator.
    std::string to_string() const { return q_.get_str(); }

    double to_double() const { return q_.get_d(); }

private:
    static Rational from(const mpq_class& q)
    {
        Rational r;
        r.q_ = q;
        r.q_.canonicalize();
        return r;
    }

    mpq_class q_;
};

} // namespace rankgf

#endif
