#include "rankgf/analysis.hpp"

#include <numeric>
#include <stdexcept>

namespace rankgf {

bool second_difference_window(const CoeffSeq& seq, std::size_t lo, std::size_t hi)
{
    if (lo < 1 || lo > hi || hi + 1 > seq.truncation())
        throw std::out_of_range("second difference window out of range");
    for (std::size_t n = lo; n <= hi; ++n)
        if (seq[n + 1] - 2 * seq[n] + seq[n - 1] > 0)
            return false;
    return true;
}

std::size_t increasing_prefix_bound(const Partition& lambda)
{
    if (lambda.empty())
        throw std::invalid_argument("increasing prefix of the empty partition");
    Part best = 0;
    for (std::size_t k = 1; k <= lambda.length(); ++k)
        best = std::max(best, (static_cast<Part>(k) * lambda.part(k) + 1) / 2);
    return static_cast<std::size_t>(best);
}

bool weakly_increasing_through(const CoeffSeq& seq, std::size_t last)
{
    const std::size_t end = std::min(last, seq.truncation());
    for (std::size_t n = 0; n < end; ++n)
        if (seq[n] > seq[n + 1])
            return false;
    return true;
}

bool weakly_decreasing_from(const CoeffSeq& seq, std::size_t first)
{
    for (std::size_t n = first; n < seq.truncation(); ++n)
        if (seq[n] < seq[n + 1])
            return false;
    return true;
}

std::optional<std::size_t> decreasing_tail_start(const Partition& lambda)
{
    const auto b = static_cast<Part>(lambda.length());
    if (b < 3)
        return std::nullopt;
    const Part l1 = lambda.part(1);
    const Part next_to_last = lambda.part(lambda.length() - 1);
    const Part last = lambda.part(lambda.length());
    if ((2 * b - 4) * next_to_last < (2 * b - 5) * l1)
        return std::nullopt;
    if ((b + 1) * last < lambda.size())
        return std::nullopt;
    return static_cast<std::size_t>(b * l1 / 2);
}

Rational alpha5(const Rational& x, const Rational& y)
{
    const Rational one(1);
    const Rational two(2);
    auto sq = [](const Rational& v) { return v * v; };
    return sq(y) / Rational(240) - sq(y - two * x) / Rational(24) - sq(y - one) / Rational(48)
        + sq(y - x - one) / Rational(12);
}

namespace {

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt power(long base, unsigned long exp)
{
    BigInt r;
    const BigInt b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

} // namespace

BigInt alternating_sum_T(int b)
{
    if (b < 5)
        throw std::invalid_argument("T(b) is defined here for b >= 5");
    BigInt total = 0;
    for (int i = 0; i <= b / 2; ++i) {
        BigInt term = power(b - 2 * i, static_cast<unsigned long>(b - 3)) * binomial(b, i);
        if (i % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

BigInt finite_difference_sum(int k)
{
    if (k < 1)
        throw std::invalid_argument("finite difference order must be positive");
    BigInt total = 0;
    for (int j = 0; j <= k; ++j) {
        BigInt term = power(k - 2 * j, static_cast<unsigned long>(k)) * binomial(k, j);
        if (j % 2)
            total -= term;
        else
            total += term;
    }
    return total;
}

QuasipolyLeading quasipoly_leading(std::span<const Part> denominators, std::size_t n)
{
    if (denominators.empty())
        throw std::invalid_argument("empty denominator multiset");
    Part g = 0;
    for (Part c : denominators) {
        if (c < 1)
            throw std::invalid_argument("denominators must be positive");
        g = std::gcd(g, c);
    }
    if (g != 1)
        throw std::invalid_argument("denominators must have gcd 1");

    CoeffSeq s = CoeffSeq::one(n);
    for (Part c : denominators)
        s.accumulate_geometric(static_cast<std::size_t>(c));

    Rational leading(binomial(n, denominators.size() - 1));
    for (Part c : denominators)
        leading = leading / Rational(static_cast<long>(c));
    return {s[n], leading};
}

} // namespace rankgf
