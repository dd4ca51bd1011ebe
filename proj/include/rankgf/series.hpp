#ifndef RANKGF_SERIES_HPP
#define RANKGF_SERIES_HPP

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "rankgf/bigint.hpp"

namespace rankgf {

/*
 * Dense truncated power series in q.
 *
 * Entry n holds the coefficient of q^n for 0 <= n <= truncation(); every
 * degree up to the truncation is stored, zeros included. Coefficients are
 * exact: Coeff is either BigInt or a fixed-width integer used only when the
 * caller has bounded every intermediate value in advance.
 */
template <class Coeff>
class Series {
public:
    using value_type = Coeff;

    /// The zero series truncated at degree 0.
    Series() : coeffs_(1) {}

    /// The zero series truncated at `truncation`.
    explicit Series(std::size_t truncation) : coeffs_(truncation + 1) {}

    explicit Series(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw std::invalid_argument("series needs at least one coefficient");
    }

    static Series one(std::size_t truncation)
    {
        Series s(truncation);
        s.coeffs_[0] = 1;
        return s;
    }

    std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    const Coeff& operator[](std::size_t n) const
    {
        assert(n < coeffs_.size());
        return coeffs_[n];
    }
    Coeff& operator[](std::size_t n)
    {
        assert(n < coeffs_.size());
        return coeffs_[n];
    }

    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

    auto begin() const noexcept { return coeffs_.begin(); }
    auto end() const noexcept { return coeffs_.end(); }

    bool operator==(const Series&) const = default;

    // Multiply by 1/(1 - q^step) in place.
    void accumulate_geometric(std::size_t step)
    {
        if (step == 0)
            throw std::invalid_argument("geometric factor 1/(1-q^0) diverges");
        for (std::size_t n = step; n < coeffs_.size(); ++n)
            coeffs_[n] += coeffs_[n - step];
    }

    // Multiply by (1 - q^step) in place.
    void apply_difference(std::size_t step)
    {
        if (step == 0)
            throw std::invalid_argument("difference step must be positive");
        for (std::size_t n = coeffs_.size(); n-- > step;)
            coeffs_[n] -= coeffs_[n - step];
    }

    // this += sign * q^exponent * term
    void add_shifted(int sign, std::size_t exponent, const Series& term)
    {
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("sign must be +1 or -1");
        if (term.truncation() != truncation())
            throw std::invalid_argument("series truncations differ");
        for (std::size_t n = exponent; n < coeffs_.size(); ++n) {
            if (sign > 0)
                coeffs_[n] += term.coeffs_[n - exponent];
            else
                coeffs_[n] -= term.coeffs_[n - exponent];
        }
    }

    /// Copy with a different truncation; new high degrees are zero.
    Series truncated(std::size_t truncation) const
    {
        std::vector<Coeff> c(truncation + 1);
        for (std::size_t n = 0; n <= truncation && n < coeffs_.size(); ++n)
            c[n] = coeffs_[n];
        return Series(std::move(c));
    }

    template <class Other>
    Series<Other> convert() const
    {
        std::vector<Other> c;
        c.reserve(coeffs_.size());
        for (const auto& v : coeffs_) {
            if constexpr (std::is_same_v<Other, BigInt> && std::is_integral_v<Coeff>)
                c.push_back(to_bigint(static_cast<std::int64_t>(v)));
            else
                c.push_back(static_cast<Other>(v));
        }
        return Series<Other>(std::move(c));
    }

private:
    std::vector<Coeff> coeffs_;
};

using CoeffSeq = Series<BigInt>;

template <class Coeff>
Series<Coeff> geometric_accumulate(Series<Coeff> seq, std::size_t c)
{
    seq.accumulate_geometric(c);
    return seq;
}

template <class Coeff>
Series<Coeff> difference(Series<Coeff> seq, std::size_t c)
{
    seq.apply_difference(c);
    return seq;
}

template <class Coeff>
Series<Coeff> add_shifted(Series<Coeff> acc, int sign, std::size_t exponent, const Series<Coeff>& term)
{
    acc.add_shifted(sign, exponent, term);
    return acc;
}

/// Convenience for literals in tests and the CLI: [1, 1, 2, 1].
inline CoeffSeq make_coeff_seq(std::initializer_list<long> values)
{
    std::vector<BigInt> c;
    for (long v : values)
        c.emplace_back(v);
    return CoeffSeq(std::move(c));
}

} // namespace rankgf

#endif
