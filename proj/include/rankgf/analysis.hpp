#ifndef RANKGF_ANALYSIS_HPP
#define RANKGF_ANALYSIS_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "rankgf/bigint.hpp"
#include "rankgf/partition.hpp"
#include "rankgf/rational.hpp"
#include "rankgf/series.hpp"

namespace rankgf {

/*
 * Verdict for "first weakly increasing, then weakly decreasing".
 *
 * peak_index is the smallest index of a maximal entry. first_dip_index is
 * set only for nonunimodal input: the smallest j with some a_i > a_j for
 * i < j and some a_k > a_j for k > j.
 */
struct UnimodalityReport {
    bool unimodal = true;
    std::size_t peak_index = 0;
    std::optional<std::size_t> first_dip_index;

    bool operator==(const UnimodalityReport&) const = default;
};

template <class Coeff>
UnimodalityReport unimodality_report(std::span<const Coeff> seq)
{
    if (seq.empty())
        throw std::invalid_argument("unimodality of an empty sequence");

    UnimodalityReport report;
    const std::size_t len = seq.size();
    for (std::size_t j = 1; j < len; ++j)
        if (seq[j] > seq[report.peak_index])
            report.peak_index = j;

    // suffix_max[j] indexes a maximum of seq[j..]
    std::vector<std::size_t> suffix_max(len);
    suffix_max[len - 1] = len - 1;
    for (std::size_t j = len - 1; j-- > 0;)
        suffix_max[j] = seq[j] >= seq[suffix_max[j + 1]] ? j : suffix_max[j + 1];

    std::size_t prefix_max = 0;
    for (std::size_t j = 1; j + 1 < len; ++j) {
        if (seq[prefix_max] > seq[j] && seq[suffix_max[j + 1]] > seq[j]) {
            report.unimodal = false;
            report.first_dip_index = j;
            break;
        }
        if (seq[j] > seq[prefix_max])
            prefix_max = j;
    }
    return report;
}

template <class Coeff>
UnimodalityReport unimodality_report(const Series<Coeff>& seq)
{
    return unimodality_report<Coeff>(seq.coeffs());
}

template <class Coeff>
UnimodalityReport unimodality_report(const std::vector<Coeff>& seq)
{
    return unimodality_report<Coeff>(std::span<const Coeff>(seq));
}

/// a_{n+1} - 2 a_n + a_{n-1} <= 0 for lo <= n <= hi.
/// Requires 1 <= lo <= hi <= truncation - 1.
bool second_difference_window(const CoeffSeq& seq, std::size_t lo, std::size_t hi);

/// max over k of ceil(k * lambda_k / 2).
std::size_t increasing_prefix_bound(const Partition& lambda);

/// a_0 <= a_1 <= ... <= a_last (indices past the end are ignored).
bool weakly_increasing_through(const CoeffSeq& seq, std::size_t last);

/// a_first >= a_{first+1} >= ... up to the truncation.
bool weakly_decreasing_from(const CoeffSeq& seq, std::size_t first);

/*
 * floor(b * lambda_1 / 2), the start of the guaranteed weakly decreasing
 * tail, provided b >= 3, (2b-4) lambda_{b-1} >= (2b-5) lambda_1 and
 * (b+1) lambda_b >= |lambda|. Returns nullopt when the hypotheses fail.
 */
std::optional<std::size_t> decreasing_tail_start(const Partition& lambda);

/// y^2/240 - (y-2x)^2/24 - (y-1)^2/48 + (y-x-1)^2/12
Rational alpha5(const Rational& x, const Rational& y);

/// sum_{i=0}^{floor(b/2)} (-1)^i (b-2i)^{b-3} C(b, i); requires b >= 5.
BigInt alternating_sum_T(int b);

/// sum_{j=0}^{k} (-1)^j (k-2j)^k C(k, j); requires k >= 1.
BigInt finite_difference_sum(int k);

struct QuasipolyLeading {
    BigInt actual;    // [q^n] prod_{c in C} 1/(1-q^c)
    Rational leading; // (prod 1/c) * C(n, |C|-1)
};

/// Requires C nonempty with gcd 1.
QuasipolyLeading quasipoly_leading(std::span<const Part> denominators, std::size_t n);

} // namespace rankgf

#endif
