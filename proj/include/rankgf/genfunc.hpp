#ifndef RANKGF_GENFUNC_HPP
#define RANKGF_GENFUNC_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rankgf/partition.hpp"
#include "rankgf/series.hpp"

namespace rankgf {

/*
 * Rank generating functions of the subpartition poset {mu : mu <= lambda}.
 *
 * G^i_lambda weights the first part of mu by i; G_lambda = G^1_lambda.
 * F_lambda counts the subpartitions with distinct nonzero parts. Every
 * routine returns a dense series truncated at `truncate`; when absent, the
 * full degree i*lambda_1 + lambda_2 + ... + lambda_b is used.
 *
 * The inclusion-exclusion formula, the first-row recursion, the row DP and
 * brute-force enumeration are independent routes to the same coefficients
 * and are used to check one another.
 */

/// Bitmask encoding of A subset of [b]: bit (j-1) set iff j is in A.
using SubsetMask = std::uint64_t;

/// Builds a mask from 1-indexed elements; throws if an element is outside [b].
SubsetMask make_subset(std::span<const int> elements, std::size_t b);

/*
 * One summand of the subset formula for G^i_lambda:
 *
 *   sign * q^exponent / prod_{d in denominators} (1 - q^d)
 *
 * with f_A(k) = lambda_{b+1-max(A cap [k])} + 1 when k >= min(A) and 0
 * otherwise, g_A(k) = k - max(A cap [k]) + 1, max(empty) = 1 and
 * min(empty) = infinity. The exponent is sum_{k<b} f_A(k) + i*f_A(b); the
 * denominator for position k is g_A(k), raised by i-1 once k >= max(A).
 */
struct SubsetTerm {
    SubsetMask subset = 0;
    int sign = 1;
    Part exponent = 0;
    std::vector<Part> denominators; // one per k in [b], in k order
};

SubsetTerm subset_term(SubsetMask subset, const Partition& lambda, Part weight = 1);

/// i*lambda_1 + lambda_2 + ... + lambda_b.
std::size_t full_degree(const Partition& lambda, Part weight = 1);

enum class Method { formula, recursion, dp, enumeration };

Method parse_method(std::string_view name);
std::string_view method_name(Method m) noexcept;

/// Whether every intermediate of the formula, recursion and DP routes fits
/// in int64 for this input (subpartition count and the geometric-series
/// bound 2^b * C(D+b-1, b-1) both below 2^62).
bool fits_fixed_width(const Partition& lambda, Part weight, std::size_t truncate);

CoeffSeq rank_gf_formula(const Partition& lambda, Part weight = 1,
                         std::optional<std::size_t> truncate = std::nullopt);
CoeffSeq rank_gf_recursive(const Partition& lambda, Part weight = 1,
                           std::optional<std::size_t> truncate = std::nullopt);
CoeffSeq rank_gf_dp(const Partition& lambda, std::optional<std::size_t> truncate = std::nullopt);

/// Weighted size histogram of enumerate_subpartitions(); the enumeration
/// size bound applies.
CoeffSeq rank_gf_enumerated(const Partition& lambda, Part weight = 1,
                            std::optional<std::size_t> truncate = std::nullopt,
                            Part max_size = 30);

/// Dispatches on `method`; the DP route only supports weight 1.
CoeffSeq rank_gf(const Partition& lambda, Method method, Part weight = 1,
                 std::optional<std::size_t> truncate = std::nullopt);

// Fixed-width and arbitrary-precision instances of the routes above. The
// int64 instances assume fits_fixed_width() holds.
template <class Coeff>
Series<Coeff> rank_gf_formula_as(const Partition& lambda, Part weight, std::size_t truncate);
template <class Coeff>
Series<Coeff> rank_gf_recursive_as(const Partition& lambda, Part weight, std::size_t truncate);
template <class Coeff>
Series<Coeff> rank_gf_dp_as(const Partition& lambda, std::size_t truncate);

/// Visits every mu <= lambda exactly once: mu_1 ascending, then mu_2
/// ascending, and so on. Throws std::length_error when |lambda| > max_size.
void for_each_subpartition(const Partition& lambda, const std::function<void(const Partition&)>& visit,
                           Part max_size = 30);
std::vector<Partition> enumerate_subpartitions(const Partition& lambda, Part max_size = 30);

/*
 * F_lambda for strictly decreasing lambda:
 *
 *   F = 1 + sum_{c=1}^{b} q^{c(c+1)/2} G_{(lambda_1 - c, lambda_2 - (c-1), ..., lambda_c - 1)}
 *
 * where c is the number of parts of mu. Throws on repeated parts.
 * `inner` selects the route used for each G.
 */
CoeffSeq distinct_rank_gf(const Partition& lambda, std::optional<std::size_t> truncate = std::nullopt,
                          Method inner = Method::formula);

/// Histogram of enumerate_subpartitions() restricted to distinct nonzero parts.
CoeffSeq distinct_rank_gf_enumerated(const Partition& lambda,
                                     std::optional<std::size_t> truncate = std::nullopt,
                                     Part max_size = 30);

template <class Coeff>
Series<Coeff> distinct_rank_gf_as(const Partition& lambda, std::size_t truncate);

/// F_mu for 4 distinct parts:
/// q^6 G_{(mu_1-3, mu_2-2, mu_3-1, mu_4)} + q G_{(mu_1-1, mu_2)} + 1.
CoeffSeq distinct_rank_gf_4part(const Partition& mu, std::optional<std::size_t> truncate = std::nullopt);

} // namespace rankgf

#endif
