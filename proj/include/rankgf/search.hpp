#ifndef RANKGF_SEARCH_HPP
#define RANKGF_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "rankgf/bigint.hpp"
#include "rankgf/partition.hpp"

namespace rankgf {

/// A direct series re-check disagreed with a value that was already derived
/// some other way. Always an implementation bug, never a search outcome.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Quadratics {
    BigInt f; // [q^{N+1}] (1-q) G_lambda
    BigInt g; // [q^{N+2}] (1-q) G_lambda

    bool operator==(const Quadratics&) const = default;
};

/*
 * Closed forms for the two coefficients of (1-q) G_lambda around N when
 * lambda = (12m-1, 12n-1, lambda_3, lambda_4), N = 12(ell-1) and every
 * term of the b = 4 subset formula except the four lowest is out of range:
 *
 *   f = 9 ell^2 - (48m+15) ell + 24m^2 + 72mn - 36n^2 + 38m + 6
 *   g = 9 ell^2 - (48m+15) ell + 24m^2 + 72mn - 36n^2 + 34m + 6n + 6
 */
Quadratics coefficient_quadratics(std::int64_t m, std::int64_t ell, std::int64_t n);

/// [q^{N+1}] and [q^{N+2}] of (1-q) G_lambda, read off the exact series
/// truncated at N+2.
Quadratics series_coefficients(const Partition& lambda, std::int64_t N);

/*
 * Exact validity of (lambda, N) for the closed forms above: four parts,
 * lambda_1 = lambda_2 = 11 (mod 12), 12 | N, lambda_1 + lambda_2 + 14 <= N
 * < 2 lambda_1 + 2, 10 lambda_4 > 9 lambda_1, 3 lambda_4 > N + 2, and every
 * subset-formula exponent other than 0, lambda_1+1, 2lambda_2+2 and
 * lambda_1+lambda_2+2 exceeds N + 2.
 */
bool witness_conditions_hold(const Partition& lambda, std::int64_t N);

/// lambda = (12m-1, 12n-1, 12n-1, 12n-1).
Partition witness_partition(std::int64_t m, std::int64_t n);

struct Witness4 {
    Partition lambda;
    std::int64_t N = 0;
    std::int64_t m = 0;
    std::int64_t ell = 0;
    std::int64_t n = 0;
    BigInt f_value; // < 0
    BigInt g_value; // > 0
    bool verified = false;

    /// a_{N+1} is smaller than both neighbours.
    std::int64_t dip_index() const noexcept { return N + 1; }
};

/*
 * For each integer ell with 1.999m < ell < 1.9999m (ascending), scans n
 * upward from the smallest n with 10 lambda_4 > 9 lambda_1 and returns the
 * first (ell, n) whose partition meets witness_conditions_hold() with
 * f < 0 < g. The result is re-verified against the exact series before it
 * is returned; a mismatch throws VerificationError.
 */
std::optional<Witness4> find_witness(std::int64_t m);

/// mu = (lambda_1+3, lambda_2+2, lambda_3+1, lambda_4), checked so that
/// [q^{N+7}] and [q^{N+8}] of (1-q) F_mu equal f and g and F_mu has a dip.
/// Throws VerificationError when any check fails.
Partition lift_to_distinct(const Witness4& witness);

struct DensityCounts {
    std::uint64_t nonunimodal = 0;
    std::uint64_t total = 0;

    bool operator==(const DensityCounts&) const = default;
};

/// Nonunimodal G over all 4-part partitions with lambda_1 <= max_first.
DensityCounts density_counts(std::int64_t max_first, unsigned jobs = 1);

} // namespace rankgf

#endif
