#include "rankgf/search.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "rankgf/analysis.hpp"
#include "rankgf/genfunc.hpp"
#include "rankgf/scan.hpp"

namespace rankgf {

Quadratics coefficient_quadratics(std::int64_t m, std::int64_t ell, std::int64_t n)
{
    const BigInt M = to_bigint(m);
    const BigInt L = to_bigint(ell);
    const BigInt K = to_bigint(n);
    const BigInt common = 9 * L * L - (48 * M + 15) * L + 24 * M * M + 72 * M * K - 36 * K * K;
    return {common + 38 * M + 6, common + 34 * M + 6 * K + 6};
}

Quadratics series_coefficients(const Partition& lambda, std::int64_t N)
{
    if (N < 0)
        throw std::invalid_argument("N must be nonnegative");
    const auto top = static_cast<std::size_t>(N + 2);
    CoeffSeq d = difference(rank_gf_formula(lambda, 1, top), 1);
    return {d[top - 1], d[top]};
}

bool witness_conditions_hold(const Partition& lambda, std::int64_t N)
{
    if (lambda.length() != 4 || N < 0)
        return false;
    const Part l1 = lambda.part(1);
    const Part l2 = lambda.part(2);
    const Part l4 = lambda.part(4);
    if (l1 % 12 != 11 || l2 % 12 != 11 || N % 12 != 0)
        return false;
    if (!(l1 + l2 + 14 <= N && N < 2 * l1 + 2))
        return false;
    if (!(10 * l4 > 9 * l1))
        return false;
    if (!(3 * l4 > N + 2))
        return false;

    // Only A in {{}, {3}, {4}, {3,4}} may contribute below N + 3; their
    // exponents are 0, 2 lambda_2 + 2, lambda_1 + 1, lambda_1 + lambda_2 + 2.
    const std::array<SubsetMask, 4> kept{0b0000, 0b0100, 0b1000, 0b1100};
    for (SubsetMask a = 0; a < 16; ++a) {
        if (std::find(kept.begin(), kept.end(), a) != kept.end())
            continue;
        if (subset_term(a, lambda).exponent <= N + 2)
            return false;
    }
    return true;
}

Partition witness_partition(std::int64_t m, std::int64_t n)
{
    const Part top = 12 * m - 1;
    const Part rest = 12 * n - 1;
    return Partition{top, rest, rest, rest};
}

std::optional<Witness4> find_witness(std::int64_t m)
{
    if (m < 1)
        throw std::invalid_argument("m must be positive");

    // Integers ell with 1999 m < 1000 ell and 10000 ell < 19999 m.
    for (std::int64_t ell = 1999 * m / 1000 + 1; 10000 * ell < 19999 * m; ++ell) {
        const std::int64_t N = 12 * (ell - 1);
        // Smallest n with 10 (12n - 1) > 9 (12m - 1), i.e. 120n > 108m + 1.
        std::int64_t n = (108 * m + 1) / 120 + 1;
        // N >= lambda_1 + lambda_2 + 14 caps n at ell - m - 2.
        for (; n <= ell - m - 2; ++n) {
            const Partition lambda = witness_partition(m, n);
            if (!witness_conditions_hold(lambda, N))
                continue;
            const Quadratics q = coefficient_quadratics(m, ell, n);
            if (!(q.f < 0 && q.g > 0))
                continue;

            const Quadratics direct = series_coefficients(lambda, N);
            if (direct != q)
                throw VerificationError("closed form disagrees with the series for lambda = "
                                        + lambda.to_string() + ", N = " + std::to_string(N) + ": f "
                                        + q.f.get_str() + " vs " + direct.f.get_str() + ", g "
                                        + q.g.get_str() + " vs " + direct.g.get_str());
            Witness4 w;
            w.lambda = lambda;
            w.N = N;
            w.m = m;
            w.ell = ell;
            w.n = n;
            w.f_value = direct.f;
            w.g_value = direct.g;
            w.verified = true;
            return w;
        }
    }
    return std::nullopt;
}

Partition lift_to_distinct(const Witness4& witness)
{
    const Partition& l = witness.lambda;
    if (l.length() != 4)
        throw VerificationError("witness must have 4 parts");
    const Partition mu{l.part(1) + 3, l.part(2) + 2, l.part(3) + 1, l.part(4)};

    const auto top = static_cast<std::size_t>(witness.N + 8);
    const CoeffSeq f_series = distinct_rank_gf_4part(mu, top);
    const CoeffSeq d = difference(f_series, 1);
    if (d[top - 1] != witness.f_value || d[top] != witness.g_value)
        throw VerificationError("coefficient transfer failed for mu = " + mu.to_string() + ": got "
                                + d[top - 1].get_str() + ", " + d[top].get_str());
    if (!(d[top - 1] < 0 && d[top] > 0))
        throw VerificationError("lifted coefficients do not change sign for mu = " + mu.to_string());
    const UnimodalityReport report = unimodality_report(f_series);
    if (report.unimodal)
        throw VerificationError("F is unimodal up to N+8 for mu = " + mu.to_string());
    return mu;
}

DensityCounts density_counts(std::int64_t max_first, unsigned jobs)
{
    if (max_first < 1)
        throw std::invalid_argument("max_first must be positive");
    ScanOptions options;
    options.parts = 4;
    options.max_first = max_first;
    options.kind = Kind::G;
    options.jobs = jobs;
    DensityCounts counts;
    scan_partitions(options, [&](const ScanResult& r) {
        ++counts.total;
        if (!r.report.unimodal)
            ++counts.nonunimodal;
    });
    return counts;
}

} // namespace rankgf
