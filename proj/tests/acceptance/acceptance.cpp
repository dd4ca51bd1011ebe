// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "rankgf/analysis.hpp"
#include "rankgf/cli.hpp"
#include "rankgf/genfunc.hpp"
#include "rankgf/rational.hpp"
#include "rankgf/scan.hpp"
#include "rankgf/search.hpp"

using namespace rankgf;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock limits in seconds.
constexpr double limit_oracle = 120.0;
constexpr double limit_rectangles = 60.0;
constexpr double limit_exception = 1.0;
constexpr double limit_scan = 900.0;
constexpr double limit_witness = 120.0;
constexpr double limit_lemmas = 30.0;
constexpr double limit_full_g = 1.0;
constexpr double limit_verification = 30.0;

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class F>
double timed(F&& f)
{
    const auto start = Clock::now();
    f();
    return seconds_since(start);
}

std::string fmt_seconds(double s)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

// All partitions with at most max_parts parts, each at most max_first.
void for_each_bounded(std::size_t max_parts, Part max_first, const std::function<void(const Partition&)>& fn)
{
    std::vector<Part> cur;
    std::function<void(Part)> rec = [&](Part cap) {
        fn(Partition(cur));
        if (cur.size() == max_parts)
            return;
        for (Part p = cap; p >= 1; --p) {
            cur.push_back(p);
            rec(p);
            cur.pop_back();
        }
    };
    rec(max_first);
}

Check criterion_oracle_equivalence()
{
    Check c;
    const Method methods[] = {Method::formula, Method::recursion, Method::dp, Method::enumeration};
    auto compare = [&](const Partition& p) {
        const CoeffSeq expected = oracle::to_series(oracle::brute_histogram(oracle::parts(p)));
        for (Method m : methods)
            c.require(rank_gf(p, m) == expected,
                      std::string(method_name(m)) + " disagrees for " + p.to_string());
    };
    std::size_t exhaustive = 0;
    for_each_bounded(4, 6, [&](const Partition& p) {
        compare(p);
        ++exhaustive;
    });
    std::mt19937_64 rng(20240101);
    for (int i = 0; i < 500; ++i)
        compare(oracle::random_partition(rng, 6, 24, 24));
    if (c.ok)
        c.detail = std::to_string(exhaustive) + " exhaustive + 500 random";
    return c;
}

Check criterion_rectangles()
{
    Check c;
    for (int a = 1; a <= 10; ++a) {
        for (int b = 1; b <= 10; ++b) {
            const Partition rect(std::vector<Part>(static_cast<std::size_t>(b), a));
            const CoeffSeq g = rank_gf_formula(rect);
            const std::string name = "(" + std::to_string(a) + "^" + std::to_string(b) + ")";
            c.require(g == rank_gf_dp(rect), name + " differs from dp");
            c.require(g == oracle::to_series(oracle::gaussian_binomial(a + b, b)), name + " differs from q-binomial");
            const std::size_t d = g.truncation();
            for (std::size_t k = 0; k <= d; ++k)
                c.require(g[k] == g[d - k], name + " not palindromic");
            c.require(unimodality_report(g).unimodal, name + " not unimodal");
        }
    }
    if (c.ok)
        c.detail = "100 rectangles";
    return c;
}

Check criterion_staircases()
{
    Check c;
    for (int b = 1; b <= 10; ++b) {
        std::vector<Part> st;
        for (int j = b; j >= 1; --j)
            st.push_back(j);
        c.require(distinct_rank_gf(Partition(st)) == oracle::to_series(oracle::staircase_product(b)),
                  "staircase b = " + std::to_string(b));
    }
    if (c.ok)
        c.detail = "b = 1..10";
    return c;
}

Check criterion_exceptions()
{
    Check c;
    UnimodalityReport g, f;
    const double tg = timed([&] { g = evaluate_partition(Partition{10, 9, 9, 9, 9, 9}, Kind::G).report; });
    const double tf = timed([&] { f = evaluate_partition(Partition{19, 18, 17, 16, 15, 14}, Kind::F).report; });
    c.require(!g.unimodal, "G(10,9,9,9,9,9) reported unimodal");
    c.require(!f.unimodal, "F(19,18,17,16,15,14) reported unimodal");
    c.require(tg <= limit_exception, "G verdict took " + fmt_seconds(tg));
    c.require(tf <= limit_exception, "F verdict took " + fmt_seconds(tf));
    if (c.ok)
        c.detail = "G dip at " + std::to_string(*g.first_dip_index) + " in " + fmt_seconds(tg) + ", F dip at "
            + std::to_string(*f.first_dip_index) + " in " + fmt_seconds(tf);
    return c;
}

Check criterion_scan()
{
    Check c;
    const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t total = 0;
    for (auto [parts, max_first] : {std::pair<std::size_t, Part>{5, 25}, {3, 12}}) {
        ScanOptions options;
        options.parts = parts;
        options.max_first = max_first;
        options.jobs = jobs;
        const ScanSummary s = scan_partitions(options, [&](const ScanResult& r) {
            c.require(r.report.unimodal, "nonunimodal G for " + r.lambda.to_string());
        });
        c.require(s.completed, "scan did not complete");
        total += s.scanned;
    }
    if (c.ok)
        c.detail = std::to_string(total) + " partitions, jobs = " + std::to_string(jobs);
    return c;
}

Check criterion_witness()
{
    Check c;
    std::ostringstream out, err;
    const int code = cli::run({"witness4", "--m-min", "1100", "--m-max", "1300"}, out, err);
    c.require(code == cli::exit_ok, "witness4 exited " + std::to_string(code) + ": " + err.str());
    std::size_t verified = 0;
    std::istringstream lines(out.str());
    for (std::string line; std::getline(lines, line);)
        if (!line.empty() && nlohmann::json::parse(line)["verified"] == true)
            ++verified;
    c.require(verified >= 1, "no verified witness in [1100, 1300]");

    const Partition lambda{14399, 14075, 14075, 14075};
    const std::int64_t N = 28776;
    c.require(witness_conditions_hold(lambda, N), "candidate fails the exact conditions");
    const Quadratics direct = series_coefficients(lambda, N);
    c.require(direct.f < 0 && direct.g > 0, "candidate coefficients do not change sign");
    c.require(direct == coefficient_quadratics(1200, 2399, 1173), "quadratics differ from extracted coefficients");

    Witness4 w;
    w.lambda = lambda;
    w.N = N;
    w.m = 1200;
    w.ell = 2399;
    w.n = 1173;
    w.f_value = direct.f;
    w.g_value = direct.g;
    w.verified = true;
    try {
        const Partition mu = lift_to_distinct(w);
        c.require(mu == Partition{14402, 14077, 14076, 14075}, "unexpected lift " + mu.to_string());
        const CoeffSeq F = distinct_rank_gf_4part(mu);
        const CoeffSeq dF = difference(F, 1);
        c.require(dF[static_cast<std::size_t>(N + 7)] == direct.f && dF[static_cast<std::size_t>(N + 8)] == direct.g,
                  "transfer to N+7, N+8 fails");
        c.require(!unimodality_report(F).unimodal, "full F of the lift is unimodal");
    } catch (const VerificationError& e) {
        c.require(false, e.what());
    }
    if (c.ok)
        c.detail = std::to_string(verified) + " verified witnesses; f = " + direct.f.get_str()
            + ", g = " + direct.g.get_str();
    return c;
}

Check criterion_quadratic_identity()
{
    Check c;
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::int64_t> pick_m(40, 400);
    int found = 0;
    while (found < 100) {
        const std::int64_t m = pick_m(rng);
        const std::int64_t n_lo = (108 * m + 1) / 120 + 1;
        const std::int64_t ell = std::uniform_int_distribution<std::int64_t>(n_lo + m + 2, 2 * m)(rng);
        if (n_lo > ell - m - 2)
            continue;
        const std::int64_t n = std::uniform_int_distribution<std::int64_t>(n_lo, ell - m - 2)(rng);
        const Partition lambda = witness_partition(m, n);
        const std::int64_t N = 12 * (ell - 1);
        if (!witness_conditions_hold(lambda, N))
            continue;
        ++found;
        c.require(series_coefficients(lambda, N) == coefficient_quadratics(m, ell, n),
                  "mismatch at (m, ell, n) = (" + std::to_string(m) + ", " + std::to_string(ell) + ", "
                      + std::to_string(n) + ")");
    }
    // Both sides have degree <= 2 in each variable, so agreement on {0,1,2}^3
    // is agreement as polynomials.
    auto identity_at = [](std::int64_t m, std::int64_t ell, std::int64_t n) {
        const BigInt lhs = coefficient_quadratics(m, ell, n - 1).g - coefficient_quadratics(m, ell, n).f;
        return lhs == -78 * (to_bigint(m) - to_bigint(n)) + 2 * to_bigint(m) - 42;
    };
    for (std::int64_t m = 0; m <= 2; ++m)
        for (std::int64_t ell = 0; ell <= 2; ++ell)
            for (std::int64_t n = 0; n <= 2; ++n)
                c.require(identity_at(m, ell, n), "identity fails on the grid");
    std::uniform_int_distribution<std::int64_t> big(-1000000, 1000000);
    for (int i = 0; i < 100; ++i)
        c.require(identity_at(big(rng), big(rng), big(rng)), "identity fails at a random point");
    if (c.ok)
        c.detail = "100 valid configurations; identity on 27-point grid + 100 random";
    return c;
}

Check criterion_lemmas()
{
    Check c;
    c.require(alternating_sum_T(5) == -10 && alternating_sum_T(6) == -48 && alternating_sum_T(7) == -308,
              "T(5), T(6), T(7)");
    for (int b = 5; b <= 300; ++b)
        c.require(alternating_sum_T(b) != 0, "T(" + std::to_string(b) + ") = 0");
    BigInt expected = 1;
    for (int k = 1; k <= 40; ++k) {
        expected *= 2 * k;
        c.require(abs(finite_difference_sum(k)) == expected, "finite difference at k = " + std::to_string(k));
    }
    const Rational threshold(-1, 500);
    Rational worst_a(-1), worst_b(-1);
    for (int t = 0; t <= 200; ++t) {
        const Rational x = Rational(5, 6) + Rational(t, 1200);
        const Rational a = alpha5(x, Rational(5, 2));
        const Rational b = alpha5(x, Rational(5, 2) * x);
        c.require(a < threshold, "alpha(x, 5/2) at x = " + x.to_string());
        c.require(b < threshold, "alpha(x, 5x/2) at x = " + x.to_string());
        worst_a = std::max(worst_a, a);
        worst_b = std::max(worst_b, b);
    }
    if (c.ok)
        c.detail = "max alpha(x,5/2) = " + worst_a.to_string() + ", max alpha(x,5x/2) = " + worst_b.to_string();
    return c;
}

Check criterion_segments()
{
    Check c;
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 1000; ++i) {
        const Partition p = oracle::random_partition(rng, 8, 30);
        c.require(weakly_increasing_through(rank_gf_dp(p), increasing_prefix_bound(p)),
                  "increasing prefix fails for " + p.to_string());
    }
    std::size_t hypothesis = 0;
    for (std::size_t b = 3; b <= 6; ++b) {
        const BoundedPartitions family(b, 12, false);
        auto cur = family.first();
        do {
            const Partition p(*cur);
            if (const auto start = decreasing_tail_start(p)) {
                ++hypothesis;
                c.require(*start == static_cast<std::size_t>(static_cast<Part>(b) * p.first() / 2),
                          "tail start for " + p.to_string());
                c.require(weakly_decreasing_from(rank_gf_dp(p), *start),
                          "decreasing tail fails for " + p.to_string());
            }
        } while (family.advance(*cur));
    }
    if (c.ok)
        c.detail = "1000 prefixes; " + std::to_string(hypothesis) + " tail partitions";
    return c;
}

Check criterion_corollaries()
{
    Check c;
    std::mt19937_64 rng(99);
    int g_done = 0, f_done = 0;
    while (g_done < 1000) {
        const Partition p = oracle::random_partition(rng, 8, 30);
        if (2 * p.first() < p.size())
            continue;
        ++g_done;
        c.require(unimodality_report(rank_gf_dp(p)).unimodal, "G nonunimodal for " + p.to_string());
    }
    while (f_done < 1000) {
        const Partition p = oracle::random_strict_partition(rng, 8, 30);
        if (2 * p.first() < p.size())
            continue;
        ++f_done;
        c.require(unimodality_report(distinct_rank_gf(p)).unimodal, "F nonunimodal for " + p.to_string());
    }
    if (c.ok)
        c.detail = "1000 G + 1000 F";
    return c;
}

Check criterion_performance()
{
    Check c;
    const Partition big(std::vector<Part>(6, 100));
    CoeffSeq g;
    const double tg = timed([&] { g = rank_gf_formula(big); });
    c.require(g.truncation() == 600, "unexpected degree");
    c.require(g == rank_gf_dp(big), "formula differs from dp");
    c.require(tg < limit_full_g, "full G took " + fmt_seconds(tg));

    const double tv = timed([&] {
        const auto w = find_witness(1200);
        c.require(w && w->verified, "witness not verified");
        if (w)
            lift_to_distinct(*w);
    });
    c.require(tv < limit_verification, "witness verification took " + fmt_seconds(tv));
    if (c.ok)
        c.detail = "full G " + fmt_seconds(tg) + ", witness verification " + fmt_seconds(tv);
    return c;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        double limit;
        Check (*run)();
    };
    const Criterion criteria[] = {
        {1, "four methods agree with brute force", limit_oracle, criterion_oracle_equivalence},
        {2, "rectangles are palindromic, unimodal q-binomials", limit_rectangles, criterion_rectangles},
        {3, "staircase F is prod (1+q^i)", 0.0, criterion_staircases},
        {4, "known exceptions are nonunimodal", 2 * limit_exception, criterion_exceptions},
        {5, "b=5 (first part <= 25) and b=3 (<= 12) scans are unimodal", limit_scan, criterion_scan},
        {6, "4-part witness family and lift", limit_witness, criterion_witness},
        {7, "quadratics equal series coefficients; difference identity", 0.0, criterion_quadratic_identity},
        {8, "numeric checks: T(b), finite differences, alpha grid", limit_lemmas, criterion_lemmas},
        {9, "increasing prefixes and decreasing tails", 0.0, criterion_segments},
        {10, "dominant first part gives unimodal G and F", 0.0, criterion_corollaries},
        {11, "performance floor", 0.0, criterion_performance},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        Check result;
        const auto start = Clock::now();
        try {
            result = cr.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = seconds_since(start);
        if (result.ok && cr.limit > 0 && elapsed > cr.limit) {
            result.ok = false;
            result.detail = "took " + fmt_seconds(elapsed) + " (limit " + fmt_seconds(cr.limit) + ")";
        }
        if (!result.ok)
            ++failures;
        std::cout << (result.ok ? "PASS" : "FAIL") << "  [" << cr.id << "] " << cr.name << " (" << fmt_seconds(elapsed)
                  << "): " << result.detail << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
