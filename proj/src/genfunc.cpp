#include "rankgf/genfunc.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace rankgf {

namespace {

void check_weight(Part weight)
{
    if (weight < 1)
        throw std::invalid_argument("weight must be a positive integer");
}

std::size_t resolve_truncation(const Partition& lambda, Part weight, std::optional<std::size_t> truncate)
{
    return truncate ? *truncate : full_degree(lambda, weight);
}

// Runs `route` in int64 when the bound allows it, BigInt otherwise.
template <class Route>
CoeffSeq dispatch(bool fast, Route&& route)
{
    if (fast)
        return route.template operator()<std::int64_t>().template convert<BigInt>();
    return route.template operator()<BigInt>();
}

void check_strict(const Partition& lambda)
{
    if (!lambda.is_strict())
        throw std::invalid_argument("partition has repeated parts");
}

} // namespace

SubsetMask make_subset(std::span<const int> elements, std::size_t b)
{
    SubsetMask mask = 0;
    for (int j : elements) {
        if (j < 1 || static_cast<std::size_t>(j) > b)
            throw std::invalid_argument("subset element " + std::to_string(j) + " outside [1, "
                                        + std::to_string(b) + "]");
        mask |= SubsetMask{1} << (j - 1);
    }
    return mask;
}

SubsetTerm subset_term(SubsetMask subset, const Partition& lambda, Part weight)
{
    check_weight(weight);
    const std::size_t b = lambda.length();
    if (b > 63)
        throw std::invalid_argument("subset formula supports at most 63 parts");
    if (b < 64 && (subset >> b) != 0)
        throw std::invalid_argument("subset element outside [1, b]");

    const std::size_t max_a = subset ? static_cast<std::size_t>(std::bit_width(subset)) : 1;
    const std::size_t min_a = subset ? static_cast<std::size_t>(std::countr_zero(subset)) + 1
                                     : std::numeric_limits<std::size_t>::max();

    SubsetTerm term;
    term.subset = subset;
    term.sign = (std::popcount(subset) % 2) ? -1 : 1;
    term.denominators.reserve(b);

    std::size_t running_max = 0; // max(A cap [k]); 0 while empty
    for (std::size_t k = 1; k <= b; ++k) {
        if (subset & (SubsetMask{1} << (k - 1)))
            running_max = k;
        const std::size_t m = running_max ? running_max : 1;
        const Part f = (k >= min_a) ? lambda.part(b + 1 - m) + 1 : 0;
        const Part g = static_cast<Part>(k - m + 1);
        term.exponent += (k < b) ? f : weight * f;
        term.denominators.push_back(k < max_a ? g : g + weight - 1);
    }
    return term;
}

std::size_t full_degree(const Partition& lambda, Part weight)
{
    check_weight(weight);
    return static_cast<std::size_t>(lambda.size() + (weight - 1) * lambda.first());
}

Method parse_method(std::string_view name)
{
    if (name == "formula")
        return Method::formula;
    if (name == "recursion")
        return Method::recursion;
    if (name == "dp")
        return Method::dp;
    if (name == "enum" || name == "enumeration")
        return Method::enumeration;
    throw std::invalid_argument("unknown method '" + std::string(name) + "'");
}

std::string_view method_name(Method m) noexcept
{
    switch (m) {
    case Method::formula:
        return "formula";
    case Method::recursion:
        return "recursion";
    case Method::dp:
        return "dp";
    case Method::enumeration:
        return "enum";
    }
    return "?";
}

bool fits_fixed_width(const Partition& lambda, Part weight, std::size_t truncate)
{
    const BigInt limit = BigInt(1) << 62;
    if (BigInt(static_cast<long>(lambda.subpartition_bound())) >= limit)
        return false;
    const std::size_t b = lambda.length();
    if (b == 0)
        return true;
    if (b > 60)
        return false;
    // Coefficients of prod 1/(1-q^d) are dominated by those of 1/(1-q)^b.
    BigInt geometric;
    mpz_bin_uiui(geometric.get_mpz_t(), truncate + b - 1, b - 1);
    geometric <<= b;
    (void)weight;
    return geometric < limit;
}

// --- subset formula -------------------------------------------------------

template <class Coeff>
Series<Coeff> rank_gf_formula_as(const Partition& lambda, Part weight, std::size_t truncate)
{
    check_weight(weight);
    const std::size_t b = lambda.length();
    if (b > 30)
        throw std::invalid_argument("subset formula limited to 30 parts");

    // A and A + {1} share their denominators, so the numerators are summed
    // per denominator multiset before the geometric factors are applied.
    std::map<std::vector<Part>, Series<Coeff>> groups;
    for (SubsetMask a = 0; a < (SubsetMask{1} << b); ++a) {
        SubsetTerm term = subset_term(a, lambda, weight);
        if (term.exponent > static_cast<Part>(truncate))
            continue;
        std::sort(term.denominators.begin(), term.denominators.end());
        auto it = groups.try_emplace(std::move(term.denominators), truncate).first;
        it->second[static_cast<std::size_t>(term.exponent)] += term.sign;
    }

    Series<Coeff> total(truncate);
    for (auto& [denominators, numerator] : groups) {
        for (Part d : denominators)
            numerator.accumulate_geometric(static_cast<std::size_t>(d));
        total.add_shifted(1, 0, numerator);
    }
    return total;
}

CoeffSeq rank_gf_formula(const Partition& lambda, Part weight, std::optional<std::size_t> truncate)
{
    const std::size_t t = resolve_truncation(lambda, weight, truncate);
    return dispatch(fits_fixed_width(lambda, weight, t),
                    [&]<class C>() { return rank_gf_formula_as<C>(lambda, weight, t); });
}

// --- first-row recursion ----------------------------------------------------

namespace {

// G^w of the suffix (lambda_{j+1}, ..., lambda_b), memoized on (j, w):
//   (1 - q^w) G^w_suffix = G^{w+1}_{next} - q^{w(first+1)} G^1_{next}
template <class Coeff>
class SuffixRecursion {
public:
    SuffixRecursion(const Partition& lambda, std::size_t truncate) : lambda_(lambda), truncate_(truncate) {}

    const Series<Coeff>& get(std::size_t j, Part w)
    {
        const auto key = std::make_pair(j, w);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        Series<Coeff> s = Series<Coeff>::one(truncate_);
        if (j < lambda_.length()) {
            s = get(j + 1, w + 1);
            const Part e = w * (lambda_.parts()[j] + 1);
            if (e <= static_cast<Part>(truncate_))
                s.add_shifted(-1, static_cast<std::size_t>(e), get(j + 1, 1));
            s.accumulate_geometric(static_cast<std::size_t>(w));
        }
        return memo_.emplace(key, std::move(s)).first->second;
    }

private:
    const Partition& lambda_;
    std::size_t truncate_;
    std::map<std::pair<std::size_t, Part>, Series<Coeff>> memo_;
};

} // namespace

template <class Coeff>
Series<Coeff> rank_gf_recursive_as(const Partition& lambda, Part weight, std::size_t truncate)
{
    check_weight(weight);
    SuffixRecursion<Coeff> rec(lambda, truncate);
    return rec.get(0, weight);
}

CoeffSeq rank_gf_recursive(const Partition& lambda, Part weight, std::optional<std::size_t> truncate)
{
    const std::size_t t = resolve_truncation(lambda, weight, truncate);
    return dispatch(fits_fixed_width(lambda, weight, t),
                    [&]<class C>() { return rank_gf_recursive_as<C>(lambda, weight, t); });
}

// --- row DP -----------------------------------------------------------------

template <class Coeff>
Series<Coeff> rank_gf_dp_as(const Partition& lambda, std::size_t truncate)
{
    // E_j(v) = sum_{u=0}^{min(v, lambda_j)} q^u E_{j+1}(u), E_{b+1} = 1.
    // Layer j is stored for v = 0..lambda_j since E_j(v) = E_j(lambda_j)
    // for larger v; prefix sums make each entry one shifted addition.
    const std::size_t b = lambda.length();
    std::vector<Series<Coeff>> next{Series<Coeff>::one(truncate)};
    for (std::size_t j = b; j >= 1; --j) {
        const auto cap = static_cast<std::size_t>(lambda.part(j));
        std::vector<Series<Coeff>> layer;
        layer.reserve(cap + 1);
        Series<Coeff> running(truncate);
        for (std::size_t u = 0; u <= cap; ++u) {
            const auto& below = next[std::min(u, next.size() - 1)];
            if (u <= truncate)
                running.add_shifted(1, u, below);
            layer.push_back(running);
        }
        next = std::move(layer);
    }
    return next.back();
}

CoeffSeq rank_gf_dp(const Partition& lambda, std::optional<std::size_t> truncate)
{
    const std::size_t t = resolve_truncation(lambda, 1, truncate);
    return dispatch(fits_fixed_width(lambda, 1, t), [&]<class C>() { return rank_gf_dp_as<C>(lambda, t); });
}

// --- enumeration ------------------------------------------------------------

void for_each_subpartition(const Partition& lambda, const std::function<void(const Partition&)>& visit,
                           Part max_size)
{
    if (lambda.size() > max_size)
        throw std::length_error("enumeration limited to |lambda| <= " + std::to_string(max_size));
    const std::size_t b = lambda.length();
    std::vector<Part> mu(b, 0);
    auto rec = [&](auto&& self, std::size_t j, Part cap) -> void {
        if (j == b) {
            visit(Partition(mu));
            return;
        }
        const Part top = std::min(cap, lambda.part(j + 1));
        for (Part v = 0; v <= top; ++v) {
            mu[j] = v;
            self(self, j + 1, v);
        }
        mu[j] = 0;
    };
    rec(rec, 0, lambda.first());
}

std::vector<Partition> enumerate_subpartitions(const Partition& lambda, Part max_size)
{
    std::vector<Partition> out;
    for_each_subpartition(lambda, [&](const Partition& mu) { out.push_back(mu); }, max_size);
    return out;
}

CoeffSeq rank_gf_enumerated(const Partition& lambda, Part weight, std::optional<std::size_t> truncate,
                            Part max_size)
{
    const std::size_t t = resolve_truncation(lambda, weight, truncate);
    CoeffSeq hist(t);
    for_each_subpartition(
        lambda,
        [&](const Partition& mu) {
            const auto n = static_cast<std::size_t>(mu.size() + (weight - 1) * mu.first());
            if (n <= t)
                hist[n] += 1;
        },
        max_size);
    return hist;
}

CoeffSeq rank_gf(const Partition& lambda, Method method, Part weight, std::optional<std::size_t> truncate)
{
    switch (method) {
    case Method::formula:
        return rank_gf_formula(lambda, weight, truncate);
    case Method::recursion:
        return rank_gf_recursive(lambda, weight, truncate);
    case Method::dp:
        if (weight != 1)
            throw std::invalid_argument("dp method only supports weight 1");
        return rank_gf_dp(lambda, truncate);
    case Method::enumeration:
        return rank_gf_enumerated(lambda, weight, truncate);
    }
    throw std::invalid_argument("unknown method");
}

// --- distinct parts ---------------------------------------------------------

namespace {

// (lambda_1 - c, lambda_2 - (c-1), ..., lambda_c - 1), zero parts dropped.
Partition staircase_reduced(const Partition& lambda, std::size_t c)
{
    std::vector<Part> kappa(c);
    for (std::size_t j = 1; j <= c; ++j)
        kappa[j - 1] = lambda.part(j) - static_cast<Part>(c + 1 - j);
    return Partition(kappa);
}

template <class Coeff, class InnerG>
Series<Coeff> distinct_from_staircases(const Partition& lambda, std::size_t truncate, InnerG&& inner)
{
    Series<Coeff> out = Series<Coeff>::one(truncate);
    for (std::size_t c = 1; c <= lambda.length(); ++c) {
        const std::size_t shift = c * (c + 1) / 2;
        if (shift > truncate)
            break;
        const Series<Coeff> g = inner(staircase_reduced(lambda, c), truncate - shift);
        for (std::size_t n = 0; n + shift <= truncate; ++n)
            out[n + shift] += g[n];
    }
    return out;
}

} // namespace

template <class Coeff>
Series<Coeff> distinct_rank_gf_as(const Partition& lambda, std::size_t truncate)
{
    check_strict(lambda);
    return distinct_from_staircases<Coeff>(lambda, truncate, [](const Partition& kappa, std::size_t t) {
        return rank_gf_formula_as<Coeff>(kappa, 1, t);
    });
}

CoeffSeq distinct_rank_gf(const Partition& lambda, std::optional<std::size_t> truncate, Method inner)
{
    check_strict(lambda);
    const std::size_t t = resolve_truncation(lambda, 1, truncate);
    if (inner == Method::formula)
        return dispatch(fits_fixed_width(lambda, 1, t),
                        [&]<class C>() { return distinct_rank_gf_as<C>(lambda, t); });
    return distinct_from_staircases<BigInt>(lambda, t, [inner](const Partition& kappa, std::size_t tt) {
        return rank_gf(kappa, inner, 1, tt);
    });
}

CoeffSeq distinct_rank_gf_enumerated(const Partition& lambda, std::optional<std::size_t> truncate,
                                     Part max_size)
{
    const std::size_t t = resolve_truncation(lambda, 1, truncate);
    CoeffSeq hist(t);
    for_each_subpartition(
        lambda,
        [&](const Partition& mu) {
            if (mu.is_strict() && static_cast<std::size_t>(mu.size()) <= t)
                hist[static_cast<std::size_t>(mu.size())] += 1;
        },
        max_size);
    return hist;
}

CoeffSeq distinct_rank_gf_4part(const Partition& mu, std::optional<std::size_t> truncate)
{
    if (mu.length() != 4)
        throw std::invalid_argument("expected exactly 4 parts");
    check_strict(mu);
    const std::size_t t = resolve_truncation(mu, 1, truncate);

    CoeffSeq out = CoeffSeq::one(t);
    auto add = [&](std::size_t shift, const Partition& kappa) {
        if (shift > t)
            return;
        const CoeffSeq g = rank_gf_formula(kappa, 1, t - shift);
        for (std::size_t n = 0; n + shift <= t; ++n)
            out[n + shift] += g[n];
    };
    // One or two parts, then three or four parts (mu_4 may be zero).
    add(1, Partition{mu.part(1) - 1, mu.part(2)});
    add(6, Partition{mu.part(1) - 3, mu.part(2) - 2, mu.part(3) - 1, mu.part(4)});
    return out;
}

template Series<std::int64_t> rank_gf_formula_as<std::int64_t>(const Partition&, Part, std::size_t);
template Series<BigInt> rank_gf_formula_as<BigInt>(const Partition&, Part, std::size_t);
template Series<std::int64_t> rank_gf_recursive_as<std::int64_t>(const Partition&, Part, std::size_t);
template Series<BigInt> rank_gf_recursive_as<BigInt>(const Partition&, Part, std::size_t);
template Series<std::int64_t> rank_gf_dp_as<std::int64_t>(const Partition&, std::size_t);
template Series<BigInt> rank_gf_dp_as<BigInt>(const Partition&, std::size_t);
template Series<std::int64_t> distinct_rank_gf_as<std::int64_t>(const Partition&, std::size_t);
template Series<BigInt> distinct_rank_gf_as<BigInt>(const Partition&, std::size_t);

} // namespace rankgf
