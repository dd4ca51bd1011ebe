#include "rankgf/scan.hpp"

#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "rankgf/checkpoint.hpp"
#include "rankgf/genfunc.hpp"

namespace rankgf {

std::string_view kind_name(Kind kind) noexcept { return kind == Kind::G ? "G" : "F"; }

Kind parse_kind(std::string_view name)
{
    if (name == "G" || name == "g")
        return Kind::G;
    if (name == "F" || name == "f")
        return Kind::F;
    throw std::invalid_argument("unknown kind '" + std::string(name) + "' (expected G or F)");
}

ScanResult evaluate_partition(const Partition& lambda, Kind kind)
{
    const auto t = static_cast<std::size_t>(lambda.size());
    const bool fast = fits_fixed_width(lambda, 1, t);

    ScanResult r;
    r.lambda = lambda;
    r.kind = kind;
    if (kind == Kind::G)
        r.report = fast ? unimodality_report(rank_gf_formula_as<std::int64_t>(lambda, 1, t))
                        : unimodality_report(rank_gf_formula_as<BigInt>(lambda, 1, t));
    else
        r.report = fast ? unimodality_report(distinct_rank_gf_as<std::int64_t>(lambda, t))
                        : unimodality_report(distinct_rank_gf_as<BigInt>(lambda, t));
    if (r.report.first_dip_index)
        r.dip_parity = static_cast<int>(*r.report.first_dip_index % 2);
    return r;
}

BoundedPartitions::BoundedPartitions(std::size_t parts, Part max_first, bool strict)
    : parts_(parts), max_first_(max_first), strict_(strict)
{
    if (parts < 1)
        throw std::invalid_argument("number of parts must be positive");
    if (max_first < 1)
        throw std::invalid_argument("max_first must be positive");
}

std::optional<std::vector<Part>> BoundedPartitions::first() const
{
    std::vector<Part> p(parts_);
    for (std::size_t j = 0; j < parts_; ++j)
        p[j] = strict_ ? max_first_ - static_cast<Part>(j) : max_first_;
    if (p.back() < 1)
        return std::nullopt;
    return p;
}

bool BoundedPartitions::advance(std::vector<Part>& current) const
{
    // Smallest admissible value at 0-based position j.
    auto floor_at = [&](std::size_t j) { return strict_ ? static_cast<Part>(parts_ - j) : Part{1}; };
    for (std::size_t j = parts_; j-- > 0;) {
        if (current[j] > floor_at(j)) {
            --current[j];
            for (std::size_t k = j + 1; k < parts_; ++k)
                current[k] = strict_ ? current[j] - static_cast<Part>(k - j) : current[j];
            return true;
        }
    }
    return false;
}

bool BoundedPartitions::admits(std::span<const Part> candidate) const
{
    if (candidate.size() != parts_ || candidate.front() > max_first_ || candidate.back() < 1)
        return false;
    for (std::size_t j = 0; j + 1 < parts_; ++j) {
        if (candidate[j] < candidate[j + 1])
            return false;
        if (strict_ && candidate[j] == candidate[j + 1])
            return false;
    }
    return true;
}

ScanSummary scan_partitions(const ScanOptions& options, const std::function<void(const ScanResult&)>& sink)
{
    if (options.jobs < 1)
        throw std::invalid_argument("jobs must be at least 1");
    if (options.chunk_size < 1)
        throw std::invalid_argument("chunk size must be at least 1");
    const bool strict = options.distinct || options.kind == Kind::F;
    const Kind kind = options.distinct ? Kind::F : options.kind;
    const BoundedPartitions family(options.parts, options.max_first, strict);

    std::optional<Partition> resume = options.resume_after;
    if (options.checkpoint)
        if (auto saved = read_checkpoint(*options.checkpoint))
            resume = saved;

    ScanSummary summary;
    std::optional<std::vector<Part>> cursor;
    if (resume) {
        std::vector<Part> at(resume->parts().begin(), resume->parts().end());
        if (!family.admits(at))
            throw std::invalid_argument("resume point " + resume->to_string() + " is not in the scanned family");
        summary.last_completed = resume;
        if (family.advance(at))
            cursor = std::move(at);
    } else {
        cursor = family.first();
    }

    std::size_t chunks = 0;
    std::vector<Partition> batch;
    std::vector<ScanResult> results;
    while (cursor) {
        if (options.max_chunks && chunks == *options.max_chunks)
            return summary;

        batch.clear();
        while (cursor && batch.size() < options.chunk_size) {
            batch.emplace_back(*cursor);
            if (!family.advance(*cursor))
                cursor.reset();
        }

        results.assign(batch.size(), ScanResult{});
        std::vector<std::exception_ptr> failures(options.jobs);
        auto work = [&](unsigned offset) {
            try {
                for (std::size_t i = offset; i < batch.size(); i += options.jobs)
                    results[i] = evaluate_partition(batch[i], kind);
            } catch (...) {
                failures[offset] = std::current_exception();
            }
        };
        if (options.jobs == 1) {
            work(0);
        } else {
            std::vector<std::jthread> workers;
            for (unsigned t = 0; t < options.jobs; ++t)
                workers.emplace_back(work, t);
        }
        for (const auto& failure : failures)
            if (failure)
                std::rethrow_exception(failure);

        for (const ScanResult& r : results) {
            ++summary.scanned;
            if (!r.report.unimodal)
                ++summary.nonunimodal;
            sink(r);
        }
        summary.last_completed = batch.back();
        if (options.checkpoint)
            write_checkpoint(*options.checkpoint, batch.back());
        ++chunks;
    }
    summary.completed = true;
    return summary;
}

std::vector<ScanResult> scan_partitions(std::size_t parts, Part max_first, Kind kind, bool distinct,
                                        unsigned jobs)
{
    ScanOptions options;
    options.parts = parts;
    options.max_first = max_first;
    options.kind = kind;
    options.distinct = distinct;
    options.jobs = jobs;
    std::vector<ScanResult> out;
    scan_partitions(options, [&](const ScanResult& r) { out.push_back(r); });
    return out;
}

} // namespace rankgf
