#ifndef RANKGF_SCAN_HPP
#define RANKGF_SCAN_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "rankgf/analysis.hpp"
#include "rankgf/partition.hpp"

namespace rankgf {

enum class Kind { G, F };

std::string_view kind_name(Kind kind) noexcept;
Kind parse_kind(std::string_view name);

struct ScanResult {
    Partition lambda;
    Kind kind = Kind::G;
    UnimodalityReport report;
    std::optional<int> dip_parity; // first_dip_index % 2 when nonunimodal

    bool operator==(const ScanResult&) const = default;
};

/// Full G_lambda or F_lambda and its verdict. Deterministic in (lambda, kind).
ScanResult evaluate_partition(const Partition& lambda, Kind kind);

/*
 * Partitions with exactly `parts` nonzero parts, all at most `max_first`,
 * in lexicographically decreasing order: (M, M, ..., M) first, then the
 * last part that can still drop is decremented and everything after it is
 * reset to its largest admissible value. With `strict` the parts must be
 * strictly decreasing.
 */
class BoundedPartitions {
public:
    BoundedPartitions(std::size_t parts, Part max_first, bool strict);

    /// First partition in order, or nullopt when there is none.
    std::optional<std::vector<Part>> first() const;

    /// Steps to the successor; false once `current` was the last one.
    bool advance(std::vector<Part>& current) const;

    /// Whether `candidate` belongs to this family.
    bool admits(std::span<const Part> candidate) const;

private:
    std::size_t parts_;
    Part max_first_;
    bool strict_;
};

struct ScanOptions {
    std::size_t parts = 1;
    Part max_first = 1;
    Kind kind = Kind::G;
    bool distinct = false; // forces strict parts and kind F
    unsigned jobs = 1;
    std::size_t chunk_size = 2048;
    /// Read on start (resume after the recorded partition when present) and
    /// rewritten after every completed chunk.
    std::optional<std::filesystem::path> checkpoint;
    /// Start after this partition when no checkpoint file exists.
    std::optional<Partition> resume_after;
    /// Stop after this many chunks; simulates an interrupted run.
    std::optional<std::size_t> max_chunks;
};

struct ScanSummary {
    std::uint64_t scanned = 0;
    std::uint64_t nonunimodal = 0;
    bool completed = false;
    std::optional<Partition> last_completed;
};

/// Streams one result per partition to `sink`, in enumeration order,
/// whatever the number of jobs.
ScanSummary scan_partitions(const ScanOptions& options, const std::function<void(const ScanResult&)>& sink);

std::vector<ScanResult> scan_partitions(std::size_t parts, Part max_first, Kind kind, bool distinct,
                                        unsigned jobs = 1);

} // namespace rankgf

#endif
