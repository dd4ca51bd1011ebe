#ifndef RANKGF_PARTITION_HPP
#define RANKGF_PARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rankgf {

using Part = std::int64_t;

/*
 * An integer partition lambda = (lambda_1 >= lambda_2 >= ... >= lambda_b > 0).
 *
 * Parts are addressed 1-indexed through part(k), lambda_1 being the largest.
 * Zero parts are never stored; the empty partition has length 0. Instances
 * are only created through make_partition() (or the checked constructor),
 * so the ordering invariant always holds.
 */
class Partition {
public:
    Partition() = default;

    /// Validates and normalizes; see make_partition().
    explicit Partition(std::span<const Part> raw);
    Partition(std::initializer_list<Part> raw);

    std::size_t length() const noexcept { return parts_.size(); }
    Part size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// lambda_k for 1 <= k <= length(); 0 beyond the last part.
    Part part(std::size_t k) const noexcept
    {
        return (k >= 1 && k <= parts_.size()) ? parts_[k - 1] : 0;
    }

    Part first() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    std::span<const Part> parts() const noexcept { return parts_; }

    /// True when the parts are strictly decreasing.
    bool is_strict() const noexcept;

    /// Product of (lambda_j + 1), which bounds the number of subpartitions.
    /// Saturates at INT64_MAX.
    std::int64_t subpartition_bound() const noexcept;

    bool operator==(const Partition&) const = default;

    /// "4,3,2"; the empty partition renders as "".
    std::string to_string() const;

private:
    std::vector<Part> parts_;
    Part size_ = 0;
};

/// Strips zero parts after checking the sequence is weakly decreasing and
/// nonnegative. Throws std::invalid_argument("not weakly decreasing") on an
/// increase, including a zero followed by a positive part.
Partition make_partition(std::span<const Part> raw);

/// Parses "4,3,2" (whitespace tolerated) into a validated partition.
Partition parse_partition(std::string_view text);

/// mu fits inside the Ferrers diagram of lambda.
bool contains(const Partition& mu, const Partition& lambda) noexcept;

/// Transpose of the Ferrers diagram.
Partition conjugate(const Partition& lambda);

} // namespace rankgf

#endif
