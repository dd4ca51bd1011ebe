#include "rankgf/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <stdexcept>

namespace rankgf {

Partition make_partition(std::span<const Part> raw) { return Partition(raw); }

Partition::Partition(std::span<const Part> raw)
{
    for (std::size_t j = 0; j < raw.size(); ++j) {
        if (raw[j] < 0)
            throw std::invalid_argument("negative part");
        if (j + 1 < raw.size() && raw[j] < raw[j + 1])
            throw std::invalid_argument("not weakly decreasing");
    }
    for (Part p : raw) {
        if (p == 0)
            break;
        parts_.push_back(p);
        size_ += p;
    }
}

Partition::Partition(std::initializer_list<Part> raw)
    : Partition(std::span<const Part>(raw.begin(), raw.size()))
{
}

bool Partition::is_strict() const noexcept
{
    return std::adjacent_find(parts_.begin(), parts_.end(), std::less_equal<>{}) == parts_.end();
}

std::int64_t Partition::subpartition_bound() const noexcept
{
    constexpr auto cap = std::numeric_limits<std::int64_t>::max();
    std::int64_t bound = 1;
    for (Part p : parts_) {
        if (bound > cap / (p + 1))
            return cap;
        bound *= p + 1;
    }
    return bound;
}

std::string Partition::to_string() const
{
    std::string s;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
        if (j)
            s += ',';
        s += std::to_string(parts_[j]);
    }
    return s;
}

Partition parse_partition(std::string_view text)
{
    std::vector<Part> raw;
    std::size_t pos = 0;
    auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    while (pos < text.size()) {
        while (pos < text.size() && is_space(text[pos]))
            ++pos;
        if (pos == text.size())
            break;
        Part v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
        if (ec != std::errc{})
            throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
        pos = static_cast<std::size_t>(ptr - text.data());
        raw.push_back(v);
        while (pos < text.size() && is_space(text[pos]))
            ++pos;
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
            ++pos;
        }
    }
    return make_partition(raw);
}

bool contains(const Partition& mu, const Partition& lambda) noexcept
{
    if (mu.length() > lambda.length())
        return false;
    for (std::size_t k = 1; k <= mu.length(); ++k)
        if (mu.part(k) > lambda.part(k))
            return false;
    return true;
}

Partition conjugate(const Partition& lambda)
{
    std::vector<Part> cols(static_cast<std::size_t>(lambda.first()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Part height = 0;
        for (Part p : lambda.parts())
            if (p > static_cast<Part>(c))
                ++height;
        cols[c] = height;
    }
    return Partition(cols);
}

} // namespace rankgf
