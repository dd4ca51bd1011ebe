#ifndef RANKGF_BIGINT_HPP
#define RANKGF_BIGINT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace rankgf {

using BigInt = mpz_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

static_assert(sizeof(long) == sizeof(std::int64_t), "BigInt conversions assume an LP64 platform");

inline BigInt to_bigint(std::int64_t v) { return BigInt(static_cast<long>(v)); }

inline BigInt to_bigint(const BigInt& v) { return v; }

} // namespace rankgf

#endif
