#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace flatcyclo {

using BigInt = mpz_class;

/// Parses a decimal integer; std::nullopt on anything else (signs, whitespace, empty).
std::optional<BigInt> parse_decimal(std::string_view text);

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline bool fits_u64(const BigInt& v) {
    return sgn(v) >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

/// Value as uint64; caller checks fits_u64 first.
std::uint64_t to_u64(const BigInt& v);

BigInt from_u64(std::uint64_t v);

}  // namespace flatcyclo
