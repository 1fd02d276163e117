#pragma once

#include <cstdint>
#include <vector>

#include "flatcyclo/bigint.hpp"
#include "flatcyclo/triple.hpp"

namespace flatcyclo {

struct SearchOptions {
    /// Candidates k*m + 1 (even k only) tried before giving up with SearchExhausted.
    std::uint64_t max_candidates = 1'000'000;
};

/// Smallest prime p2 = 1 (mod p1).
BigInt next_p2(const BigInt& p1, const SearchOptions& opts = {});

/// Smallest prime p3 = 1 (mod p1 p2).
BigInt next_p3(const BigInt& p1, const BigInt& p2, const SearchOptions& opts = {});

/// Every family triple with p1 p2 p3 <= bound, ascending by product.
std::vector<PrimeTriple> enumerate_triples(std::uint64_t bound);

}  // namespace flatcyclo
