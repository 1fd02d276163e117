#include "flatcyclo/familysearch.hpp"

#include <algorithm>

#include "flatcyclo/error.hpp"
#include "flatcyclo/ntheory.hpp"

namespace flatcyclo {

namespace {

bool is_odd_prime(const BigInt& p) { return p >= 3 && mpz_odd_p(p.get_mpz_t()) && is_prime(p); }

// Smallest prime k*m + 1 with k even, k >= 2. Odd k gives an even candidate
// whenever m is odd, so those are skipped.
BigInt scan_progression(const BigInt& m, const SearchOptions& opts) {
    BigInt step = 2 * m;
    BigInt candidate = step + 1;
    for (std::uint64_t tried = 0; tried < opts.max_candidates; ++tried, candidate += step)
        if (is_prime(candidate)) return candidate;
    throw Error(ErrorKind::SearchExhausted, "no prime = 1 mod " + to_decimal(m) + " within " +
                                                std::to_string(opts.max_candidates) + " candidates");
}

}  // namespace

BigInt next_p2(const BigInt& p1, const SearchOptions& opts) {
    if (!is_odd_prime(p1)) throw Error(ErrorKind::InvalidArgument, "p1 = " + to_decimal(p1) + " is not an odd prime");
    return scan_progression(p1, opts);
}

BigInt next_p3(const BigInt& p1, const BigInt& p2, const SearchOptions& opts) {
    if (!is_odd_prime(p1)) throw Error(ErrorKind::InvalidArgument, "p1 = " + to_decimal(p1) + " is not an odd prime");
    if (!is_odd_prime(p2)) throw Error(ErrorKind::InvalidArgument, "p2 = " + to_decimal(p2) + " is not an odd prime");
    if (!(p1 < p2) || BigInt((p2 - 1) % p1) != 0)
        throw Error(ErrorKind::FamilyViolation, "p2 = " + to_decimal(p2) + " is not congruent to 1 mod p1 = " + to_decimal(p1));
    return scan_progression(p1 * p2, opts);
}

std::vector<PrimeTriple> enumerate_triples(std::uint64_t bound) {
    std::vector<PrimeTriple> out;
    const BigInt b = from_u64(bound);
    // p2 >= 2 p1 + 1 and p3 >= 2 p1 p2 + 1, so the product is at least about 8 p1^4.
    for (BigInt p1 = 3; 8 * p1 * p1 * p1 * p1 <= b; p1 += 2) {
        if (!is_prime(p1)) continue;
        for (BigInt p2 = 2 * p1 + 1;; p2 += 2 * p1) {
            const BigInt p1p2 = p1 * p2;
            if (p1p2 * (2 * p1p2 + 1) > b) break;
            if (!is_prime(p2)) continue;
            for (BigInt p3 = 2 * p1p2 + 1; p1p2 * p3 <= b; p3 += 2 * p1p2)
                if (is_prime(p3)) out.emplace_back(p1, p2, p3);
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimeTriple& x, const PrimeTriple& y) { return x.product() < y.product(); });
    return out;
}

}  // namespace flatcyclo
