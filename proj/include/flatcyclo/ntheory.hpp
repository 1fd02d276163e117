#pragma once

#include <cstdint>
#include <vector>

#include "flatcyclo/bigint.hpp"

namespace flatcyclo {

/// Primality.
///
/// Below 2^64 this is a deterministic Miller-Rabin with the first twelve prime
/// bases. Above 2^64 it is a Baillie-PSW test (strong base-2 Miller-Rabin plus a
/// strong Lucas test with Selfridge parameters). No BPSW pseudoprime is known,
/// but none is proven not to exist either.
bool is_prime(const BigInt& n);

/// x in [1, m-1] with a*x = 1 (mod m). Throws NotInvertible when gcd(a, m) != 1.
BigInt mod_inverse(const BigInt& a, const BigInt& m);

/// floor(a / b) for a >= 0, b >= 1. Negative arguments are rejected.
BigInt quo(const BigInt& a, const BigInt& b);

struct PrimePower {
    BigInt prime;
    unsigned exponent = 1;
};

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

/// A positive integer together with its prime factorization.
class FactoredInt {
   public:
    /// Factors by trial division up to `trial_bound`. A leftover cofactor is
    /// accepted only if it is prime; otherwise InvalidArgument.
    static FactoredInt factor(const BigInt& n, std::uint64_t trial_bound = kDefaultTrialBound);

    /// Builds from explicit prime powers; primes must be strictly increasing and prime.
    static FactoredInt from_factors(std::vector<PrimePower> factors);

    const BigInt& value() const noexcept { return value_; }
    const std::vector<PrimePower>& factors() const noexcept { return factors_; }
    bool is_squarefree() const noexcept;

   private:
    FactoredInt() = default;

    BigInt value_ = 1;
    std::vector<PrimePower> factors_;
};

int mobius(const FactoredInt& n);

BigInt totient(const FactoredInt& n);

}  // namespace flatcyclo
