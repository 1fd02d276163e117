#include <random>

#include "doctest.h"
#include "flatcyclo/error.hpp"
#include "flatcyclo/ntheory.hpp"
#include "oracles.hpp"

using namespace flatcyclo;

namespace {

const BigInt kMersenne127 = (BigInt(1) << 127) - 1;

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an exception");
    return ErrorKind::InvalidArgument;
}

BigInt random_bits(std::mt19937_64& rng, unsigned bits) {
    BigInt v = 0;
    for (unsigned k = 0; k < bits; k += 64) v = (v << 64) + from_u64(rng());
    return v >> (((bits + 63) / 64) * 64 - bits);
}

}  // namespace

TEST_CASE("is_prime: examples") {
    CHECK_FALSE(is_prime(BigInt(1)));
    CHECK_FALSE(is_prime(BigInt(0)));
    CHECK(is_prime(BigInt(2)));
    CHECK(is_prime(BigInt(79)));
    CHECK(is_prime(kMersenne127));
    CHECK_FALSE(is_prime((BigInt(1) << 128) - 1));
}

TEST_CASE("is_prime agrees with trial division below 10^6") {
    std::uint64_t mismatches = 0;
    for (std::uint64_t n = 1; n < 1'000'000; ++n)
        if (is_prime(from_u64(n)) != oracles::trial_division_prime(n)) ++mismatches;
    CHECK(mismatches == 0);
}

TEST_CASE("is_prime rejects strong pseudoprimes and Carmichael numbers") {
    // Strong pseudoprimes to several small bases; deterministic branch.
    for (const char* s : {"3215031751", "2152302898747", "3474749660383", "341550071728321", "3825123056546413051",
                          "318665857834031151167461"})
        CHECK_FALSE(is_prime(BigInt(s)));
    // Carmichael numbers (6k+1)(12k+1)(18k+1) above 2^64 go through the BPSW branch.
    std::uint64_t found = 0;
    for (std::uint64_t k = 1'000'000; found < 20; ++k) {
        const BigInt a = from_u64(6 * k + 1), b = from_u64(12 * k + 1), c = from_u64(18 * k + 1);
        if (!is_prime(a) || !is_prime(b) || !is_prime(c)) continue;
        const BigInt n = a * b * c;
        REQUIRE(mpz_sizeinbase(n.get_mpz_t(), 2) > 64);
        CHECK_FALSE(is_prime(n));
        ++found;
    }
    // Perfect squares of primes.
    CHECK_FALSE(is_prime(kMersenne127 * kMersenne127));
}

TEST_CASE("is_prime agrees with GMP's probabilistic test on large random inputs") {
    std::mt19937_64 rng(20261015);
    int primes = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const unsigned bits = 65 + static_cast<unsigned>(rng() % 300);
        BigInt n = random_bits(rng, bits) | 1;
        const bool gmp = mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
        CHECK(is_prime(n) == gmp);
        primes += gmp;
    }
    // Products of two large primes.
    for (int trial = 0; trial < 50; ++trial) {
        BigInt p, q;
        BigInt a = random_bits(rng, 80), b = random_bits(rng, 90);
        mpz_nextprime(p.get_mpz_t(), a.get_mpz_t());
        mpz_nextprime(q.get_mpz_t(), b.get_mpz_t());
        CHECK(is_prime(p));
        CHECK(is_prime(q));
        CHECK_FALSE(is_prime(p * q));
    }
    CHECK(primes > 0);
}

TEST_CASE("mod_inverse") {
    CHECK(mod_inverse(BigInt(1), BigInt(7)) == 1);
    CHECK(mod_inverse(BigInt(3), BigInt(13)) == 9);
    CHECK(mod_inverse(BigInt(13), BigInt(3)) == 1);
    CHECK(mod_inverse(BigInt(-2), BigInt(7)) == 3);
    CHECK(kind_of([] { mod_inverse(BigInt(6), BigInt(9)); }) == ErrorKind::NotInvertible);
    CHECK(kind_of([] { mod_inverse(BigInt(0), BigInt(5)); }) == ErrorKind::NotInvertible);
    CHECK(kind_of([] { mod_inverse(BigInt(1), BigInt(1)); }) == ErrorKind::InvalidArgument);

    for (std::uint64_t m = 2; m < 300; ++m)
        for (std::uint64_t a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            const BigInt x = mod_inverse(from_u64(a), from_u64(m));
            CHECK(x >= 1);
            CHECK(x < from_u64(m));
            CHECK(BigInt((x * a) % m) == 1);
        }
}

TEST_CASE("quo") {
    CHECK(quo(BigInt(13), BigInt(3)) == 4);
    CHECK(quo(BigInt(79), BigInt(39)) == 2);
    CHECK(quo(BigInt(5), BigInt(5)) == 1);
    CHECK(quo(BigInt(0), BigInt(5)) == 0);
    CHECK(kind_of([] { quo(BigInt(5), BigInt(0)); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { quo(BigInt(-5), BigInt(3)); }) == ErrorKind::InvalidArgument);

    std::mt19937_64 rng(7);
    for (int k = 0; k < 2000; ++k) {
        const BigInt a = random_bits(rng, 1 + static_cast<unsigned>(rng() % 200));
        const BigInt b = random_bits(rng, 1 + static_cast<unsigned>(rng() % 100)) + 1;
        const BigInt q = quo(a, b);
        CHECK(q * b <= a);
        CHECK(a < (q + 1) * b);
    }
}

TEST_CASE("FactoredInt, mobius, totient") {
    CHECK(mobius(FactoredInt::factor(BigInt(1))) == 1);
    CHECK(mobius(FactoredInt::factor(BigInt(15))) == 1);
    CHECK(mobius(FactoredInt::factor(BigInt(12))) == 0);
    CHECK(mobius(FactoredInt::factor(BigInt(30))) == -1);

    CHECK(totient(FactoredInt::factor(BigInt(3081))) == 1872);
    CHECK(totient(FactoredInt::factor(BigInt(903))) == 504);
    CHECK(totient(FactoredInt::factor(BigInt(79))) == 78);
    CHECK(totient(FactoredInt::factor(BigInt(1))) == 1);
    CHECK(totient(FactoredInt::factor(BigInt(72))) == 24);

    const auto f = FactoredInt::factor(BigInt(3081));
    REQUIRE(f.factors().size() == 3);
    CHECK(f.factors()[0].prime == 3);
    CHECK(f.factors()[1].prime == 13);
    CHECK(f.factors()[2].prime == 79);

    // A large prime cofactor is accepted; a large composite one is not.
    const auto big = FactoredInt::factor(3 * kMersenne127);
    CHECK(big.factors().back().prime == kMersenne127);
    CHECK(kind_of([] { FactoredInt::factor(kMersenne127 * kMersenne127, 1000); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { FactoredInt::factor(BigInt(0)); }) == ErrorKind::InvalidArgument);

    CHECK(FactoredInt::from_factors({{BigInt(2), 2}, {BigInt(3), 1}}).value() == 12);
    CHECK(kind_of([] { FactoredInt::from_factors({{BigInt(3), 1}, {BigInt(2), 1}}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { FactoredInt::from_factors({{BigInt(4), 1}}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("totient is multiplicative on coprime inputs and matches a gcd count") {
    for (std::uint64_t a = 1; a < 60; ++a)
        for (std::uint64_t b = 1; b < 60; ++b) {
            if (std::gcd(a, b) != 1) continue;
            CHECK(totient(FactoredInt::factor(from_u64(a * b))) ==
                  totient(FactoredInt::factor(from_u64(a))) * totient(FactoredInt::factor(from_u64(b))));
        }
    for (std::uint64_t n = 1; n < 500; ++n) {
        std::uint64_t count = 0;
        for (std::uint64_t k = 1; k <= n; ++k) count += std::gcd(k, n) == 1;
        CHECK(totient(FactoredInt::factor(from_u64(n))) == from_u64(count));
    }
}

TEST_CASE("parse_decimal") {
    CHECK(parse_decimal("170141183460469231731687303715884105727") == kMersenne127);
    CHECK_FALSE(parse_decimal("").has_value());
    CHECK_FALSE(parse_decimal("-3").has_value());
    CHECK_FALSE(parse_decimal("12a").has_value());
    CHECK_FALSE(parse_decimal(" 5").has_value());
}
