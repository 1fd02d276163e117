#include "doctest.h"
#include "flatcyclo/analytics.hpp"
#include "flatcyclo/closed_form.hpp"
#include "flatcyclo/error.hpp"
#include "flatcyclo/familysearch.hpp"
#include "flatcyclo/oracle.hpp"
#include "flatcyclo/term_stream.hpp"
#include "oracles.hpp"

using namespace flatcyclo;

namespace {

const char* kMersenneP2 = "19396094914493492417412352623610788052879";
const char* kMersenneP3 = "277206261634134971844028938110798851397484091203319282999801642607689554229994773";
const char* kMersenneHw =
    "3144280094472279441139867399991460381645363193783142644102273813658808597364717079870210"
    "3022370537039135233707348104609";

PrimeTriple mersenne_triple() { return PrimeTriple((BigInt(1) << 127) - 1, BigInt(kMersenneP2), BigInt(kMersenneP3)); }

}  // namespace

TEST_CASE("hw_ternary") {
    CHECK(hw_ternary(PrimeTriple(BigInt(3), BigInt(13), BigInt(79))) == 225);
    CHECK(hw_ternary(PrimeTriple(BigInt(3), BigInt(7), BigInt(43))) == 113);
    CHECK(to_decimal(hw_ternary(mersenne_triple())) == kMersenneHw);
    CHECK(std::string(kMersenneHw).size() == 119);
}

TEST_CASE("hw_ternary: the corollary's phi form is integral and agrees") {
    for (const PrimeTriple& t : enumerate_triples(200'000)) {
        // (2/3) phi (p1+4) / (p1 p2) + 1 with exact divisions.
        const BigInt numer = 2 * t.totient() * (t.p1() + 4);
        const BigInt denom = 3 * t.p1() * t.p2();
        CHECK(BigInt(numer % denom) == 0);
        CHECK(BigInt(numer / denom + 1) == hw_ternary(t));
    }
    const PrimeTriple big = mersenne_triple();
    const BigInt numer = 2 * big.totient() * (big.p1() + 4);
    const BigInt denom = 3 * big.p1() * big.p2();
    CHECK(BigInt(numer % denom) == 0);
    CHECK(BigInt(numer / denom + 1) == hw_ternary(big));
}

TEST_CASE("hw_ternary equals the streamed count and the sum of block weights") {
    for (const PrimeTriple& t : enumerate_triples(100'000)) {
        TernaryTermStream stream(t);
        std::uint64_t n = 0;
        while (stream.next()) ++n;
        CHECK(from_u64(n) == hw_ternary(t));

        BigInt sum = 1;
        const auto p1 = to_u64(t.p1()), q2 = to_u64(t.q2()), q3 = to_u64(t.q3());
        for (std::uint64_t i1 = 0; i1 + 2 <= p1; ++i1)
            for (std::uint64_t i2 = 0; i2 < q2; ++i2)
                for (std::uint64_t i3 = 0; i3 < p1; ++i3)
                    for (std::uint64_t i4 = 0; i4 < q3; ++i4) {
                        const Branch br = i3 <= i1 ? Branch::Low : Branch::High;
                        const BigInt w = block_hw(from_u64(i1), br, t.p1());
                        CHECK(w == from_u64(block_f({i1, i2, i3, i4}, t).size()));
                        sum += w;
                    }
        CHECK(sum == hw_ternary(t));
    }
}

TEST_CASE("hw_binary") {
    CHECK(hw_binary(BinaryPair(BigInt(3), BigInt(5))) == 7);
    CHECK(hw_binary(BinaryPair(BigInt(3), BigInt(7))) == 9);
    CHECK(hw_binary(BinaryPair(BigInt(3), BigInt(13))) == 17);
    for (std::uint64_t p1 = 3; p1 <= 100; p1 += 2)
        for (std::uint64_t p2 = p1 + 2; p2 <= 100; p2 += 2) {
            if (!oracles::trial_division_prime(p1) || !oracles::trial_division_prime(p2)) continue;
            const auto count = cyclotomic_dense(FactoredInt::factor(from_u64(p1 * p2))).nonzero_count();
            CHECK(hw_binary(BinaryPair(from_u64(p1), from_u64(p2))) == from_u64(count));
        }
}

TEST_CASE("density") {
    const Density d = density(PrimeTriple(BigInt(3), BigInt(13), BigInt(79)));
    CHECK(d.exact.num == 225);
    CHECK(d.exact.den == 1872);
    CHECK(d.asymptote.num == 2);
    CHECK(d.asymptote.den == 39);
    CHECK(d.exact.value() == mpq_class(25, 208));

    const Density big = density(mersenne_triple());
    BigInt ten40, ten41;
    mpz_ui_pow_ui(ten40.get_mpz_t(), 10, 40);
    mpz_ui_pow_ui(ten41.get_mpz_t(), 10, 41);
    CHECK(big.exact.value() >= mpq_class(BigInt(1), ten41));
    CHECK(big.exact.value() <= mpq_class(BigInt(1), ten40));
    // The asymptote is approached as p1 grows.
    const mpq_class rel = (big.exact.value() - big.asymptote.value()) / big.asymptote.value();
    CHECK(abs(rel) < mpq_class(1, 1'000'000));
}

TEST_CASE("block_hw") {
    CHECK(block_hw(BigInt(0), Branch::Low, BigInt(3)) == 6);
    CHECK(block_hw(BigInt(0), Branch::High, BigInt(3)) == 4);
    for (long p1 : {3, 5, 7, 101}) CHECK(block_hw(BigInt(p1 - 2), Branch::Low, BigInt(p1)) == 4);
    CHECK_THROWS_AS(block_hw(BigInt(2), Branch::Low, BigInt(3)), Error);
    CHECK_THROWS_AS(block_hw(BigInt(-1), Branch::High, BigInt(3)), Error);
}

TEST_CASE("distinct_block_count and degree") {
    const PrimeTriple t(BigInt(3), BigInt(13), BigInt(79));
    CHECK(distinct_block_count(t) == 16);
    CHECK(from_u64(count_distinct_blocks(t)) == distinct_block_count(t));
    CHECK(distinct_block_count(PrimeTriple(BigInt(3), BigInt(7), BigInt(43))) == 8);
    CHECK(degree(t) == 1872);
    CHECK(degree(PrimeTriple(BigInt(3), BigInt(7), BigInt(43))) == 504);
    for (const PrimeTriple& s : enumerate_triples(30'000)) {
        TernaryTermStream stream(s);
        BigInt last;
        while (auto term = stream.next()) last = term->exponent;
        CHECK(last == degree(s));
        CHECK(from_u64(count_distinct_blocks(s)) == distinct_block_count(s));
    }
}
