#pragma once

#include <cstdint>

#include "flatcyclo/bigint.hpp"
#include "flatcyclo/triple.hpp"

namespace flatcyclo {

/// Unreduced ratio of two positive integers. Kept unreduced so that the
/// numerator and denominator stay recognizable (225/1872, not 25/208).
struct Fraction {
    BigInt num;
    BigInt den;

    mpq_class value() const;
};

/// Number of nonzero terms: 2 q3 q2 p1 (p1-1)(p1+4) / 3 + 1, exact.
BigInt hw_ternary(const PrimeTriple& t);

/// Number of nonzero terms of Phi_{p1 p2}: 2 s1 s2 - 1.
BigInt hw_binary(const BinaryPair& pair);

struct Density {
    Fraction exact;      // hw / phi(p1 p2 p3)
    Fraction asymptote;  // 2 / (3 p2)
};

Density density(const PrimeTriple& t);

/// Terms in one block: 2(p1 - i1) on the low branch, 2(i1 + 2) on the high one.
/// Throws IndexOutOfRange unless 0 <= i1 <= p1 - 2.
BigInt block_hw(const BigInt& i1, Branch branch, const BigInt& p1);

/// 2 (p1 - 1) q2
BigInt distinct_block_count(const PrimeTriple& t);

/// (p1-1)(p2-1)(p3-1)
BigInt degree(const PrimeTriple& t);

}  // namespace flatcyclo
