#pragma once

#include <cstdint>

#include "flatcyclo/bigint.hpp"

namespace flatcyclo {

/// Block strides ((p2-1)(p3-1), p1(p3-1), p3-1, p1 p2).
struct Radices {
    BigInt rho1;
    BigInt rho2;
    BigInt rho3;
    BigInt rho4;
};

/// Odd primes p1 < p2 < p3 with p2 = 1 (mod p1) and p3 = 1 (mod p1 p2).
///
/// The constructor is the only validation gate: a PrimeTriple that exists is a
/// member of the family. Non-prime, even or unordered inputs raise
/// InvalidArgument; a failed congruence raises FamilyViolation.
class PrimeTriple {
   public:
    PrimeTriple(BigInt p1, BigInt p2, BigInt p3);

    const BigInt& p1() const noexcept { return p1_; }
    const BigInt& p2() const noexcept { return p2_; }
    const BigInt& p3() const noexcept { return p3_; }
    /// (p2 - 1) / p1
    const BigInt& q2() const noexcept { return q2_; }
    /// (p3 - 1) / (p1 p2)
    const BigInt& q3() const noexcept { return q3_; }
    const Radices& radices() const noexcept { return rho_; }
    /// p1 p2 p3
    const BigInt& product() const noexcept { return product_; }
    /// phi(p1 p2 p3) = (p1-1)(p2-1)(p3-1), the degree of the polynomial.
    const BigInt& totient() const noexcept { return totient_; }

    /// True when p1, q2 and q3 all fit in 64 bits, i.e. the block index set
    /// can be enumerated with machine integers.
    bool enumerable() const noexcept;

   private:
    BigInt p1_, p2_, p3_;
    BigInt q2_, q3_;
    Radices rho_;
    BigInt product_;
    BigInt totient_;
};

bool operator==(const PrimeTriple& a, const PrimeTriple& b);

/// Two distinct odd primes with their mutual inverses s1 = p1^-1 mod p2 and
/// s2 = p2^-1 mod p1. No congruence condition.
class BinaryPair {
   public:
    BinaryPair(BigInt p1, BigInt p2);

    const BigInt& p1() const noexcept { return p1_; }
    const BigInt& p2() const noexcept { return p2_; }
    const BigInt& s1() const noexcept { return s1_; }
    const BigInt& s2() const noexcept { return s2_; }

   private:
    BigInt p1_, p2_, s1_, s2_;
};

/// Address of one block: (i1, i2, i3, i4) with 0 <= i1 <= p1-2, 0 <= i2 < q2,
/// 0 <= i3 <= p1-1, 0 <= i4 < q3.
struct BlockIndex {
    std::uint64_t i1 = 0;
    std::uint64_t i2 = 0;
    std::uint64_t i3 = 0;
    std::uint64_t i4 = 0;

    friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

/// Which form the single-sign run g takes: Low when i3 <= i1, High otherwise.
enum class Branch { Low, High };

inline Branch branch_of(const BlockIndex& i) noexcept {
    return i.i3 <= i.i1 ? Branch::Low : Branch::High;
}

/// Throws IndexOutOfRange unless i lies in the index set of t.
void check_block_index(const BlockIndex& i, const PrimeTriple& t);

}  // namespace flatcyclo
