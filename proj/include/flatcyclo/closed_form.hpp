#pragma once

#include <cstddef>
#include <cstdint>

#include "flatcyclo/oracle.hpp"
#include "flatcyclo/polycore.hpp"
#include "flatcyclo/triple.hpp"

namespace flatcyclo {

/// Phi_{p1 p2} as the two non-overlapping double sums
///   sum_{i<s1, j<s2} x^{i p1 + j p2}  -  sum_{i<p2-s1, j<p1-s2} x^{i p1 + j p2 + 1},
/// merged by sorting. Works for any pair of distinct odd primes.
SparsePoly binary_terms_general(const BinaryPair& pair);

/// Phi_{p1 p2} for p2 = 1 (mod p1) as
///   1 + sum_{a=0}^{p1-2} sum_{b=0}^{q2-1} (-x^{a(p2-1)+b p1+a+1} + x^{a(p2-1)+(b+1)p1}),
/// emitted in loop order, which is already ascending. Throws FamilyViolation
/// when the congruence fails and InvalidArgument when p1 >= p2 or either is not
/// an odd prime.
SparsePoly binary_terms_ordered(const BigInt& p1, const BigInt& p2);

/// The single-sign run inside a block.
///   Low:  +x^{i1 p2 + i2 p1 + 1}        * (1 + x + ... + x^{p1-2-i1})
///   High: -x^{i1 (p2-1) + (i2+1) p1}    * (1 + x + ... + x^{i1})
SparsePoly block_g(std::uint64_t i1, std::uint64_t i2, Branch branch, const PrimeTriple& t);

/// f_i = 1 + g_i - x^{(i1+1) p2} - x^{p2} g_i, assembled in that order. The
/// four pieces never overlap and the result is ascending with degree < p1 p2.
SparsePoly block_f(const BlockIndex& i, const PrimeTriple& t);

/// u = i1 (p2-1) + i2 p1 + i3: block i equals -Psi_{p1p2} times the first u + 1
/// coefficients of Phi_{p1p2}.
BigInt truncation_index(const BlockIndex& i, const PrimeTriple& t);

/// Independent route to f_i: -Psi_{p1p2} * T_{u+1}(Phi_{p1p2}) with
/// u = i1 (p2-1) + i2 p1 + i3, evaluated on dense polynomials from the oracle.
/// Holds Phi_{p1p2} and Psi_{p1p2} so repeated queries skip the divisions.
class BlockLemmaOracle {
   public:
    /// Throws TooLarge when p1 p2 exceeds the dense budget.
    explicit BlockLemmaOracle(PrimeTriple t, std::size_t budget = kDefaultDenseBudget);

    SparsePoly block(const BlockIndex& i) const;

   private:
    PrimeTriple triple_;
    DensePoly phi_;
    DensePoly psi_;
};

SparsePoly block_f_oracle(const BlockIndex& i, const PrimeTriple& t,
                          std::size_t budget = kDefaultDenseBudget);

/// Coefficient of x^e in Phi_{p1p2p3}, found by splitting e along the radices
/// and testing membership in the four pieces of the located block. Never
/// enumerates; cost is polynomial in the bit length of e. Throws OutOfRange
/// when e < 0 or e > phi(p1 p2 p3).
int coefficient_at(const PrimeTriple& t, const BigInt& e);

/// Number of value-distinct blocks over the whole index set, counted by
/// generating and deduplicating every f_i. Throws TooLarge if the index set is
/// not enumerable.
std::uint64_t count_distinct_blocks(const PrimeTriple& t);

}  // namespace flatcyclo
