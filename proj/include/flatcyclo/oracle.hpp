#pragma once

#include <cstddef>

#include "flatcyclo/ntheory.hpp"
#include "flatcyclo/polycore.hpp"

namespace flatcyclo {

/// Phi_n by exact division: the product of (x^{n/d} - 1) over squarefree d | n
/// with mu(d) = +1, divided in turn by each factor with mu(d) = -1.
///
/// Throws TooLarge when n (the largest intermediate degree) exceeds `budget`.
DensePoly cyclotomic_dense(const FactoredInt& n, std::size_t budget = kDefaultDenseBudget);

/// (x^{p1 p2} - 1) / Phi_{p1 p2}, computed by division.
DensePoly cofactor_psi(const BigInt& p1, const BigInt& p2,
                       std::size_t budget = kDefaultDenseBudget);

}  // namespace flatcyclo
