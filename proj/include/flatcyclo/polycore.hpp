#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "flatcyclo/bigint.hpp"

namespace flatcyclo {

/// Default cap on the number of coefficients a DensePoly may hold.
inline constexpr std::size_t kDefaultDenseBudget = 16'000'000;

// ---------------------------------------------------------------------------
// Dense representation: exact int64 coefficients, index = exponent.
// The zero polynomial is the empty vector. Arithmetic throws Overflow instead
// of wrapping.
// ---------------------------------------------------------------------------
class DensePoly {
   public:
    DensePoly() = default;
    explicit DensePoly(std::vector<std::int64_t> coeffs);
    DensePoly(std::initializer_list<std::int64_t> coeffs);

    /// c * x^e
    static DensePoly monomial(std::size_t e, std::int64_t c = 1);
    /// x^k - 1
    static DensePoly x_pow_minus_one(std::size_t k);

    const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Throws InvalidArgument on the zero polynomial.
    std::size_t degree() const;
    /// Coefficient of x^e, zero past the end.
    std::int64_t operator[](std::size_t e) const noexcept {
        return e < coeffs_.size() ? coeffs_[e] : 0;
    }
    std::size_t nonzero_count() const noexcept;

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

   private:
    void trim() noexcept;

    std::vector<std::int64_t> coeffs_;
};

DensePoly dense_mul(const DensePoly& a, const DensePoly& b);

/// Quotient of an exact division. Throws DivisionByZero or InexactDivision.
DensePoly dense_exact_div(const DensePoly& num, const DensePoly& den);

/// rem(p, x^s): the terms of exponent < s.
DensePoly truncate(const DensePoly& p, std::size_t s);

DensePoly dense_add(const DensePoly& a, const DensePoly& b);

/// p * x^k
DensePoly dense_shift(const DensePoly& p, std::size_t k);

DensePoly dense_negate(const DensePoly& p);

// ---------------------------------------------------------------------------
// Sparse representation: strictly ascending +-1 terms with big exponents.
// ---------------------------------------------------------------------------
struct Term {
    BigInt exponent;
    int coeff = 1;
};

bool operator==(const Term& a, const Term& b);

class SparsePoly {
   public:
    SparsePoly() = default;
    /// Throws InvalidArgument unless exponents strictly ascend, are nonnegative
    /// and every coefficient is +-1.
    explicit SparsePoly(std::vector<Term> terms);

    /// Sorts first; still rejects repeated exponents.
    static SparsePoly from_unsorted(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool empty() const noexcept { return terms_.empty(); }
    const Term& operator[](std::size_t i) const noexcept { return terms_[i]; }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    /// Largest exponent. Throws InvalidArgument on the zero polynomial.
    const BigInt& degree() const;

    /// p * x^k
    SparsePoly shifted(const BigInt& k) const;

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }

   private:
    std::vector<Term> terms_;
};

/// Lexicographic order on (exponent, coeff) sequences; used for deduplication.
bool operator<(const SparsePoly& a, const SparsePoly& b);

/// Throws NotFlat when a coefficient lies outside {-1, 0, 1}.
SparsePoly sparse_from_dense(const DensePoly& p);

/// Throws TooLarge when max_degree + 1 exceeds `budget`, InvalidArgument when
/// an exponent of `p` exceeds max_degree.
DensePoly dense_from_sparse(const SparsePoly& p, const BigInt& max_degree,
                            std::size_t budget = kDefaultDenseBudget);

}  // namespace flatcyclo
