#include "flatcyclo/analytics.hpp"

#include "flatcyclo/error.hpp"

namespace flatcyclo {

namespace {

// a / b, asserting the division is exact.
BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw Error(ErrorKind::InexactDivision, std::string(what) + ": closed form is not integral");
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

mpq_class Fraction::value() const {
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

BigInt hw_ternary(const PrimeTriple& t) {
    const BigInt& p1 = t.p1();
    return t.q3() * t.q2() * exact_div(2 * p1 * (p1 - 1) * (p1 + 4), BigInt(3), "hw_ternary") + 1;
}

BigInt hw_binary(const BinaryPair& pair) { return 2 * pair.s1() * pair.s2() - 1; }

Density density(const PrimeTriple& t) {
    return {{hw_ternary(t), t.totient()}, {BigInt(2), 3 * t.p2()}};
}

BigInt block_hw(const BigInt& i1, Branch branch, const BigInt& p1) {
    if (sgn(i1) < 0 || i1 > p1 - 2)
        throw Error(ErrorKind::IndexOutOfRange, "block_hw: i1 = " + to_decimal(i1) + " outside [0, p1-2]");
    return branch == Branch::Low ? BigInt(2 * (p1 - i1)) : BigInt(2 * (i1 + 2));
}

BigInt distinct_block_count(const PrimeTriple& t) { return 2 * (t.p1() - 1) * t.q2(); }

BigInt degree(const PrimeTriple& t) { return (t.p1() - 1) * (t.p2() - 1) * (t.p3() - 1); }

}  // namespace flatcyclo
