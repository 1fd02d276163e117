#include "flatcyclo/closed_form.hpp"

#include <set>

#include "flatcyclo/error.hpp"
#include "flatcyclo/ntheory.hpp"
#include "flatcyclo/oracle.hpp"

namespace flatcyclo {

namespace {

bool is_odd_prime(const BigInt& p) { return p >= 3 && mpz_odd_p(p.get_mpz_t()) && is_prime(p); }

void require_odd_prime(const BigInt& p, const char* name) {
    if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidArgument, std::string(name) + " = " + to_decimal(p) + " is not an odd prime");
}

BigInt residue(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

void require_congruent_one(const BigInt& p, const BigInt& m, const std::string& name, const std::string& mod_name) {
    const BigInt r = residue(p, m);
    if (r != 1)
        throw Error(ErrorKind::FamilyViolation, name + " = " + to_decimal(p) + " is not congruent to 1 mod " + mod_name +
                                                    " = " + to_decimal(m) + " (residue " + to_decimal(r) + ")");
}

// Pieces of the run g for block (i1, i2) on the given branch.
struct Run {
    BigInt start;
    BigInt length;
    int sign;
};

Run run_of(const BigInt& i1, const BigInt& i2, Branch branch, const PrimeTriple& t) {
    const BigInt& p1 = t.p1();
    const BigInt& p2 = t.p2();
    if (branch == Branch::Low) return {i1 * p2 + i2 * p1 + 1, p1 - 1 - i1, +1};
    return {i1 * (p2 - 1) + (i2 + 1) * p1, i1 + 1, -1};
}

}  // namespace

// ---------------------------------------------------------------------------
// PrimeTriple / BinaryPair
// ---------------------------------------------------------------------------

PrimeTriple::PrimeTriple(BigInt p1, BigInt p2, BigInt p3) : p1_(std::move(p1)), p2_(std::move(p2)), p3_(std::move(p3)) {
    require_odd_prime(p1_, "p1");
    require_odd_prime(p2_, "p2");
    require_odd_prime(p3_, "p3");
    if (!(p1_ < p2_ && p2_ < p3_)) throw Error(ErrorKind::InvalidArgument, "primes must satisfy p1 < p2 < p3");
    const BigInt p1p2 = p1_ * p2_;
    require_congruent_one(p2_, p1_, "p2", "p1");
    require_congruent_one(p3_, p1p2, "p3", "p1*p2");

    q2_ = quo(p2_, p1_);
    q3_ = quo(p3_, p1p2);
    rho_ = {(p2_ - 1) * (p3_ - 1), p1_ * (p3_ - 1), p3_ - 1, p1p2};
    product_ = p1p2 * p3_;
    totient_ = (p1_ - 1) * (p2_ - 1) * (p3_ - 1);
}

bool PrimeTriple::enumerable() const noexcept { return fits_u64(p1_) && fits_u64(q2_) && fits_u64(q3_); }

bool operator==(const PrimeTriple& a, const PrimeTriple& b) {
    return a.p1() == b.p1() && a.p2() == b.p2() && a.p3() == b.p3();
}

BinaryPair::BinaryPair(BigInt p1, BigInt p2) : p1_(std::move(p1)), p2_(std::move(p2)) {
    require_odd_prime(p1_, "p1");
    require_odd_prime(p2_, "p2");
    if (p1_ == p2_) throw Error(ErrorKind::InvalidArgument, "p1 and p2 must be distinct");
    s1_ = mod_inverse(p1_, p2_);
    s2_ = mod_inverse(p2_, p1_);
}

void check_block_index(const BlockIndex& i, const PrimeTriple& t) {
    const bool ok = from_u64(i.i1) <= t.p1() - 2 && from_u64(i.i2) < t.q2() && from_u64(i.i3) < t.p1() &&
                    from_u64(i.i4) < t.q3();
    if (!ok)
        throw Error(ErrorKind::IndexOutOfRange, "block index (" + std::to_string(i.i1) + "," + std::to_string(i.i2) + "," +
                                                    std::to_string(i.i3) + "," + std::to_string(i.i4) +
                                                    ") outside the index set");
}

// ---------------------------------------------------------------------------
// Binary case
// ---------------------------------------------------------------------------

SparsePoly binary_terms_general(const BinaryPair& pair) {
    const std::uint64_t p1 = to_u64(pair.p1());
    const std::uint64_t p2 = to_u64(pair.p2());
    const std::uint64_t s1 = to_u64(pair.s1());
    const std::uint64_t s2 = to_u64(pair.s2());

    std::vector<Term> terms;
    terms.reserve(2 * s1 * s2);
    for (std::uint64_t i = 0; i < s1; ++i)
        for (std::uint64_t j = 0; j < s2; ++j) terms.push_back({from_u64(i) * p1 + from_u64(j) * p2, +1});
    for (std::uint64_t i = 0; i < p2 - s1; ++i)
        for (std::uint64_t j = 0; j < p1 - s2; ++j) terms.push_back({from_u64(i) * p1 + from_u64(j) * p2 + 1, -1});
    return SparsePoly::from_unsorted(std::move(terms));
}

SparsePoly binary_terms_ordered(const BigInt& p1, const BigInt& p2) {
    require_odd_prime(p1, "p1");
    require_odd_prime(p2, "p2");
    if (!(p1 < p2)) throw Error(ErrorKind::InvalidArgument, "binary_terms_ordered needs p1 < p2");
    require_congruent_one(p2, p1, "p2", "p1");

    const std::uint64_t a_end = to_u64(p1 - 1);
    const std::uint64_t q2 = to_u64(quo(p2, p1));
    std::vector<Term> terms;
    terms.push_back({BigInt(0), +1});
    for (std::uint64_t a = 0; a < a_end; ++a) {
        const BigInt base = from_u64(a) * (p2 - 1);
        for (std::uint64_t b = 0; b < q2; ++b) {
            terms.push_back({base + from_u64(b) * p1 + a + 1, -1});
            terms.push_back({base + from_u64(b + 1) * p1, +1});
        }
    }
    // The constructor rejects any descent, so loop order is checked, not sorted.
    return SparsePoly(std::move(terms));
}

// ---------------------------------------------------------------------------
// Blocks
// ---------------------------------------------------------------------------

SparsePoly block_g(std::uint64_t i1, std::uint64_t i2, Branch branch, const PrimeTriple& t) {
    if (!(from_u64(i1) <= t.p1() - 2 && from_u64(i2) < t.q2()))
        throw Error(ErrorKind::IndexOutOfRange, "block_g: (i1, i2) = (" + std::to_string(i1) + ", " +
                                                    std::to_string(i2) + ") outside the index set");
    const Run run = run_of(from_u64(i1), from_u64(i2), branch, t);
    const std::uint64_t n = to_u64(run.length);
    std::vector<Term> terms;
    terms.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) terms.push_back({run.start + k, run.sign});
    return SparsePoly(std::move(terms));
}

SparsePoly block_f(const BlockIndex& i, const PrimeTriple& t) {
    check_block_index(i, t);
    const SparsePoly g = block_g(i.i1, i.i2, branch_of(i), t);

    std::vector<Term> terms;
    terms.reserve(2 * g.size() + 2);
    terms.push_back({BigInt(0), +1});                          // S1
    terms.insert(terms.end(), g.begin(), g.end());             // S2
    terms.push_back({from_u64(i.i1 + 1) * t.p2(), -1});        // S3
    for (const Term& term : g)                                 // S4
        terms.push_back({term.exponent + t.p2(), -term.coeff});
    return SparsePoly(std::move(terms));
}

BigInt truncation_index(const BlockIndex& i, const PrimeTriple& t) {
    check_block_index(i, t);
    return from_u64(i.i1) * (t.p2() - 1) + from_u64(i.i2) * t.p1() + from_u64(i.i3);
}

BlockLemmaOracle::BlockLemmaOracle(PrimeTriple t, std::size_t budget) : triple_(std::move(t)) {
    const BigInt p1p2 = triple_.p1() * triple_.p2();
    if (p1p2 > from_u64(budget)) throw Error(ErrorKind::TooLarge, "p1*p2 exceeds the dense budget");
    phi_ = cyclotomic_dense(FactoredInt::from_factors({{triple_.p1(), 1}, {triple_.p2(), 1}}), budget);
    psi_ = dense_exact_div(DensePoly::x_pow_minus_one(to_u64(p1p2)), phi_);
}

SparsePoly BlockLemmaOracle::block(const BlockIndex& i) const {
    const std::uint64_t u = to_u64(truncation_index(i, triple_));
    return sparse_from_dense(dense_negate(dense_mul(psi_, truncate(phi_, u + 1))));
}

SparsePoly block_f_oracle(const BlockIndex& i, const PrimeTriple& t, std::size_t budget) {
    check_block_index(i, t);
    return BlockLemmaOracle(t, budget).block(i);
}

int coefficient_at(const PrimeTriple& t, const BigInt& e) {
    if (sgn(e) < 0 || e > t.totient())
        throw Error(ErrorKind::OutOfRange, "exponent " + to_decimal(e) + " outside [0, " + to_decimal(t.totient()) + "]");
    if (e == t.totient()) return 1;

    const Radices& rho = t.radices();
    BigInt r = e;
    BigInt idx[4];
    const BigInt* radix[4] = {&rho.rho1, &rho.rho2, &rho.rho3, &rho.rho4};
    for (int k = 0; k < 4; ++k) {
        mpz_fdiv_qr(idx[k].get_mpz_t(), r.get_mpz_t(), r.get_mpz_t(), radix[k]->get_mpz_t());
    }
    const BigInt& i1 = idx[0];
    const BigInt& i2 = idx[1];
    const BigInt& i3 = idx[2];
    const BigInt& local = r;

    if (local == 0) return 1;
    const Run g = run_of(i1, i2, i3 <= i1 ? Branch::Low : Branch::High, t);
    if (g.start <= local && local < g.start + g.length) return g.sign;
    if (local == (i1 + 1) * t.p2()) return -1;
    const BigInt s4 = g.start + t.p2();
    if (s4 <= local && local < s4 + g.length) return -g.sign;
    return 0;
}

std::uint64_t count_distinct_blocks(const PrimeTriple& t) {
    if (!t.enumerable()) throw Error(ErrorKind::TooLarge, "index set is not enumerable with machine integers");
    const std::uint64_t p1 = to_u64(t.p1());
    const std::uint64_t q2 = to_u64(t.q2());
    const std::uint64_t q3 = to_u64(t.q3());
    std::set<SparsePoly> seen;
    for (std::uint64_t i1 = 0; i1 + 2 <= p1; ++i1)
        for (std::uint64_t i2 = 0; i2 < q2; ++i2)
            for (std::uint64_t i3 = 0; i3 < p1; ++i3)
                for (std::uint64_t i4 = 0; i4 < q3; ++i4) seen.insert(block_f({i1, i2, i3, i4}, t));
    return seen.size();
}

}  // namespace flatcyclo
