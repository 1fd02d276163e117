#include "flatcyclo/ntheory.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "flatcyclo/error.hpp"

namespace flatcyclo {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::InexactDivision: return "InexactDivision";
        case ErrorKind::NotFlat: return "NotFlat";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::FamilyViolation: return "FamilyViolation";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::SearchExhausted: return "SearchExhausted";
    }
    return "Unknown";
}

std::optional<BigInt> parse_decimal(std::string_view text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return std::nullopt;
    BigInt v;
    if (v.set_str(std::string(text), 10) != 0) return std::nullopt;
    return v;
}

std::uint64_t to_u64(const BigInt& v) {
    if (!fits_u64(v)) throw Error(ErrorKind::TooLarge, to_decimal(v) + " does not fit in 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

BigInt from_u64(std::uint64_t v) {
    BigInt out;
    mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
    return out;
}

namespace {

constexpr std::array<unsigned, 25> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                   43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

// Strong probable-prime test to base a; n odd, n > a.
bool strong_probable_prime(const BigInt& n, const BigInt& a) {
    BigInt nm1 = n - 1;
    BigInt d = nm1;
    mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    BigInt y;
    mpz_powm(y.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (y == 1 || y == nm1) return true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
        mpz_powm_ui(y.get_mpz_t(), y.get_mpz_t(), 2, n.get_mpz_t());
        if (y == nm1) return true;
        if (y == 1) return false;
    }
    return false;
}

BigInt mod(const BigInt& a, const BigInt& n) {
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

// x / 2 mod n for odd n.
BigInt half_mod(BigInt x, const BigInt& n) {
    if (mpz_odd_p(x.get_mpz_t())) x += n;
    mpz_fdiv_q_2exp(x.get_mpz_t(), x.get_mpz_t(), 1);
    return x;
}

// Strong Lucas probable-prime test with Selfridge's method A parameters:
// D is the first of 5, -7, 9, -11, ... with (D/n) = -1, P = 1, Q = (1 - D)/4.
bool strong_lucas_probable_prime(const BigInt& n) {
    if (mpz_perfect_square_p(n.get_mpz_t())) return false;

    long d_abs = 5;
    long d_sign = 1;
    for (;;) {
        BigInt dd = d_sign * d_abs;
        int j = mpz_jacobi(dd.get_mpz_t(), n.get_mpz_t());
        if (j == -1) break;
        // (D/n) = 0 means a shared factor; n itself may equal |D| only for tiny n.
        if (j == 0 && BigInt(d_abs) != n) return false;
        d_abs += 2;
        d_sign = -d_sign;
    }
    const BigInt big_d = mod(BigInt(d_sign * d_abs), n);
    const BigInt q = mod(BigInt((1 - d_sign * d_abs) / 4), n);

    // n + 1 = d * 2^s
    BigInt d = n + 1;
    mp_bitcnt_t s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    // U_1 = 1, V_1 = P = 1, Q^1 = Q
    BigInt u = 1, v = 1, qk = q;
    const std::size_t bits = mpz_sizeinbase(d.get_mpz_t(), 2);
    for (std::size_t b = bits - 1; b-- > 0;) {
        // doubling: U_2k = U_k V_k, V_2k = V_k^2 - 2 Q^k
        u = mod(u * v, n);
        v = mod(v * v - 2 * qk, n);
        qk = mod(qk * qk, n);
        if (mpz_tstbit(d.get_mpz_t(), b)) {
            // increment: U_{k+1} = (P U + V)/2, V_{k+1} = (D U + P V)/2
            BigInt nu = half_mod(mod(u + v, n), n);
            BigInt nv = half_mod(mod(big_d * u + v, n), n);
            u = mod(nu, n);
            v = mod(nv, n);
            qk = mod(qk * q, n);
        }
    }
    if (u == 0 || v == 0) return true;
    for (mp_bitcnt_t r = 1; r < s; ++r) {
        v = mod(v * v - 2 * qk, n);
        if (v == 0) return true;
        qk = mod(qk * qk, n);
    }
    return false;
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (unsigned p : kSmallPrimes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < 97 * 97) return true;

    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 64) {
        // The first twelve primes as bases are deterministic below 3.3e24.
        for (std::size_t i = 0; i < 12; ++i)
            if (!strong_probable_prime(n, BigInt(kSmallPrimes[i]))) return false;
        return true;
    }
    return strong_probable_prime(n, BigInt(2)) && strong_lucas_probable_prime(n);
}

BigInt mod_inverse(const BigInt& a, const BigInt& m) {
    if (m < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
    BigInt x;
    if (mpz_invert(x.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw Error(ErrorKind::NotInvertible, to_decimal(a) + " is not invertible mod " + to_decimal(m));
    return mod(x, m);
}

BigInt quo(const BigInt& a, const BigInt& b) {
    if (b == 0) throw Error(ErrorKind::DivisionByZero, "quo: division by zero");
    if (sgn(a) < 0 || sgn(b) < 0) throw Error(ErrorKind::InvalidArgument, "quo: arguments must be nonnegative");
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

FactoredInt FactoredInt::factor(const BigInt& n, std::uint64_t trial_bound) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "can only factor positive integers");
    FactoredInt out;
    out.value_ = n;
    BigInt rest = n;
    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) out.factors_.push_back({BigInt(p), e});
    };
    strip(2);
    for (std::uint64_t p = 3; p <= trial_bound && rest > 1; p += 2) {
        if (BigInt(p) * p > rest) break;
        strip(static_cast<unsigned long>(p));
    }
    if (rest > 1) {
        if (!is_prime(rest))
            throw Error(ErrorKind::InvalidArgument,
                        "cofactor " + to_decimal(rest) + " has no factor below the trial bound and is not prime");
        out.factors_.push_back({rest, 1});
    }
    return out;
}

FactoredInt FactoredInt::from_factors(std::vector<PrimePower> factors) {
    FactoredInt out;
    BigInt value = 1;
    for (std::size_t k = 0; k < factors.size(); ++k) {
        const auto& f = factors[k];
        if (f.exponent == 0) throw Error(ErrorKind::InvalidArgument, "prime exponents must be positive");
        if (!is_prime(f.prime)) throw Error(ErrorKind::InvalidArgument, to_decimal(f.prime) + " is not prime");
        if (k > 0 && !(factors[k - 1].prime < f.prime))
            throw Error(ErrorKind::InvalidArgument, "primes must be strictly increasing");
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
        value *= pe;
    }
    out.value_ = value;
    out.factors_ = std::move(factors);
    return out;
}

bool FactoredInt::is_squarefree() const noexcept {
    return std::all_of(factors_.begin(), factors_.end(), [](const PrimePower& f) { return f.exponent == 1; });
}

int mobius(const FactoredInt& n) {
    if (!n.is_squarefree()) return 0;
    return n.factors().size() % 2 == 0 ? 1 : -1;
}

BigInt totient(const FactoredInt& n) {
    BigInt phi = 1;
    for (const auto& f : n.factors()) {
        BigInt pe;
        mpz_pow_ui(pe.get_mpz_t(), f.prime.get_mpz_t(), f.exponent - 1);
        phi *= pe * (f.prime - 1);
    }
    return phi;
}

}  // namespace flatcyclo
