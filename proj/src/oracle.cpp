#include "flatcyclo/oracle.hpp"

#include <string>

#include "flatcyclo/error.hpp"

namespace flatcyclo {

namespace {

void check_budget(const BigInt& size, std::size_t budget, const char* what) {
    if (size > from_u64(budget))
        throw Error(ErrorKind::TooLarge, std::string(what) + " " + to_decimal(size) + " exceeds the dense budget of " +
                                             std::to_string(budget) + " coefficients");
}

}  // namespace

DensePoly cyclotomic_dense(const FactoredInt& n, std::size_t budget) {
    check_budget(totient(n), budget, "degree");
    check_budget(n.value(), budget, "intermediate degree");

    const std::uint64_t nv = to_u64(n.value());
    const auto& fs = n.factors();
    if (fs.size() >= 63) throw Error(ErrorKind::TooLarge, "too many prime factors");

    // Squarefree divisors d of n, split by the sign of mu(d).
    std::vector<std::uint64_t> plus, minus;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << fs.size()); ++mask) {
        std::uint64_t d = 1;
        int bits = 0;
        for (std::size_t k = 0; k < fs.size(); ++k) {
            if (mask & (std::uint64_t{1} << k)) {
                d *= to_u64(fs[k].prime);
                ++bits;
            }
        }
        (bits % 2 == 0 ? plus : minus).push_back(nv / d);
    }

    DensePoly acc = DensePoly::monomial(0);
    std::uint64_t acc_degree = 0;
    for (std::uint64_t e : plus) {
        acc_degree += e;
        check_budget(from_u64(acc_degree), budget, "intermediate degree");
        acc = dense_mul(acc, DensePoly::x_pow_minus_one(e));
    }
    for (std::uint64_t e : minus) acc = dense_exact_div(acc, DensePoly::x_pow_minus_one(e));
    return acc;
}

DensePoly cofactor_psi(const BigInt& p1, const BigInt& p2, std::size_t budget) {
    if (p1 == p2 || p1 < 3 || p2 < 3 || !is_prime(p1) || !is_prime(p2))
        throw Error(ErrorKind::InvalidArgument, "cofactor_psi needs two distinct odd primes");
    const BigInt& lo = p1 < p2 ? p1 : p2;
    const BigInt& hi = p1 < p2 ? p2 : p1;
    const auto n = FactoredInt::from_factors({{lo, 1}, {hi, 1}});
    const DensePoly phi = cyclotomic_dense(n, budget);
    return dense_exact_div(DensePoly::x_pow_minus_one(to_u64(n.value())), phi);
}

}  // namespace flatcyclo
