#include "flatcyclo/polycore.hpp"

#include <algorithm>

#include "flatcyclo/error.hpp"

namespace flatcyclo {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient overflow in addition");
    return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient overflow in subtraction");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "coefficient overflow in multiplication");
    return r;
}

// Positions of nonzero coefficients; the oracle's operands are mostly binomials.
std::vector<std::size_t> support(const std::vector<std::int64_t>& c) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0) s.push_back(k);
    return s;
}

}  // namespace

DensePoly::DensePoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DensePoly::DensePoly(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }

DensePoly DensePoly::monomial(std::size_t e, std::int64_t c) {
    std::vector<std::int64_t> v(e + 1, 0);
    v[e] = c;
    return DensePoly(std::move(v));
}

DensePoly DensePoly::x_pow_minus_one(std::size_t k) {
    if (k == 0) return DensePoly();
    std::vector<std::int64_t> v(k + 1, 0);
    v[0] = -1;
    v[k] = 1;
    return DensePoly(std::move(v));
}

std::size_t DensePoly::degree() const {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial is undefined");
    return coeffs_.size() - 1;
}

std::size_t DensePoly::nonzero_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](auto c) { return c != 0; }));
}

void DensePoly::trim() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePoly dense_mul(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<std::int64_t> out(ac.size() + bc.size() - 1, 0);
    const auto sa = support(ac);
    const auto sb = support(bc);
    for (std::size_t i : sa)
        for (std::size_t j : sb) out[i + j] = checked_add(out[i + j], checked_mul(ac[i], bc[j]));
    return DensePoly(std::move(out));
}

DensePoly dense_exact_div(const DensePoly& num, const DensePoly& den) {
    if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero polynomial");
    if (num.is_zero()) return DensePoly();
    const std::size_t dn = num.degree();
    const std::size_t dd = den.degree();
    if (dn < dd) throw Error(ErrorKind::InexactDivision, "divisor degree exceeds dividend degree");

    const auto& dc = den.coeffs();
    const std::int64_t lead = dc.back();
    const auto sd = support(dc);

    std::vector<std::int64_t> rem = num.coeffs();
    std::vector<std::int64_t> q(dn - dd + 1, 0);
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        const std::int64_t c = rem[k + dd];
        if (c == 0) continue;
        if (c % lead != 0) throw Error(ErrorKind::InexactDivision, "non-integral quotient coefficient");
        const std::int64_t qk = c / lead;
        q[k] = qk;
        for (std::size_t j : sd) rem[k + j] = checked_sub(rem[k + j], checked_mul(qk, dc[j]));
    }
    for (std::size_t k = 0; k < dd; ++k)
        if (rem[k] != 0) throw Error(ErrorKind::InexactDivision, "nonzero remainder");
    return DensePoly(std::move(q));
}

DensePoly truncate(const DensePoly& p, std::size_t s) {
    const auto& c = p.coeffs();
    return DensePoly(std::vector<std::int64_t>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(std::min(s, c.size()))));
}

DensePoly dense_add(const DensePoly& a, const DensePoly& b) {
    std::vector<std::int64_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = checked_add(a[k], b[k]);
    return DensePoly(std::move(out));
}

DensePoly dense_shift(const DensePoly& p, std::size_t k) {
    if (p.is_zero()) return p;
    std::vector<std::int64_t> out(k, 0);
    out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
    return DensePoly(std::move(out));
}

DensePoly dense_negate(const DensePoly& p) {
    std::vector<std::int64_t> out = p.coeffs();
    for (auto& c : out) c = checked_sub(0, c);
    return DensePoly(std::move(out));
}

bool operator==(const Term& a, const Term& b) { return a.coeff == b.coeff && a.exponent == b.exponent; }

SparsePoly::SparsePoly(std::vector<Term> terms) : terms_(std::move(terms)) {
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        if (t.coeff != 1 && t.coeff != -1)
            throw Error(ErrorKind::InvalidArgument, "sparse coefficients must be +1 or -1");
        if (sgn(t.exponent) < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
        if (k > 0 && !(terms_[k - 1].exponent < t.exponent))
            throw Error(ErrorKind::InvalidArgument,
                        "exponents not strictly ascending at " + to_decimal(t.exponent));
    }
}

SparsePoly SparsePoly::from_unsorted(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    return SparsePoly(std::move(terms));
}

const BigInt& SparsePoly::degree() const {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "degree of the zero polynomial is undefined");
    return terms_.back().exponent;
}

SparsePoly SparsePoly::shifted(const BigInt& k) const {
    SparsePoly out = *this;
    for (auto& t : out.terms_) t.exponent += k;
    if (!out.terms_.empty() && sgn(out.terms_.front().exponent) < 0)
        throw Error(ErrorKind::InvalidArgument, "shift produces a negative exponent");
    return out;
}

bool operator<(const SparsePoly& a, const SparsePoly& b) {
    const auto& x = a.terms();
    const auto& y = b.terms();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const Term& s, const Term& t) {
        const int c = cmp(s.exponent, t.exponent);
        return c != 0 ? c < 0 : s.coeff < t.coeff;
    });
}

SparsePoly sparse_from_dense(const DensePoly& p) {
    std::vector<Term> terms;
    const auto& c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        if (c[k] != 1 && c[k] != -1)
            throw Error(ErrorKind::NotFlat, "coefficient " + std::to_string(c[k]) + " at x^" + std::to_string(k));
        terms.push_back({from_u64(k), static_cast<int>(c[k])});
    }
    return SparsePoly(std::move(terms));
}

DensePoly dense_from_sparse(const SparsePoly& p, const BigInt& max_degree, std::size_t budget) {
    if (sgn(max_degree) < 0) throw Error(ErrorKind::InvalidArgument, "negative max_degree");
    if (!(max_degree < from_u64(budget)))
        throw Error(ErrorKind::TooLarge, "degree " + to_decimal(max_degree) + " exceeds the dense budget of " +
                                             std::to_string(budget) + " coefficients");
    if (!p.empty() && p.degree() > max_degree)
        throw Error(ErrorKind::InvalidArgument, "term exponent exceeds max_degree");
    std::vector<std::int64_t> out(to_u64(max_degree) + 1, 0);
    for (const Term& t : p) out[to_u64(t.exponent)] = t.coeff;
    return DensePoly(std::move(out));
}

}  // namespace flatcyclo
