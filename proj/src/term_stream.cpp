#include "flatcyclo/term_stream.hpp"

#include "flatcyclo/closed_form.hpp"
#include "flatcyclo/error.hpp"

namespace flatcyclo {

TernaryTermStream::TernaryTermStream(PrimeTriple t) : triple_(std::move(t)) {
    if (!triple_.enumerable())
        throw Error(ErrorKind::TooLarge, "p1, q2 or q3 exceeds 64 bits; the index set cannot be streamed "
                                         "(closed-form weight and coefficient queries still work)");
    p1_ = to_u64(triple_.p1());
    q2_ = to_u64(triple_.q2());
    q3_ = to_u64(triple_.q3());
    offset_ = 0;
    load_blocks();
}

void TernaryTermStream::load_blocks() {
    // i3 = 0 always takes the low branch and i3 = p1 - 1 always the high one.
    low_ = block_f({idx_.i1, idx_.i2, 0, 0}, triple_);
    high_ = block_f({idx_.i1, idx_.i2, p1_ - 1, 0}, triple_);
}

void TernaryTermStream::advance_block() {
    pos_ = 0;
    const Radices& rho = triple_.radices();
    if (++idx_.i4 < q3_) {
        offset_ += rho.rho4;
        return;
    }
    idx_.i4 = 0;
    bool reload = false;
    if (++idx_.i3 >= p1_) {
        idx_.i3 = 0;
        reload = true;
        if (++idx_.i2 >= q2_) {
            idx_.i2 = 0;
            if (++idx_.i1 > p1_ - 2) {
                body_done_ = true;
                return;
            }
        }
    }
    offset_ = from_u64(idx_.i1) * rho.rho1 + from_u64(idx_.i2) * rho.rho2 + from_u64(idx_.i3) * rho.rho3;
    if (reload) load_blocks();
}

std::optional<Term> TernaryTermStream::next() {
    if (finished_) return std::nullopt;
    while (!body_done_) {
        const SparsePoly& block = idx_.i3 <= idx_.i1 ? low_ : high_;
        if (pos_ < block.size()) {
            const Term& local = block[pos_++];
            ++emitted_;
            return Term{local.exponent + offset_, local.coeff};
        }
        advance_block();
    }
    finished_ = true;
    ++emitted_;
    return Term{triple_.totient(), +1};
}

}  // namespace flatcyclo
