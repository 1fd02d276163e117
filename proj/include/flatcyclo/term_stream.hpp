#pragma once

#include <cstdint>
#include <iterator>
#include <optional>

#include "flatcyclo/polycore.hpp"
#include "flatcyclo/triple.hpp"

namespace flatcyclo {

/// Lazy, ascending stream of the terms of Phi_{p1 p2 p3}.
///
/// Blocks are visited in lexicographic (i1, i2, i3, i4) order; each block's
/// terms are shifted by i1 rho1 + i2 rho2 + i3 rho3 + i4 rho4, and the stream
/// ends with +x^{phi(p1 p2 p3)}. Only the two block shapes of the current
/// (i1, i2) are held, so memory does not grow with the number of terms.
///
/// One stream is one cursor; use one per thread.
class TernaryTermStream {
   public:
    /// Throws TooLarge when p1, q2 or q3 does not fit in 64 bits.
    explicit TernaryTermStream(PrimeTriple t);

    std::optional<Term> next();

    std::uint64_t emitted() const noexcept { return emitted_; }
    const PrimeTriple& triple() const noexcept { return triple_; }

    class iterator {
       public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Term;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(TernaryTermStream* s) : stream_(s) { ++*this; }

        const Term& operator*() const { return *current_; }
        const Term* operator->() const { return &*current_; }
        iterator& operator++() {
            current_ = stream_->next();
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) {
            return !it.current_.has_value();
        }

       private:
        TernaryTermStream* stream_ = nullptr;
        std::optional<Term> current_;
    };

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() const noexcept { return {}; }

   private:
    void load_blocks();
    void advance_block();

    PrimeTriple triple_;
    std::uint64_t p1_ = 0, q2_ = 0, q3_ = 0;
    BlockIndex idx_;
    BigInt offset_;
    SparsePoly low_, high_;
    std::size_t pos_ = 0;
    bool body_done_ = false;
    bool finished_ = false;
    std::uint64_t emitted_ = 0;
};

}  // namespace flatcyclo
