#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace edom {

/// Fixed-size bitset with a runtime-chosen width. Words beyond `size()` stay zero.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static DynBitset full(std::size_t n) {
        DynBitset s(n);
        for (auto& word : s.w_) word = ~0ull;
        s.trim();
        return s;
    }

    std::size_t size() const { return n_; }

    std::size_t nwords() const { return w_.size(); }
    std::uint64_t word(std::size_t i) const { return w_[i]; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
    void clear() { std::fill(w_.begin(), w_.end(), 0ull); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto word : w_) c += std::popcount(word);
        return c;
    }

    bool any() const {
        for (auto word : w_)
            if (word) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool intersects(const DynBitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    bool is_subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    DynBitset& operator^=(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    /// this &= ~o
    DynBitset& subtract(const DynBitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend DynBitset operator&(DynBitset a, const DynBitset& b) { return a &= b; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { return a |= b; }

    DynBitset complement() const {
        DynBitset r = *this;
        for (auto& word : r.w_) word = ~word;
        r.trim();
        return r;
    }

    bool operator==(const DynBitset& o) const { return n_ == o.n_ && w_ == o.w_; }

    /// First set bit at or after `from`; size() if none.
    std::size_t next_set(std::size_t from = 0) const {
        if (from >= n_) return n_;
        std::size_t wi = from >> 6;
        std::uint64_t word = w_[wi] & (~0ull << (from & 63));
        while (true) {
            if (word) {
                std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(word));
                return i < n_ ? i : n_;
            }
            if (++wi == w_.size()) return n_;
            word = w_[wi];
        }
    }

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t word = w_[wi];
            while (word) {
                std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(word));
                f(i);
                word &= word - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each_set([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (~0ull >> (64 - (n_ & 63)));
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

} // namespace edom
