#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hyperboot {

class DynamicBitset {
public:
    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }

    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool none() const {
        for (std::uint64_t w : words_)
            if (w) return false;
        return true;
    }

    // fn(index) for every set bit, ascending.
    template <class F>
    void for_each_set(F&& fn) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                std::uint64_t lsb = w & (~w + 1);
                fn((wi << 6) + static_cast<std::size_t>(__builtin_ctzll(w)));
                w ^= lsb;
            }
        }
    }

    bool is_subset_of(const DynamicBitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool operator==(const DynamicBitset& other) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hyperboot
