#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ore3 {

/// Fixed-width dynamic bitset used by the exact search routines.
class Bitset
{
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    /// Index of the lowest set bit, or size() if empty.
    std::size_t first() const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k])
                return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return bits_;
    }

    /// Index of the lowest set bit strictly after i, or size().
    std::size_t next(std::size_t i) const
    {
        ++i;
        if (i >= bits_)
            return bits_;
        std::size_t k = i >> 6;
        std::uint64_t w = words_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w)
                return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
            if (++k == words_.size())
                return bits_;
            w = words_[k];
        }
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }

    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }

    /// this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset&) const = default;

    const std::vector<std::uint64_t>& words() const { return words_; }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace ore3
