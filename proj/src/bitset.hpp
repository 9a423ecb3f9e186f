#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace clutterlab::detail {

// Fixed-size bitset with the handful of operations the double description needs.
class Bitset {
public:
    explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    [[nodiscard]] bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }

    [[nodiscard]] std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    [[nodiscard]] bool subset_of(const Bitset& o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    friend Bitset operator&(const Bitset& a, const Bitset& b)
    {
        Bitset r = a;
        for (std::size_t i = 0; i < r.words_.size(); ++i)
            r.words_[i] &= b.words_[i];
        return r;
    }

private:
    std::vector<std::uint64_t> words_;
};

} // namespace clutterlab::detail
