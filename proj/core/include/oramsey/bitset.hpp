#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace oramsey {

// Fixed-size bitset sized at runtime. Used for adjacency rows and candidate
// sets in the search kernels; all binary operations require equal sizes.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;
    explicit Bitset(std::size_t size, bool value = false);

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    void assign(std::size_t i, bool v) noexcept { v ? set(i) : reset(i); }

    void set_all() noexcept;
    void reset_all() noexcept;
    // Sets bits in [lo, hi).
    void set_range(std::size_t lo, std::size_t hi) noexcept;

    std::size_t count() const noexcept;
    bool none() const noexcept;
    bool any() const noexcept { return !none(); }

    // First set bit at index >= from, or npos.
    std::size_t find_next(std::size_t from) const noexcept;
    std::size_t find_first() const noexcept { return find_next(0); }

    Bitset& operator&=(const Bitset& o) noexcept;
    Bitset& operator|=(const Bitset& o) noexcept;
    // this &= ~o
    Bitset& subtract(const Bitset& o) noexcept;
    void flip_all() noexcept;

    std::size_t intersect_count(const Bitset& o) const noexcept;
    bool intersects(const Bitset& o) const noexcept;

    // Overwrite with a & b without reallocating.
    void assign_and(const Bitset& a, const Bitset& b) noexcept;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const std::size_t i = (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
                f(i);
                bits &= bits - 1;
            }
        }
    }

    std::vector<std::size_t> to_vector() const;

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    void trim() noexcept;

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace oramsey
