#include "oramsey/bitset.hpp"

#include <algorithm>
#include <cassert>

namespace oramsey {

Bitset::Bitset(std::size_t size, bool value)
    : size_(size), words_((size + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
}

void Bitset::trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty())
        words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
}

void Bitset::set_all() noexcept {
    std::fill(words_.begin(), words_.end(), ~std::uint64_t{0});
    trim();
}

void Bitset::reset_all() noexcept { std::fill(words_.begin(), words_.end(), 0); }

void Bitset::set_range(std::size_t lo, std::size_t hi) noexcept {
    hi = std::min(hi, size_);
    if (lo >= hi) return;
    std::size_t lw = lo >> 6, hw = (hi - 1) >> 6;
    const std::uint64_t lmask = ~std::uint64_t{0} << (lo & 63);
    const std::uint64_t hmask = ~std::uint64_t{0} >> (63 - ((hi - 1) & 63));
    if (lw == hw) {
        words_[lw] |= lmask & hmask;
        return;
    }
    words_[lw] |= lmask;
    for (std::size_t w = lw + 1; w < hw; ++w) words_[w] = ~std::uint64_t{0};
    words_[hw] |= hmask;
}

std::size_t Bitset::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool Bitset::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t Bitset::find_next(std::size_t from) const noexcept {
    if (from >= size_) return npos;
    std::size_t w = from >> 6;
    std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
        if (bits) return (w << 6) + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w == words_.size()) return npos;
        bits = words_[w];
    }
}

Bitset& Bitset::operator&=(const Bitset& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
}

Bitset& Bitset::subtract(const Bitset& o) noexcept {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
}

void Bitset::flip_all() noexcept {
    for (auto& w : words_) w = ~w;
    trim();
}

std::size_t Bitset::intersect_count(const Bitset& o) const noexcept {
    assert(size_ == o.size_);
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_.size(); ++w)
        c += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
    return c;
}

bool Bitset::intersects(const Bitset& o) const noexcept {
    assert(size_ == o.size_);
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] & o.words_[w]) return true;
    return false;
}

void Bitset::assign_and(const Bitset& a, const Bitset& b) noexcept {
    assert(a.size_ == b.size_);
    if (size_ != a.size_) {
        size_ = a.size_;
        words_.resize(a.words_.size());
    }
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] = a.words_[w] & b.words_[w];
}

std::vector<std::size_t> Bitset::to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
}

}  // namespace oramsey
