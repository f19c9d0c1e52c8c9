#ifndef GQU_BITSET_HPP
#define GQU_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>
#include <bit>

namespace gqu {

// Fixed-capacity dense bitset. Capacity is set at construction; all
// binary operations require equal capacity.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t capacity() const { return nbits_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    DynBitset& operator|=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    DynBitset& operator&=(const DynBitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    bool subset_of(const DynBitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    friend bool operator==(const DynBitset&, const DynBitset&) = default;

    // strict weak order for canonical sorting
    friend bool operator<(const DynBitset& a, const DynBitset& b) {
        if (a.nbits_ != b.nbits_) return a.nbits_ < b.nbits_;
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    // index of first set bit at or after i, or capacity() if none
    std::size_t find_next(std::size_t i) const {
        while (i < nbits_) {
            std::uint64_t w = words_[i >> 6] >> (i & 63);
            if (w) return i + std::countr_zero(w);
            i = (i & ~std::size_t{63}) + 64;
        }
        return nbits_;
    }

    std::size_t hash() const {
        std::size_t h = nbits_;
        for (auto w : words_) h = h * 1099511628211ull ^ w;
        return h;
    }

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace gqu

#endif
