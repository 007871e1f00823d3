#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace pfg {

// Fixed-size dynamic bitset over element indices of one group.
// Word order is little-endian; unused high bits of the last word stay zero.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size_bits() const { return nbits_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool is_subset_of(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    int intersection_count(const Bitset& other) const {
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += __builtin_popcountll(words_[i] & other.words_[i]);
        return c;
    }

    Bitset operator|(const Bitset& other) const {
        Bitset r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= other.words_[i];
        return r;
    }

    Bitset operator&(const Bitset& other) const {
        Bitset r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
        return r;
    }

    bool operator==(const Bitset& other) const {
        return nbits_ == other.nbits_ && words_ == other.words_;
    }
    bool operator!=(const Bitset& other) const { return !(*this == other); }

    // Lexicographic order on member indices: lower first set bit wins ties by prefix.
    // Implemented as unsigned comparison of words from the low end.
    bool lex_less(const Bitset& other) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            if (words_[i] != other.words_[i]) {
                // lower set bits compare first: isolate lowest differing bit
                std::uint64_t diff = words_[i] ^ other.words_[i];
                std::uint64_t low = diff & (~diff + 1);
                return words_[i] & low;  // the one owning the lowest differing bit sorts first
            }
        }
        return false;
    }

    int lowest_set() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    template <typename Fn>
    void for_each(Fn fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                fn(int(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_indices() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int i) { out.push_back(i); });
        return out;
    }

    std::size_t hash() const {
        std::size_t h = std::hash<int>()(nbits_);
        for (auto w : words_) h = h * 1099511628211ull + std::size_t(w);
        return h;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitsetHash {
    std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace pfg
