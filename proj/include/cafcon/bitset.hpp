#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace cafcon {

/// Dynamically sized bitset over dense indices [0, size()).
///
/// Used for argument sets (extensions) and claim sets alike. Ordering is
/// lexicographic over the ascending member lists, so {0,1} < {0,2} and
/// {0} < {0,1}.
class Bitset {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + kWordBits - 1) / kWordBits, 0) {}
    Bitset(std::size_t size, std::initializer_list<std::size_t> members) : Bitset(size) {
        for (auto m : members) set(m);
    }

    static Bitset full(std::size_t size) {
        Bitset b(size);
        for (std::size_t i = 0; i < size; ++i) b.set(i);
        return b;
    }

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
    void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
    void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool none() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
    }
    bool any() const noexcept { return !none(); }

    bool is_subset_of(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }
    bool is_strict_subset_of(const Bitset& other) const noexcept {
        return is_subset_of(other) && *this != other;
    }
    bool intersects(const Bitset& other) const noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    /// Set difference.
    Bitset& operator-=(const Bitset& o) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) noexcept { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) noexcept { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) noexcept { return a -= b; }

    /// Index of the lowest member, or size() if empty.
    std::size_t first() const noexcept { return next(0); }

    /// Lowest member >= from, or size() if none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= size_) return size_;
        std::size_t wi = from / kWordBits;
        Word w = words_[wi] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
            if (++wi == words_.size()) return size_;
            w = words_[wi];
        }
    }

    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        for (std::size_t i = first(); i < size_; i = next(i + 1)) out.push_back(i);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = first(); i < size_; i = next(i + 1)) f(i);
    }

    friend bool operator==(const Bitset& a, const Bitset& b) noexcept {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) noexcept {
        if (a.size_ != b.size_) return a.size_ <=> b.size_;
        // Lowest differing bit d: the side holding d is smaller unless the
        // other side has no members above d (then the other is a prefix).
        for (std::size_t wi = 0; wi < a.words_.size(); ++wi) {
            Word diff = a.words_[wi] ^ b.words_[wi];
            if (diff == 0) continue;
            std::size_t d = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(diff));
            const Bitset& holder = a.test(d) ? a : b;
            const Bitset& other = a.test(d) ? b : a;
            bool holder_smaller = other.next(d + 1) < other.size_;
            bool a_smaller = (&holder == &a) == holder_smaller;
            return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    std::size_t size_ = 0;
    std::vector<Word> words_;
};

}  // namespace cafcon
