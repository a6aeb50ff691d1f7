#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace bmf {

namespace detail {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t word_count(std::size_t universe) {
    return (universe + kWordBits - 1) / kWordBits;
}

// Mask selecting the valid bits of the last word of a set over `universe`.
constexpr std::uint64_t tail_mask(std::size_t universe) {
    const std::size_t r = universe % kWordBits;
    return r == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
}

inline std::size_t popcount(std::span<const std::uint64_t> words) {
    std::size_t c = 0;
    for (const auto w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

inline std::size_t popcount_and(std::span<const std::uint64_t> a,
                                std::span<const std::uint64_t> b) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

template <typename F>
void for_each_bit(std::span<const std::uint64_t> words, F&& f) {
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
        std::uint64_t w = words[wi];
        while (w != 0) {
            f(wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
}

}  // namespace detail

/// Subset of a fixed universe {0..universe-1}, stored as packed 64-bit words.
/// The tag keeps object sets and attribute sets from mixing at compile time.
/// Invariant: bits at positions >= universe are zero.
template <typename Tag>
class IndexSet {
public:
    IndexSet() = default;

    /// Empty set over the given universe.
    explicit IndexSet(std::size_t universe)
        : universe_(universe), words_(detail::word_count(universe), 0) {}

    static IndexSet full(std::size_t universe) {
        IndexSet s(universe);
        std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
        s.trim();
        return s;
    }

    static IndexSet of(std::size_t universe, std::initializer_list<std::size_t> indices) {
        IndexSet s(universe);
        for (const auto i : indices) s.add(i);
        return s;
    }

    static IndexSet of(std::size_t universe, std::span<const std::size_t> indices) {
        IndexSet s(universe);
        for (const auto i : indices) s.add(i);
        return s;
    }

    /// Same bits reinterpreted under another tag (e.g. when transposing).
    template <typename OtherTag>
    static IndexSet retagged(const IndexSet<OtherTag>& other) {
        IndexSet s(other.universe());
        std::copy(other.words().begin(), other.words().end(), s.words_.begin());
        return s;
    }

    std::size_t universe() const { return universe_; }
    std::size_t count() const { return detail::popcount(words_); }

    bool empty() const {
        return std::all_of(words_.begin(), words_.end(),
                           [](std::uint64_t w) { return w == 0; });
    }

    bool contains(std::size_t i) const {
        if (i >= universe_) return false;
        return (words_[i / detail::kWordBits] >> (i % detail::kWordBits)) & 1u;
    }

    void add(std::size_t i) {
        if (i >= universe_) throw std::out_of_range("IndexSet::add: index outside universe");
        words_[i / detail::kWordBits] |= std::uint64_t{1} << (i % detail::kWordBits);
    }

    void remove(std::size_t i) {
        if (i >= universe_) throw std::out_of_range("IndexSet::remove: index outside universe");
        words_[i / detail::kWordBits] &= ~(std::uint64_t{1} << (i % detail::kWordBits));
    }

    IndexSet& operator&=(const IndexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }

    IndexSet& operator|=(const IndexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    /// Set difference (removes o's members).
    IndexSet& operator-=(const IndexSet& o) {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    /// In-place intersection with a raw word view over the same universe.
    void intersect_words(std::span<const std::uint64_t> w) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= w[i];
    }

    bool is_subset_of(const IndexSet& o) const {
        check_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if ((words_[i] & ~o.words_[i]) != 0) return false;
        return true;
    }

    bool operator==(const IndexSet&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }

    template <typename F>
    void for_each(F&& f) const {
        detail::for_each_bit(words_, std::forward<F>(f));
    }

    std::vector<std::size_t> to_indices() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(i); });
        return out;
    }

private:
    void check_universe(const IndexSet& o) const {
        if (universe_ != o.universe_)
            throw std::invalid_argument("IndexSet: universe mismatch");
    }

    void trim() {
        if (!words_.empty()) words_.back() &= detail::tail_mask(universe_);
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct ObjectTag {};
struct AttributeTag {};

/// Set of row (object) indices.
using ObjectSet = IndexSet<ObjectTag>;
/// Set of column (attribute) indices.
using AttributeSet = IndexSet<AttributeTag>;

}  // namespace bmf
