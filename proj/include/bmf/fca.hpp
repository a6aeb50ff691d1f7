#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bmf/matrix.hpp"

namespace bmf {

/// An <extent, intent> pair. Pairs produced by the closure helpers satisfy
/// up(extent) = intent and down(intent) = extent with respect to the matrix
/// they were built from; pairs read from factor files may be unclosed.
struct FormalConcept {
    ObjectSet extent;
    AttributeSet intent;

    bool operator==(const FormalConcept&) const = default;
};

/// Ordered list of factor concepts with fixed indexing: the l-th factor
/// supplies column l of A_F and row l of B_F.
class FactorSet {
public:
    FactorSet() = default;

    void add(FormalConcept c) { factors_.push_back(std::move(c)); }

    bool contains(const FormalConcept& c) const {
        return std::find(factors_.begin(), factors_.end(), c) != factors_.end();
    }

    std::size_t size() const { return factors_.size(); }
    bool empty() const { return factors_.empty(); }

    const FormalConcept& operator[](std::size_t l) const { return factors_[l]; }

    auto begin() const { return factors_.begin(); }
    auto end() const { return factors_.end(); }

    bool operator==(const FactorSet&) const = default;

private:
    std::vector<FormalConcept> factors_;
};

/// Attributes shared by every object in C. up(empty) is the full attribute
/// set (vacuous intersection).
inline AttributeSet up(const BooleanMatrix& I, const ObjectSet& C) {
    if (C.universe() != I.rows())
        throw std::invalid_argument("up: object universe does not match matrix rows");
    AttributeSet acc = AttributeSet::full(I.cols());
    C.for_each([&](std::size_t i) { acc.intersect_words(I.row_words(i)); });
    return acc;
}

/// Objects having every attribute in D. down(empty) is the full object set.
inline ObjectSet down(const BooleanMatrix& I, const AttributeSet& D) {
    if (D.universe() != I.cols())
        throw std::invalid_argument("down: attribute universe does not match matrix cols");
    ObjectSet acc = ObjectSet::full(I.rows());
    D.for_each([&](std::size_t j) { acc.intersect_words(I.col_words(j)); });
    return acc;
}

/// The concept <D down, D down-up> generated by an attribute set.
inline FormalConcept close_attribute_set(const BooleanMatrix& I, const AttributeSet& D) {
    ObjectSet extent = down(I, D);
    AttributeSet intent = up(I, extent);
    return {std::move(extent), std::move(intent)};
}

/// Characteristic matrices of a factor set: A_F is m x k with column l the
/// extent of factor l, B_F is k x n with row l its intent. An empty F yields
/// m x 0 and 0 x n matrices whose product is the all-zero m x n matrix.
inline std::pair<BooleanMatrix, BooleanMatrix>
factors_to_matrices(const FactorSet& F, std::size_t m, std::size_t n) {
    const std::size_t k = F.size();
    MatrixBuilder a(m, k);
    MatrixBuilder b(k, n);
    for (std::size_t l = 0; l < k; ++l) {
        const FormalConcept& f = F[l];
        if (f.extent.universe() != m || f.intent.universe() != n)
            throw std::invalid_argument("factors_to_matrices: factor universe mismatch");
        f.extent.for_each([&](std::size_t i) { a.set(i, l); });
        b.or_row(l, f.intent.words());
    }
    return {a.build(), b.build()};
}

struct ConceptLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultConceptCellLimit = 1'000'000;

namespace detail {

// True when B \ A has no element below position j.
inline bool no_new_bit_below(const AttributeSet& B, const AttributeSet& A, std::size_t j) {
    const auto bw = B.words();
    const auto aw = A.words();
    const std::size_t last = j / kWordBits;
    for (std::size_t wi = 0; wi < bw.size() && wi <= last; ++wi) {
        std::uint64_t diff = bw[wi] & ~aw[wi];
        if (wi == last) diff &= (j % kWordBits) == 0 ? 0 : tail_mask(j);
        if (diff != 0) return false;
    }
    return true;
}

// Lectic-order closure enumeration over the attribute dimension.
inline std::vector<FormalConcept> enumerate_by_attributes(const BooleanMatrix& I) {
    const std::size_t n = I.cols();
    std::vector<FormalConcept> out;

    FormalConcept first = close_attribute_set(I, AttributeSet(n));
    AttributeSet current = first.intent;
    out.push_back(std::move(first));

    const AttributeSet all = AttributeSet::full(n);
    while (!(current == all)) {
        bool advanced = false;
        for (std::size_t j = n; j-- > 0;) {
            if (current.contains(j)) {
                current.remove(j);
                continue;
            }
            AttributeSet seed = current;
            seed.add(j);
            FormalConcept c = close_attribute_set(I, seed);
            if (no_new_bit_below(c.intent, current, j)) {
                current = c.intent;
                out.push_back(std::move(c));
                advanced = true;
                break;
            }
        }
        if (!advanced) break;  // unreachable: the full set is always closed
    }
    return out;
}

}  // namespace detail

/// All formal concepts of I, found by lectic-order closure enumeration over
/// the smaller dimension. Intended for desk-scale matrices: refuses inputs
/// with more than cell_limit cells since the concept count can be exponential.
inline std::vector<FormalConcept>
enumerate_concepts(const BooleanMatrix& I, std::size_t cell_limit = kDefaultConceptCellLimit) {
    if (I.cells() > cell_limit)
        throw ConceptLimitError("enumerate_concepts: matrix exceeds the cell limit (" +
                                std::to_string(I.cells()) + " > " +
                                std::to_string(cell_limit) + " cells)");
    if (I.cols() <= I.rows()) return detail::enumerate_by_attributes(I);

    // Enumerate over the object dimension via the transpose and swap roles.
    std::vector<FormalConcept> flipped = detail::enumerate_by_attributes(I.transposed());
    std::vector<FormalConcept> out;
    out.reserve(flipped.size());
    for (const auto& c : flipped)
        out.push_back({ObjectSet::retagged(c.intent), AttributeSet::retagged(c.extent)});
    return out;
}

}  // namespace bmf
