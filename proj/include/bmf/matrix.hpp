#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bmf/bitset.hpp"

namespace bmf {

class MatrixBuilder;

/// Dense bit-packed Boolean matrix. Rows are stored as packed words and a
/// column-major mirror is kept alongside, so both row scans and column scans
/// are word-parallel. Values are immutable after construction (use
/// MatrixBuilder to assemble one) and safe to share across threads.
///
/// Indices are 0-based internally; 1-based presentation belongs to the I/O
/// layer.
class BooleanMatrix {
public:
    BooleanMatrix() = default;

    /// All-zero matrix. Zero-sized dimensions are allowed; they arise as the
    /// m x 0 / 0 x n matrices of an empty factor set.
    BooleanMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows),
          cols_(cols),
          row_words_(detail::word_count(cols)),
          col_words_(detail::word_count(rows)),
          row_bits_(rows * row_words_, 0),
          col_bits_(cols * col_words_, 0) {}

    /// Rows given as strings of '0'/'1', e.g. {"101", "010"}.
    static BooleanMatrix from_rows(const std::vector<std::string>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t cells() const { return rows_ * cols_; }

    /// Total number of 1s.
    std::size_t ones_count() const { return ones_; }

    bool at(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw std::out_of_range("BooleanMatrix::at: index out of range");
        return (row_bits_[i * row_words_ + j / detail::kWordBits] >>
                (j % detail::kWordBits)) & 1u;
    }

    /// Packed bits of row i (a word view over the attribute universe).
    std::span<const std::uint64_t> row_words(std::size_t i) const {
        return {row_bits_.data() + i * row_words_, row_words_};
    }

    /// Packed bits of column j (a word view over the object universe).
    std::span<const std::uint64_t> col_words(std::size_t j) const {
        return {col_bits_.data() + j * col_words_, col_words_};
    }

    AttributeSet row(std::size_t i) const {
        AttributeSet s = AttributeSet::full(cols_);
        s.intersect_words(row_words(i));
        return s;
    }

    ObjectSet column(std::size_t j) const {
        ObjectSet s = ObjectSet::full(rows_);
        s.intersect_words(col_words(j));
        return s;
    }

    BooleanMatrix transposed() const {
        // The column mirror already is the transpose's row storage.
        return BooleanMatrix(cols_, rows_, col_bits_);
    }

    bool operator==(const BooleanMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && row_bits_ == o.row_bits_;
    }

private:
    friend class MatrixBuilder;

    BooleanMatrix(std::size_t rows, std::size_t cols, std::vector<std::uint64_t> row_bits)
        : rows_(rows),
          cols_(cols),
          row_words_(detail::word_count(cols)),
          col_words_(detail::word_count(rows)),
          row_bits_(std::move(row_bits)),
          col_bits_(cols * col_words_, 0) {
        finalize();
    }

    void finalize() {
        ones_ = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            detail::for_each_bit(row_words(i), [&](std::size_t j) {
                col_bits_[j * col_words_ + i / detail::kWordBits] |=
                    std::uint64_t{1} << (i % detail::kWordBits);
                ++ones_;
            });
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t row_words_ = 0;
    std::size_t col_words_ = 0;
    std::size_t ones_ = 0;
    std::vector<std::uint64_t> row_bits_;
    std::vector<std::uint64_t> col_bits_;
};

/// Staged construction for BooleanMatrix: set cells (or whole row views),
/// then build() once. The builder is spent after build().
class MatrixBuilder {
public:
    MatrixBuilder(std::size_t rows, std::size_t cols)
        : rows_(rows),
          cols_(cols),
          row_words_(detail::word_count(cols)),
          bits_(rows * row_words_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t i, std::size_t j, bool value = true) {
        if (i >= rows_ || j >= cols_)
            throw std::out_of_range("MatrixBuilder::set: index out of range");
        const std::uint64_t mask = std::uint64_t{1} << (j % detail::kWordBits);
        auto& w = bits_[i * row_words_ + j / detail::kWordBits];
        if (value)
            w |= mask;
        else
            w &= ~mask;
    }

    /// OR a packed row view (same column universe) into row i.
    void or_row(std::size_t i, std::span<const std::uint64_t> words) {
        if (i >= rows_ || words.size() != row_words_)
            throw std::out_of_range("MatrixBuilder::or_row: row or width mismatch");
        for (std::size_t wi = 0; wi < row_words_; ++wi)
            bits_[i * row_words_ + wi] |= words[wi];
    }

    /// Clear in row i every bit set in the given view.
    void clear_in_row(std::size_t i, std::span<const std::uint64_t> words) {
        if (i >= rows_ || words.size() != row_words_)
            throw std::out_of_range("MatrixBuilder::clear_in_row: row or width mismatch");
        for (std::size_t wi = 0; wi < row_words_; ++wi)
            bits_[i * row_words_ + wi] &= ~words[wi];
    }

    BooleanMatrix build() {
        return BooleanMatrix(rows_, cols_, std::move(bits_));
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t row_words_;
    std::vector<std::uint64_t> bits_;
};

inline BooleanMatrix BooleanMatrix::from_rows(const std::vector<std::string>& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.front().size();
    MatrixBuilder b(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != n)
            throw std::invalid_argument("BooleanMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < n; ++j) {
            switch (rows[i][j]) {
                case '0': break;
                case '1': b.set(i, j); break;
                default:
                    throw std::invalid_argument("BooleanMatrix::from_rows: cells must be 0 or 1");
            }
        }
    }
    return b.build();
}

namespace detail {

inline void check_same_shape(const BooleanMatrix& a, const BooleanMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

}  // namespace detail

/// Boolean product: result(i,j) = OR over l of (A(i,l) AND B(l,j)).
inline BooleanMatrix bool_product(const BooleanMatrix& a, const BooleanMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("bool_product: inner dimensions differ");
    MatrixBuilder out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        detail::for_each_bit(a.row_words(i), [&](std::size_t l) {
            out.or_row(i, b.row_words(l));
        });
    }
    return out.build();
}

/// Boolean sum (element-wise OR; 1 + 1 = 1).
inline BooleanMatrix bool_sum(const BooleanMatrix& a, const BooleanMatrix& b) {
    detail::check_same_shape(a, b, "bool_sum");
    MatrixBuilder out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out.or_row(i, a.row_words(i));
        out.or_row(i, b.row_words(i));
    }
    return out.build();
}

/// Boolean subtraction (element-wise AND NOT; 0 - 1 = 0).
inline BooleanMatrix bool_subtract(const BooleanMatrix& a, const BooleanMatrix& b) {
    detail::check_same_shape(a, b, "bool_subtract");
    MatrixBuilder out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out.or_row(i, a.row_words(i));
        out.clear_in_row(i, b.row_words(i));
    }
    return out.build();
}

/// Number of 1s of I left uncovered by the product A o B.
inline std::size_t error(const BooleanMatrix& I, const BooleanMatrix& a, const BooleanMatrix& b) {
    if (a.rows() != I.rows() || b.cols() != I.cols())
        throw std::invalid_argument("error: outer dimensions do not match I");
    return bool_subtract(I, bool_product(a, b)).ones_count();
}

}  // namespace bmf
