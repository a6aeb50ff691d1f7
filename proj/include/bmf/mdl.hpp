#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "bmf/fca.hpp"

namespace bmf {

/// Encoding length in bits (base-2 logs throughout).
using BitLength = double;

/// Optimal prefix-code length for a 0/1 column with `ones` ones out of
/// `total` cells: -(a log2(a/t) + (t-a) log2((t-a)/t)), with 0 log 0 = 0.
inline BitLength entropy_length(std::size_t ones, std::size_t total) {
    if (total == 0)
        throw std::domain_error("entropy_length: total must be at least 1");
    if (ones > total)
        throw std::domain_error("entropy_length: ones exceeds total");
    if (ones == 0 || ones == total) return 0.0;
    const double a = static_cast<double>(ones);
    const double t = static_cast<double>(total);
    const double z = t - a;
    return -(a * std::log2(a / t) + z * std::log2(z / t));
}

/// Bits to encode one extent column: log2(m) for the ones probability plus
/// the entropy-coded characteristic vector.
inline BitLength extent_length(std::size_t members, std::size_t universe) {
    if (universe == 0)
        throw std::domain_error("extent_length: empty universe");
    return std::log2(static_cast<double>(universe)) + entropy_length(members, universe);
}

inline BitLength extent_length(const ObjectSet& extent) {
    return extent_length(extent.count(), extent.universe());
}

/// Bits to encode one intent row; mirrors extent_length over the attribute
/// universe.
inline BitLength intent_length(std::size_t members, std::size_t universe) {
    if (universe == 0)
        throw std::domain_error("intent_length: empty universe");
    return std::log2(static_cast<double>(universe)) + entropy_length(members, universe);
}

inline BitLength intent_length(const AttributeSet& intent) {
    return intent_length(intent.count(), intent.universe());
}

/// Bits to encode the residual matrix element-by-element.
inline BitLength error_length(std::size_t ones, std::size_t cells) {
    if (cells == 0)
        throw std::domain_error("error_length: empty matrix");
    return std::log2(static_cast<double>(cells)) + entropy_length(ones, cells);
}

inline BitLength error_length(const BooleanMatrix& E) {
    return error_length(E.ones_count(), E.cells());
}

/// Block-encoded dimension header: L(m) + L(n) + L(k), each log2(max(m,n,k)).
inline BitLength header_length(std::size_t m, std::size_t n, std::size_t k) {
    return 3.0 * std::log2(static_cast<double>(std::max({m, n, k})));
}

/// Total description length of I under factor set F: dimension header, one
/// extent and one intent column per factor, and the entropy-coded residual
/// E = I - (A_F o B_F). k is taken as the current |F|.
inline BitLength total_cost(const BooleanMatrix& I, const FactorSet& F) {
    const std::size_t m = I.rows();
    const std::size_t n = I.cols();
    auto [a, b] = factors_to_matrices(F, m, n);
    BitLength sum_ext = 0.0;
    for (const auto& f : F) sum_ext += extent_length(f.extent);
    BitLength sum_int = 0.0;
    for (const auto& f : F) sum_int += intent_length(f.intent);
    const BooleanMatrix e = bool_subtract(I, bool_product(a, b));
    return ((header_length(m, n, F.size()) + sum_ext) + sum_int) + error_length(e);
}

}  // namespace bmf
