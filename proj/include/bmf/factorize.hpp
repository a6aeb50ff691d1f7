#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "bmf/fca.hpp"
#include "bmf/mdl.hpp"

namespace bmf {

struct FactorizationResult {
    FactorSet factors;
    /// total_cost(I, F) of the empty factorization first, then after each
    /// accepted factor.
    std::vector<BitLength> cost_trace;
    std::size_t residual_ones = 0;
};

struct MdlGrecondOptions {
    /// Candidate evaluations within one growth pass run on this many threads.
    /// The factor sequence is identical for any thread count; 0 picks the
    /// hardware concurrency.
    unsigned threads = 1;
};

struct GrecondOptions {
    /// Stop once at most this many ones are left uncovered.
    std::size_t epsilon = 0;
    std::optional<std::size_t> max_factors;
};

namespace detail {

// Uncovered ones of I, as mutable packed rows; factors clear their rectangle.
struct Residual {
    std::size_t rows;
    std::size_t row_words;
    std::size_t ones;
    std::vector<std::uint64_t> bits;

    explicit Residual(const BooleanMatrix& I)
        : rows(I.rows()),
          row_words(word_count(I.cols())),
          ones(I.ones_count()),
          bits(rows * row_words) {
        for (std::size_t i = 0; i < rows; ++i) {
            const auto src = I.row_words(i);
            std::copy(src.begin(), src.end(), bits.begin() + static_cast<std::ptrdiff_t>(i * row_words));
        }
    }

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {bits.data() + i * row_words, row_words};
    }

    // Number of still-uncovered cells inside the rectangle extent x intent.
    std::size_t cover(const ObjectSet& extent, const AttributeSet& intent) const {
        std::size_t c = 0;
        extent.for_each([&](std::size_t i) { c += popcount_and(row(i), intent.words()); });
        return c;
    }

    void clear_rectangle(const ObjectSet& extent, const AttributeSet& intent, std::size_t covered) {
        const auto mask = intent.words();
        extent.for_each([&](std::size_t i) {
            for (std::size_t wi = 0; wi < row_words; ++wi)
                bits[i * row_words + wi] &= ~mask[wi];
        });
        ones -= covered;
    }
};

struct Candidate {
    bool valid = false;
    BitLength cost = 0.0;
    std::size_t attribute = std::numeric_limits<std::size_t>::max();
    std::size_t cover = 0;
    ObjectSet extent;
    AttributeSet intent;
};

// Shared per-pass inputs for MDL candidate evaluation. Costs are assembled
// with the same floating-point expression shape as total_cost() so that the
// greedy choices match a from-scratch evaluation bit for bit.
struct MdlPassContext {
    const BooleanMatrix& I;
    const Residual& residual;
    const FactorSet& factors;
    const ObjectSet& reach;        // down(D) of the current candidate
    const AttributeSet& intent;    // D of the current candidate
    bool have_candidate;
    BitLength sum_extent;
    BitLength sum_intent;
    BitLength header;              // header_length(m, n, |F| + 1)
    BitLength threshold;           // strict upper bound: current total cost
};

// Best strict improvement among attributes in [first, last); smallest
// attribute wins ties because the scan is ascending with a strict compare.
inline Candidate evaluate_mdl_range(const MdlPassContext& ctx, std::size_t first, std::size_t last) {
    const std::size_t m = ctx.I.rows();
    const std::size_t n = ctx.I.cols();
    const std::size_t cells = m * n;
    Candidate best;
    best.cost = ctx.threshold;
    for (std::size_t j = first; j < last; ++j) {
        if (ctx.intent.contains(j)) continue;
        ObjectSet extent = ctx.reach;
        extent.intersect_words(ctx.I.col_words(j));
        if (extent.empty()) continue;  // covers nothing, can never pay off
        AttributeSet intent = up(ctx.I, extent);
        if (ctx.have_candidate && intent == ctx.intent) continue;  // re-derived current candidate
        bool taken = false;
        for (const auto& f : ctx.factors) {
            if (f.intent == intent) {  // concepts of I coincide iff intents do
                taken = true;
                break;
            }
        }
        if (taken) continue;
        const std::size_t cover = ctx.residual.cover(extent, intent);
        const BitLength cost =
            ((ctx.header + (ctx.sum_extent + extent_length(extent.count(), m))) +
             (ctx.sum_intent + intent_length(intent.count(), n))) +
            error_length(ctx.residual.ones - cover, cells);
        if (cost < best.cost) {
            best.valid = true;
            best.cost = cost;
            best.attribute = j;
            best.cover = cover;
            best.extent = std::move(extent);
            best.intent = std::move(intent);
        }
    }
    return best;
}

inline Candidate evaluate_mdl_pass(const MdlPassContext& ctx, unsigned threads) {
    const std::size_t n = ctx.I.cols();
    if (threads <= 1 || n < 2) return evaluate_mdl_range(ctx, 0, n);

    const std::size_t parts = std::min<std::size_t>(threads, n);
    std::vector<Candidate> results(parts);
    std::vector<std::thread> workers;
    workers.reserve(parts);
    const std::size_t chunk = (n + parts - 1) / parts;
    for (std::size_t p = 0; p < parts; ++p) {
        const std::size_t first = p * chunk;
        const std::size_t last = std::min(n, first + chunk);
        workers.emplace_back([&, p, first, last] {
            results[p] = evaluate_mdl_range(ctx, first, last);
        });
    }
    for (auto& w : workers) w.join();

    // Merge in attribute order; a strict compare keeps the earliest chunk on
    // equal costs, reproducing the sequential tie-break exactly.
    Candidate best;
    best.cost = ctx.threshold;
    for (auto& r : results) {
        if (r.valid && r.cost < best.cost) best = std::move(r);
    }
    return best;
}

inline void check_nonempty(const BooleanMatrix& I, const char* algorithm) {
    if (I.rows() == 0 || I.cols() == 0)
        throw std::invalid_argument(std::string(algorithm) + ": matrix must be at least 1 x 1");
}

}  // namespace detail

/// Greedy MDL-guided from-below factorization. Each factor is grown from the
/// empty attribute set by repeatedly closing D union {j} over all attributes
/// j outside D and keeping the closure that lowers the total description
/// length the most; growth stops when no attribute improves the cost, and the
/// outer loop stops when no candidate beats the cost of the current factor
/// set. Ties between equally priced attributes go to the smallest index, so
/// the output is deterministic.
inline FactorizationResult mdl_grecond(const BooleanMatrix& I, const MdlGrecondOptions& options = {}) {
    detail::check_nonempty(I, "mdl_grecond");
    const std::size_t m = I.rows();
    const std::size_t n = I.cols();
    const std::size_t cells = m * n;
    unsigned threads = options.threads;
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    detail::Residual residual(I);
    FactorizationResult result;
    BitLength sum_extent = 0.0;
    BitLength sum_intent = 0.0;
    BitLength total =
        ((header_length(m, n, 0) + sum_extent) + sum_intent) + error_length(residual.ones, cells);
    result.cost_trace.push_back(total);

    for (;;) {
        ObjectSet reach = ObjectSet::full(m);  // down(D); D starts empty
        AttributeSet intent(n);
        std::size_t cover = 0;
        bool have_candidate = false;

        for (;;) {
            detail::MdlPassContext ctx{I,
                                       residual,
                                       result.factors,
                                       reach,
                                       intent,
                                       have_candidate,
                                       sum_extent,
                                       sum_intent,
                                       header_length(m, n, result.factors.size() + 1),
                                       total};
            detail::Candidate best = detail::evaluate_mdl_pass(ctx, threads);
            if (!best.valid) break;
            reach = std::move(best.extent);
            intent = std::move(best.intent);
            cover = best.cover;
            total = best.cost;
            have_candidate = true;
        }

        if (!have_candidate) break;
        sum_extent += extent_length(reach.count(), m);
        sum_intent += intent_length(intent.count(), n);
        residual.clear_rectangle(reach, intent, cover);
        result.factors.add({std::move(reach), std::move(intent)});
        result.cost_trace.push_back(total);
    }

    result.residual_ones = residual.ones;
    return result;
}

/// Classic greedy exact-cover factorization. Factors are grown by the
/// attribute whose closure covers the most still-uncovered ones; factors are
/// appended until at most epsilon ones remain uncovered (default 0: exact
/// decomposition) or max_factors is reached.
inline FactorizationResult grecond(const BooleanMatrix& I, const GrecondOptions& options = {}) {
    detail::check_nonempty(I, "grecond");
    const std::size_t m = I.rows();
    const std::size_t n = I.cols();
    const std::size_t cells = m * n;

    detail::Residual residual(I);
    FactorizationResult result;
    BitLength sum_extent = 0.0;
    BitLength sum_intent = 0.0;
    result.cost_trace.push_back(((header_length(m, n, 0) + sum_extent) + sum_intent) +
                                error_length(residual.ones, cells));

    while (residual.ones > options.epsilon &&
           (!options.max_factors || result.factors.size() < *options.max_factors)) {
        ObjectSet reach = ObjectSet::full(m);
        AttributeSet intent(n);
        std::size_t cover = 0;
        bool have_candidate = false;

        for (;;) {
            std::size_t best_cover = cover;
            std::size_t best_attribute = n;
            ObjectSet best_extent;
            AttributeSet best_intent;
            for (std::size_t j = 0; j < n; ++j) {
                if (intent.contains(j)) continue;
                ObjectSet extent = reach;
                extent.intersect_words(I.col_words(j));
                if (extent.empty()) continue;
                AttributeSet closed = up(I, extent);
                const std::size_t c = residual.cover(extent, closed);
                if (c > best_cover) {  // ascending scan keeps the smallest j on ties
                    best_cover = c;
                    best_attribute = j;
                    best_extent = std::move(extent);
                    best_intent = std::move(closed);
                }
            }
            if (best_attribute == n) break;
            reach = std::move(best_extent);
            intent = std::move(best_intent);
            cover = best_cover;
            have_candidate = true;
        }

        if (!have_candidate) break;  // cannot happen while uncovered ones remain
        sum_extent += extent_length(reach.count(), m);
        sum_intent += intent_length(intent.count(), n);
        residual.clear_rectangle(reach, intent, cover);
        result.factors.add({std::move(reach), std::move(intent)});
        result.cost_trace.push_back(
            ((header_length(m, n, result.factors.size()) + sum_extent) + sum_intent) +
            error_length(residual.ones, cells));
    }

    result.residual_ones = residual.ones;
    return result;
}

}  // namespace bmf
