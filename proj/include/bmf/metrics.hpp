#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bmf/fca.hpp"
#include "bmf/mdl.hpp"

namespace bmf {

enum class FactorFilter { all, trivial, nontrivial };

/// Evaluation summary for one factor set. Exact integer numerators and
/// denominators are kept alongside the floating ratios so golden comparisons
/// can stay in integer arithmetic.
struct MetricsReport {
    std::size_t k_total = 0;
    std::size_t k_trivial = 0;     // single-attribute intents
    std::size_t k_nontrivial = 0;

    std::size_t covered_ones = 0;  // ||A_F o B_F||
    std::size_t total_ones = 0;    // ||I||
    std::size_t objects_covered = 0;
    std::size_t object_count = 0;
    std::size_t factor_area = 0;   // sum over factors of |C| * |D|
    std::size_t residual_ones = 0;

    double data_coverage = 1.0;
    double object_coverage = 0.0;
    std::optional<double> overlap_rate;  // empty when nothing is covered
    BitLength total_cost_bits = 0.0;
};

/// (nontrivial, trivial) counts; a factor is trivial when its intent has
/// exactly one attribute.
inline std::pair<std::size_t, std::size_t> factor_counts(const FactorSet& F) {
    std::size_t trivial = 0;
    for (const auto& f : F)
        if (f.intent.count() == 1) ++trivial;
    return {F.size() - trivial, trivial};
}

namespace detail {

struct CoverSummary {
    std::size_t covered = 0;  // cells under at least one factor
    std::size_t area = 0;     // with multiplicity
};

// Materializes per-cell cover counts once; rejects factor sets that cover a
// zero of I (not from-below).
inline CoverSummary cover_summary(const BooleanMatrix& I, const FactorSet& F) {
    const std::size_t m = I.rows();
    const std::size_t n = I.cols();
    std::vector<std::uint32_t> counts(m * n, 0);
    CoverSummary s;
    for (const auto& f : F) {
        if (f.extent.universe() != m || f.intent.universe() != n)
            throw std::invalid_argument("metrics: factor universe mismatch");
        s.area += f.extent.count() * f.intent.count();
        f.extent.for_each([&](std::size_t i) {
            f.intent.for_each([&](std::size_t j) {
                if (!I.at(i, j))
                    throw std::invalid_argument(
                        "metrics: factor set is not from-below; it covers the zero cell at row " +
                        std::to_string(i + 1) + ", column " + std::to_string(j + 1) +
                        " (1-based)");
                ++counts[i * n + j];
            });
        });
    }
    for (const auto c : counts)
        if (c > 0) ++s.covered;
    return s;
}

}  // namespace detail

/// Fraction of I's ones covered by the factors; 1 by convention when I has no
/// ones. Rejects factor sets that cover a zero of I.
inline double data_coverage(const BooleanMatrix& I, const FactorSet& F) {
    const auto s = detail::cover_summary(I, F);
    if (I.ones_count() == 0) return 1.0;
    return static_cast<double>(s.covered) / static_cast<double>(I.ones_count());
}

/// Fraction of objects belonging to at least one factor with a nonempty
/// intent.
inline double object_coverage(const BooleanMatrix& I, const FactorSet& F) {
    const std::size_t m = I.rows();
    ObjectSet touched(m);
    for (const auto& f : F) {
        if (f.extent.universe() != m)
            throw std::invalid_argument("metrics: factor universe mismatch");
        if (!f.intent.empty()) touched |= f.extent;
    }
    if (m == 0) return 0.0;
    return static_cast<double>(touched.count()) / static_cast<double>(m);
}

/// Total factor area divided by the number of distinct covered cells; 1 means
/// the factors are pairwise cell-disjoint. Undefined (throws) when nothing is
/// covered.
inline double overlap_rate(const BooleanMatrix& I, const FactorSet& F) {
    const auto s = detail::cover_summary(I, F);
    if (s.covered == 0)
        throw std::domain_error("overlap_rate: undefined, no cell is covered");
    return static_cast<double>(s.area) / static_cast<double>(s.covered);
}

/// All measures in one pass over the cover counts.
inline MetricsReport compute_metrics(const BooleanMatrix& I, const FactorSet& F) {
    MetricsReport r;
    const auto s = detail::cover_summary(I, F);
    const auto [nontrivial, trivial] = factor_counts(F);
    r.k_total = F.size();
    r.k_trivial = trivial;
    r.k_nontrivial = nontrivial;
    r.covered_ones = s.covered;
    r.total_ones = I.ones_count();
    r.factor_area = s.area;
    r.object_count = I.rows();
    r.residual_ones = r.total_ones - s.covered;

    ObjectSet touched(I.rows());
    for (const auto& f : F)
        if (!f.intent.empty()) touched |= f.extent;
    r.objects_covered = touched.count();

    r.data_coverage = r.total_ones == 0
                          ? 1.0
                          : static_cast<double>(s.covered) / static_cast<double>(r.total_ones);
    r.object_coverage = r.object_count == 0
                            ? 0.0
                            : static_cast<double>(r.objects_covered) /
                                  static_cast<double>(r.object_count);
    if (s.covered > 0)
        r.overlap_rate = static_cast<double>(s.area) / static_cast<double>(s.covered);
    r.total_cost_bits = total_cost(I, F);
    return r;
}

/// Metrics of the sub-factor-set selected by the filter.
inline MetricsReport coverage_filtered(const BooleanMatrix& I, const FactorSet& F,
                                       FactorFilter filter) {
    if (filter == FactorFilter::all) return compute_metrics(I, F);
    FactorSet subset;
    for (const auto& f : F) {
        const bool is_trivial = f.intent.count() == 1;
        if ((filter == FactorFilter::trivial) == is_trivial) subset.add(f);
    }
    return compute_metrics(I, subset);
}

}  // namespace bmf
