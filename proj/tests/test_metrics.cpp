#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <bmf/factorize.hpp>
#include <bmf/metrics.hpp>
#include <bmf/synthetic.hpp>

#include "common.hpp"

using Catch::Matchers::WithinRel;
using bmf::AttributeSet;
using bmf::BooleanMatrix;
using bmf::FactorSet;
using bmf::ObjectSet;

TEST_CASE("factor_counts separates single-attribute factors") {
    CHECK(bmf::factor_counts(testdata::factor_set_a()) == std::pair<std::size_t, std::size_t>{4, 0});

    const auto I = testdata::example_matrix();
    FactorSet trivial_only;
    trivial_only.add(bmf::close_attribute_set(I, AttributeSet::of(8, {0})));
    // the closure of {a} keeps a single-attribute intent in this dataset
    REQUIRE(trivial_only[0].intent.count() > 0);
    const auto [nontrivial, trivial] = bmf::factor_counts(trivial_only);
    CHECK(nontrivial + trivial == 1);

    FactorSet one_column;
    one_column.add({ObjectSet::of(8, {0, 1, 2, 3}), AttributeSet::of(8, {0})});
    CHECK(bmf::factor_counts(one_column) == std::pair<std::size_t, std::size_t>{0, 1});
}

TEST_CASE("worked example: data coverage") {
    const auto I = testdata::example_matrix();
    CHECK_THAT(bmf::data_coverage(I, testdata::factor_set_a()),
               WithinRel(35.0 / 39.0, 1e-14));
    CHECK_THAT(bmf::data_coverage(I, testdata::factor_set_b()),
               WithinRel(23.0 / 39.0, 1e-14));
    CHECK(bmf::data_coverage(I, FactorSet{}) == 0.0);
}

TEST_CASE("worked example: object coverage") {
    const auto I = testdata::example_matrix();
    CHECK(bmf::object_coverage(I, testdata::factor_set_a()) == 1.0);
    CHECK(bmf::object_coverage(I, testdata::factor_set_b()) == 1.0);
    CHECK(bmf::object_coverage(I, FactorSet{}) == 0.0);

    FactorSet one;
    one.add(testdata::concept_of({1, 2}, {1, 2, 3, 7, 8}));
    CHECK_THAT(bmf::object_coverage(I, one), WithinRel(0.25, 1e-14));

    // a factor with an empty intent covers no crosses and no objects
    FactorSet empty_intent;
    empty_intent.add({ObjectSet::full(8), AttributeSet(8)});
    CHECK(bmf::object_coverage(I, empty_intent) == 0.0);
}

TEST_CASE("worked example: overlap rate") {
    const auto I = testdata::example_matrix();
    CHECK_THAT(bmf::overlap_rate(I, testdata::factor_set_a()),
               WithinRel(43.0 / 35.0, 1e-14));
    CHECK(bmf::overlap_rate(I, testdata::factor_set_b()) == 1.0);
    CHECK_THROWS_AS(bmf::overlap_rate(I, FactorSet{}), std::domain_error);
}

TEST_CASE("non-from-below factor sets are rejected") {
    const auto I = testdata::example_matrix();
    FactorSet bad;
    bad.add({ObjectSet::of(8, {0}), AttributeSet::of(8, {3})});  // cell (1,d) is 0
    CHECK_THROWS_AS(bmf::data_coverage(I, bad), std::invalid_argument);
    CHECK_THROWS_WITH(bmf::data_coverage(I, bad),
                      Catch::Matchers::ContainsSubstring("row 1") &&
                          Catch::Matchers::ContainsSubstring("column 4"));
}

TEST_CASE("all-zero matrix conventions") {
    const auto Z = BooleanMatrix(4, 4);
    CHECK(bmf::data_coverage(Z, FactorSet{}) == 1.0);
    CHECK_THROWS_AS(bmf::overlap_rate(Z, FactorSet{}), std::domain_error);
    const auto report = bmf::compute_metrics(Z, FactorSet{});
    CHECK(report.data_coverage == 1.0);
    CHECK(!report.overlap_rate.has_value());
}

TEST_CASE("compute_metrics aggregates the worked example") {
    const auto I = testdata::example_matrix();
    const auto r = bmf::compute_metrics(I, testdata::factor_set_a());
    CHECK(r.k_total == 4);
    CHECK(r.k_trivial == 0);
    CHECK(r.k_nontrivial == 4);
    CHECK(r.covered_ones == 35);
    CHECK(r.total_ones == 39);
    CHECK(r.factor_area == 43);
    CHECK(r.objects_covered == 8);
    CHECK(r.object_count == 8);
    CHECK(r.residual_ones == 4);
    REQUIRE(r.overlap_rate.has_value());
    CHECK_THAT(*r.overlap_rate, WithinRel(43.0 / 35.0, 1e-14));
    CHECK_THAT(r.total_cost_bits, WithinRel(118.59912734410696, 1e-13));
}

TEST_CASE("coverage_filtered") {
    const auto I = testdata::example_matrix();

    // identity on the all filter, unchanged when nothing is trivial
    const auto all = bmf::coverage_filtered(I, testdata::factor_set_a(), bmf::FactorFilter::all);
    const auto nontrivial =
        bmf::coverage_filtered(I, testdata::factor_set_a(), bmf::FactorFilter::nontrivial);
    CHECK(all.covered_ones == nontrivial.covered_ones);
    CHECK(all.k_total == nontrivial.k_total);

    // mixed set: dropping the trivial factor can only lower coverage
    FactorSet mixed = testdata::factor_set_b();
    mixed.add({bmf::down(I, AttributeSet::of(8, {0})), AttributeSet::of(8, {0})});
    const auto full = bmf::compute_metrics(I, mixed);
    const auto filtered = bmf::coverage_filtered(I, mixed, bmf::FactorFilter::nontrivial);
    CHECK(filtered.k_total == 2);
    CHECK(filtered.data_coverage <= full.data_coverage);
    const auto trivially = bmf::coverage_filtered(I, mixed, bmf::FactorFilter::trivial);
    CHECK(trivially.k_total == 1);
    CHECK(trivially.k_trivial == 1);
}

TEST_CASE("metrics properties on random factorizations") {
    std::mt19937_64 rng(8642);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t m = 3 + bmf::synthetic::uniform_index(rng, 12);
        const std::size_t n = 3 + bmf::synthetic::uniform_index(rng, 12);
        const auto I = bmf::synthetic::random_matrix(m, n, 0.4, rng());
        if (I.ones_count() == 0) continue;
        const auto run = bmf::grecond(I);

        // data coverage is monotone in the factor prefix
        FactorSet prefix;
        double previous = bmf::data_coverage(I, prefix);
        for (const auto& f : run.factors) {
            prefix.add(f);
            const double next = bmf::data_coverage(I, prefix);
            REQUIRE(next >= previous);
            previous = next;
        }

        const auto r = bmf::compute_metrics(I, run.factors);
        CHECK(r.k_total == r.k_trivial + r.k_nontrivial);
        CHECK(r.covered_ones == r.total_ones - r.residual_ones);
        if (r.overlap_rate) CHECK(*r.overlap_rate >= 1.0);

        // dropping factors can only lower coverage
        const auto sub = bmf::coverage_filtered(I, run.factors, bmf::FactorFilter::nontrivial);
        CHECK(sub.covered_ones <= r.covered_ones);
        CHECK(sub.data_coverage <= r.data_coverage);

        // object coverage is total once everything is covered and no row is empty
        bool empty_row = false;
        for (std::size_t i = 0; i < m; ++i)
            if (I.row(i).empty()) empty_row = true;
        if (r.data_coverage == 1.0 && !empty_row) CHECK(r.object_coverage == 1.0);
    }
}

TEST_CASE("overlap rate is 1 exactly for pairwise cell-disjoint factors") {
    const auto I = testdata::example_matrix();
    // disjoint: the worked second factorization
    CHECK(bmf::overlap_rate(I, testdata::factor_set_b()) == 1.0);
    // overlapping: add a factor sharing cells with an existing one
    FactorSet overlapping = testdata::factor_set_b();
    overlapping.add(testdata::concept_of({6, 7}, {2, 3, 4, 5, 6}));
    CHECK(bmf::overlap_rate(I, overlapping) > 1.0);
}
