#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include <bmf/fca.hpp>
#include <bmf/synthetic.hpp>

#include "common.hpp"
#include "oracles.hpp"

using bmf::AttributeSet;
using bmf::BooleanMatrix;
using bmf::ObjectSet;

TEST_CASE("up: shared attributes of an object set") {
    const auto I = testdata::example_matrix();
    CHECK(bmf::up(I, ObjectSet::of(8, {0, 1})) == AttributeSet::of(8, {0, 1, 2, 6, 7}));
    CHECK(bmf::up(I, ObjectSet(8)) == AttributeSet::full(8));  // empty intersection
    CHECK_THROWS_AS(bmf::up(I, ObjectSet(7)), std::invalid_argument);
}

TEST_CASE("down: objects sharing an attribute set") {
    const auto I = testdata::example_matrix();
    CHECK(bmf::down(I, AttributeSet::of(8, {1, 2, 3})) == ObjectSet::of(8, {2, 3, 4, 5, 6}));
    CHECK(bmf::down(I, AttributeSet(8)) == ObjectSet::full(8));
    CHECK_THROWS_AS(bmf::down(I, AttributeSet(9)), std::invalid_argument);
}

TEST_CASE("arrow operators match the set-builder oracle") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const auto naive = oracle::random_naive(rng, 8, 8, 0.45);
        const auto I = oracle::from_naive(naive);
        ObjectSet C(8);
        AttributeSet D(8);
        for (std::size_t i = 0; i < 8; ++i) {
            if (bmf::synthetic::uniform01(rng) < 0.3) C.add(i);
            if (bmf::synthetic::uniform01(rng) < 0.3) D.add(i);
        }
        CHECK(bmf::up(I, C).to_indices() == oracle::up(naive, C.to_indices()));
        CHECK(bmf::down(I, D).to_indices() == oracle::down(naive, D.to_indices()));
    }
}

TEST_CASE("close_attribute_set") {
    const auto I = testdata::example_matrix();
    const auto c = bmf::close_attribute_set(I, AttributeSet::of(8, {6}));  // {g}
    CHECK(c.extent == ObjectSet::of(8, {0, 1, 6, 7}));
    CHECK(c.intent == AttributeSet::of(8, {6, 7}));

    const auto ones = BooleanMatrix::from_rows({"111", "111", "111"});
    const auto top = bmf::close_attribute_set(ones, AttributeSet::full(3));
    CHECK(top.extent == ObjectSet::full(3));
    CHECK(top.intent == AttributeSet::full(3));
}

TEST_CASE("closure is idempotent") {
    std::mt19937_64 rng(555);
    for (int trial = 0; trial < 50; ++trial) {
        const auto I = bmf::synthetic::random_matrix(10, 10, 0.4, rng());
        AttributeSet D(10);
        for (std::size_t j = 0; j < 10; ++j)
            if (bmf::synthetic::uniform01(rng) < 0.3) D.add(j);
        const auto once = bmf::close_attribute_set(I, D);
        const auto twice = bmf::close_attribute_set(I, once.intent);
        CHECK(once == twice);
    }
}

TEST_CASE("factors_to_matrices produces the worked characteristic matrices") {
    auto [a, b] = bmf::factors_to_matrices(testdata::factor_set_a(), 8, 8);
    CHECK(a == BooleanMatrix::from_rows(
                   {"1000", "1000", "0100", "0100", "0100", "0110", "0111", "0001"}));
    CHECK(b == BooleanMatrix::from_rows(
                   {"11100011", "01110000", "01111100", "00001111"}));
}

TEST_CASE("empty factor set yields degenerate matrices and full residual") {
    const auto I = testdata::example_matrix();
    auto [a, b] = bmf::factors_to_matrices(bmf::FactorSet{}, 8, 8);
    CHECK(a.rows() == 8);
    CHECK(a.cols() == 0);
    CHECK(b.rows() == 0);
    CHECK(b.cols() == 8);
    CHECK(bool_product(a, b) == BooleanMatrix(8, 8));
    CHECK(bmf::error(I, a, b) == I.ones_count());
}

TEST_CASE("factor sets built from concepts are from-below") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 30; ++trial) {
        const auto I = bmf::synthetic::random_matrix(12, 9, 0.4, rng());
        bmf::FactorSet F;
        for (int f = 0; f < 4; ++f) {
            AttributeSet D(9);
            D.add(bmf::synthetic::uniform_index(rng, 9));
            F.add(bmf::close_attribute_set(I, D));
        }
        auto [a, b] = bmf::factors_to_matrices(F, 12, 9);
        const auto prod = bool_product(a, b);
        for (std::size_t i = 0; i < 12; ++i)
            for (std::size_t j = 0; j < 9; ++j)
                if (prod.at(i, j)) REQUIRE(I.at(i, j));
    }
}

TEST_CASE("Galois connection properties") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 1 + bmf::synthetic::uniform_index(rng, 16);
        const std::size_t n = 1 + bmf::synthetic::uniform_index(rng, 16);
        const auto I = bmf::synthetic::random_matrix(m, n, 0.4, rng());

        ObjectSet c1(m), c2(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (bmf::synthetic::uniform01(rng) < 0.3) c1.add(i);
            if (bmf::synthetic::uniform01(rng) < 0.6) c2.add(i);
        }
        ObjectSet c_small = c1;
        c_small &= c2;  // c_small is a subset of c2

        // extensive: C is contained in down(up(C))
        CHECK(c1.is_subset_of(bmf::down(I, bmf::up(I, c1))));
        // antitone: smaller object sets share more attributes
        CHECK(bmf::up(I, c2).is_subset_of(bmf::up(I, c_small)));
        // up . down . up = up
        const auto u = bmf::up(I, c1);
        CHECK(bmf::up(I, bmf::down(I, u)) == u);

        AttributeSet d(n);
        for (std::size_t j = 0; j < n; ++j)
            if (bmf::synthetic::uniform01(rng) < 0.3) d.add(j);
        CHECK(d.is_subset_of(bmf::up(I, bmf::down(I, d))));
    }
}

namespace {

std::set<oracle::Factor> as_naive_set(const std::vector<bmf::FormalConcept>& concepts) {
    std::set<oracle::Factor> out;
    for (const auto& c : concepts) out.insert(oracle::to_naive(c));
    return out;
}

}  // namespace

TEST_CASE("enumerate_concepts on small canonical matrices") {
    {
        const auto I = BooleanMatrix::from_rows({"10", "01"});
        const auto concepts = enumerate_concepts(I);
        CHECK(concepts.size() == 4);
        const auto got = as_naive_set(concepts);
        CHECK(got.count({{0, 1}, {}}) == 1);
        CHECK(got.count({{0}, {0}}) == 1);
        CHECK(got.count({{1}, {1}}) == 1);
        CHECK(got.count({{}, {0, 1}}) == 1);
    }
    {
        const auto I = BooleanMatrix::from_rows({"111", "111", "111"});
        const auto concepts = enumerate_concepts(I);
        REQUIRE(concepts.size() == 1);
        CHECK(concepts[0].extent == ObjectSet::full(3));
        CHECK(concepts[0].intent == AttributeSet::full(3));
    }
    CHECK(enumerate_concepts(testdata::example_matrix()).size() == 19);
}

TEST_CASE("enumerate_concepts equals the powerset oracle") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 1 + bmf::synthetic::uniform_index(rng, 14);
        const std::size_t n = 1 + bmf::synthetic::uniform_index(rng, 10);
        const double density = 0.15 + 0.7 * bmf::synthetic::uniform01(rng);
        const auto naive = oracle::random_naive(rng, m, n, density);
        const auto I = oracle::from_naive(naive);

        const auto got = as_naive_set(enumerate_concepts(I));
        const auto want = oracle::all_concepts_powerset(naive);
        REQUIRE(got.size() == enumerate_concepts(I).size());  // no duplicates
        CHECK(got == want);
    }
}

TEST_CASE("every enumerated concept is closed") {
    std::mt19937_64 rng(606);
    const auto I = bmf::synthetic::random_matrix(14, 11, 0.35, rng());
    for (const auto& c : enumerate_concepts(I)) {
        CHECK(bmf::up(I, c.extent) == c.intent);
        CHECK(bmf::down(I, c.intent) == c.extent);
    }
}

TEST_CASE("enumerate_concepts honors the cell guard") {
    const auto I = BooleanMatrix(40, 40);
    CHECK_THROWS_AS(enumerate_concepts(I, 100), bmf::ConceptLimitError);
    CHECK_NOTHROW(enumerate_concepts(I, 1600));
}

TEST_CASE("FactorSet membership and equality") {
    bmf::FactorSet f = testdata::factor_set_a();
    CHECK(f.contains(testdata::concept_of({1, 2}, {1, 2, 3, 7, 8})));
    CHECK(!f.contains(testdata::concept_of({1, 2}, {1, 2, 3})));
    CHECK(f == testdata::factor_set_a());
}
