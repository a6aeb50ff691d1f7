#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <bmf/bmf.hpp>

namespace testdata {

// The running 8x8 example, rows 1..8 and attributes a..h.
inline bmf::BooleanMatrix example_matrix() {
    return bmf::BooleanMatrix::from_rows({
        "11100011",
        "11100011",
        "11110000",
        "11110100",
        "01110001",
        "01111100",
        "01111111",
        "00001111",
    });
}

inline bmf::FormalConcept concept_of(std::initializer_list<std::size_t> extent1,
                                     std::initializer_list<std::size_t> intent1) {
    // 1-based rows and attribute positions, matching the write-ups
    bmf::ObjectSet c(8);
    for (const auto i : extent1) c.add(i - 1);
    bmf::AttributeSet d(8);
    for (const auto j : intent1) d.add(j - 1);
    return {std::move(c), std::move(d)};
}

// First worked factorization: four concepts covering 35 of the 39 ones.
inline bmf::FactorSet factor_set_a() {
    bmf::FactorSet f;
    f.add(concept_of({1, 2}, {1, 2, 3, 7, 8}));           // <{1,2},{a,b,c,g,h}>
    f.add(concept_of({3, 4, 5, 6, 7}, {2, 3, 4}));        // <{3..7},{b,c,d}>
    f.add(concept_of({6, 7}, {2, 3, 4, 5, 6}));           // <{6,7},{b,c,d,e,f}>
    f.add(concept_of({7, 8}, {5, 6, 7, 8}));              // <{7,8},{e,f,g,h}>
    return f;
}

// Second worked factorization: two disjoint concepts covering 23 ones.
inline bmf::FactorSet factor_set_b() {
    bmf::FactorSet f;
    f.add(concept_of({1, 2, 7, 8}, {7, 8}));              // <{1,2,7,8},{g,h}>
    f.add(concept_of({3, 4, 5, 6, 7}, {2, 3, 4}));        // <{3..7},{b,c,d}>
    return f;
}

inline std::filesystem::path data_dir() { return std::filesystem::path(BMF_DATA_DIR); }

}  // namespace testdata
