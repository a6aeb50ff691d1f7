#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "bmf/fca.hpp"
#include "bmf/matrix.hpp"

namespace bmf::synthetic {

// Distributions are hand-rolled from the raw mt19937_64 stream so generated
// data is reproducible across standard library implementations.

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform index in [0, bound).
inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_index: empty range");
    return static_cast<std::size_t>(
        (static_cast<unsigned __int128>(rng()) * bound) >> 64);
}

/// Uniform integer in [lo, hi] inclusive.
inline std::size_t uniform_between(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + uniform_index(rng, hi - lo + 1);
}

/// Each cell is 1 independently with the given density.
inline BooleanMatrix random_matrix(std::size_t rows, std::size_t cols, double density,
                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MatrixBuilder b(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (uniform01(rng) < density) b.set(i, j);
    return b.build();
}

/// k distinct indices from [0, universe), ascending.
inline std::vector<std::size_t> sample_indices(std::mt19937_64& rng, std::size_t universe,
                                               std::size_t k) {
    std::vector<std::size_t> pool(universe);
    for (std::size_t i = 0; i < universe; ++i) pool[i] = i;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + uniform_index(rng, universe - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

struct PlantedConfig {
    std::size_t rectangles = 5;
    std::size_t extent_min = 25;
    std::size_t extent_max = 45;
    std::size_t intent_min = 8;
    std::size_t intent_max = 12;
    /// Probability that a background zero flips to 1 (additive noise; a
    /// from-below model treats extra ones as residual, so planted rectangles
    /// stay intact).
    double noise = 0.05;
};

struct PlantedMatrix {
    BooleanMatrix matrix;
    std::vector<ObjectSet> extents;
    std::vector<AttributeSet> intents;
};

/// Union of random full rectangles plus uniform additive noise. Intents are
/// pairwise distinct so each planted rectangle is identifiable.
inline PlantedMatrix planted_matrix(std::size_t rows, std::size_t cols,
                                    const PlantedConfig& config, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PlantedMatrix out;
    MatrixBuilder b(rows, cols);

    for (std::size_t r = 0; r < config.rectangles; ++r) {
        AttributeSet intent(cols);
        for (int attempt = 0; attempt < 64; ++attempt) {
            const std::size_t size = uniform_between(rng, config.intent_min, config.intent_max);
            intent = AttributeSet::of(cols, sample_indices(rng, cols, size));
            bool fresh = true;
            for (const auto& other : out.intents)
                if (other == intent) fresh = false;
            if (fresh) break;
        }
        const std::size_t esize = uniform_between(rng, config.extent_min, config.extent_max);
        ObjectSet extent = ObjectSet::of(rows, sample_indices(rng, rows, esize));
        extent.for_each([&](std::size_t i) {
            intent.for_each([&](std::size_t j) { b.set(i, j); });
        });
        out.extents.push_back(std::move(extent));
        out.intents.push_back(std::move(intent));
    }

    BooleanMatrix clean = b.build();
    MatrixBuilder noisy(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        noisy.or_row(i, clean.row_words(i));
        for (std::size_t j = 0; j < cols; ++j)
            if (!clean.at(i, j) && uniform01(rng) < config.noise) noisy.set(i, j);
    }
    out.matrix = noisy.build();
    return out;
}

}  // namespace bmf::synthetic
