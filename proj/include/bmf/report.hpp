#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "bmf/io.hpp"
#include "bmf/metrics.hpp"

namespace bmf::report {

// Ratios are rounded to 6 decimal places and bit lengths to 4 before they
// enter the JSON value, so serialized reports are byte-stable across runs.

inline double round_ratio(double x) { return std::round(x * 1e6) / 1e6; }
inline double round_bits(double x) { return std::round(x * 1e4) / 1e4; }

/// Report for one dataset/factor-set pair. nlohmann::json keeps object keys
/// sorted, which is exactly the stability the report format wants.
inline nlohmann::json make_report(const std::string& dataset_name, const BooleanMatrix& I,
                                  const std::string& algorithm, const MetricsReport& metrics,
                                  const std::vector<BitLength>& trace) {
    nlohmann::json j;
    j["dataset"] = {
        {"name", dataset_name},
        {"m", I.rows()},
        {"n", I.cols()},
        {"ones", I.ones_count()},
        {"density",
         round_ratio(I.cells() == 0
                         ? 0.0
                         : static_cast<double>(I.ones_count()) / static_cast<double>(I.cells()))},
    };
    j["algorithm"] = algorithm;
    j["factors"] = {
        {"total", metrics.k_total},
        {"trivial", metrics.k_trivial},
        {"nontrivial", metrics.k_nontrivial},
    };
    j["coverage"] = {
        {"data",
         {{"num", metrics.covered_ones},
          {"den", metrics.total_ones},
          {"ratio", round_ratio(metrics.data_coverage)}}},
        {"object",
         {{"num", metrics.objects_covered},
          {"den", metrics.object_count},
          {"ratio", round_ratio(metrics.object_coverage)}}},
    };
    j["overlap"] = {
        {"area", metrics.factor_area},
        {"covered", metrics.covered_ones},
        {"ratio", metrics.overlap_rate ? nlohmann::json(round_ratio(*metrics.overlap_rate))
                                       : nlohmann::json(nullptr)},
    };
    j["mdl"] = {
        {"total_bits", round_bits(metrics.total_cost_bits)},
        {"residual_ones", metrics.residual_ones},
    };
    nlohmann::json trace_json = nlohmann::json::array();
    for (const auto bits : trace) trace_json.push_back(round_bits(bits));
    j["trace"] = std::move(trace_json);
    return j;
}

inline std::string to_string(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace bmf::report
