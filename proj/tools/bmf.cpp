// Command-line driver: factorize datasets, evaluate factor files, and
// enumerate formal concepts.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <bmf/bmf.hpp>

namespace {

namespace fs = std::filesystem;

std::optional<bmf::io::MatrixFormat> format_option(const std::string& name) {
    if (name.empty()) return std::nullopt;
    return bmf::io::parse_format_name(name);
}

void write_text(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

std::size_t concept_cell_limit(std::optional<std::size_t> flag_value) {
    if (flag_value) return *flag_value;
    if (const char* env = std::getenv("BMF_CONCEPT_LIMIT")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::runtime_error("BMF_CONCEPT_LIMIT must be an unsigned integer, got '" +
                                     std::string(env) + "'");
        }
    }
    return bmf::kDefaultConceptCellLimit;
}

// Hard error on the first covered zero, reported with 1-based object index
// and attribute label; warnings for factors that are not closed concepts.
void validate_factors(const bmf::BooleanMatrix& I, const bmf::FactorSet& factors,
                      const std::vector<std::string>& labels) {
    std::size_t index = 0;
    for (const auto& f : factors) {
        ++index;
        bool bad = false;
        std::size_t bad_i = 0, bad_j = 0;
        f.extent.for_each([&](std::size_t i) {
            f.intent.for_each([&](std::size_t j) {
                if (!bad && !I.at(i, j)) {
                    bad = true;
                    bad_i = i;
                    bad_j = j;
                }
            });
        });
        if (bad)
            throw std::runtime_error("factor " + std::to_string(index) +
                                     " covers a zero of the dataset at object " +
                                     std::to_string(bad_i + 1) + ", attribute " +
                                     labels.at(bad_j));
        const bmf::ObjectSet extent = bmf::down(I, f.intent);
        const bmf::AttributeSet intent = bmf::up(I, f.extent);
        if (!(extent == f.extent) || !(intent == f.intent))
            std::cerr << "warning: factor " << index << " is not a closed concept\n";
    }
}

int run_factorize(const bmf::io::Dataset& dataset, const std::string& algo,
                  std::size_t epsilon, std::optional<std::size_t> max_factors,
                  unsigned threads, std::string factors_out, std::string report_out) {
    bmf::FactorizationResult result;
    if (algo == "mdl-grecond") {
        result = bmf::mdl_grecond(dataset.matrix, {.threads = threads});
    } else {
        result = bmf::grecond(dataset.matrix, {.epsilon = epsilon, .max_factors = max_factors});
    }

    if (factors_out.empty()) factors_out = dataset.name + ".factors";
    if (report_out.empty()) report_out = dataset.name + ".report.json";

    write_text(factors_out, bmf::io::factor_file_string(result.factors, dataset.labels));

    const bmf::MetricsReport metrics = bmf::compute_metrics(dataset.matrix, result.factors);
    const auto report = bmf::report::make_report(dataset.name, dataset.matrix, algo, metrics,
                                                 result.cost_trace);
    write_text(report_out, bmf::report::to_string(report));

    std::cerr << "wrote " << result.factors.size() << " factors to " << factors_out
              << " and the report to " << report_out << "\n";
    return 0;
}

int run_evaluate(const bmf::io::Dataset& dataset, const fs::path& factor_path,
                 const std::string& report_out) {
    const bmf::FactorSet factors =
        bmf::io::load_factor_file(factor_path, dataset.matrix.rows(), dataset.labels);
    validate_factors(dataset.matrix, factors, dataset.labels);

    const bmf::MetricsReport metrics = bmf::compute_metrics(dataset.matrix, factors);
    std::vector<bmf::BitLength> trace;
    bmf::FactorSet prefix;
    trace.push_back(bmf::total_cost(dataset.matrix, prefix));
    for (const auto& f : factors) {
        prefix.add(f);
        trace.push_back(bmf::total_cost(dataset.matrix, prefix));
    }
    const auto report =
        bmf::report::make_report(dataset.name, dataset.matrix, "evaluate", metrics, trace);
    write_text(report_out.empty() ? "-" : report_out, bmf::report::to_string(report));
    return 0;
}

int run_concepts(const bmf::io::Dataset& dataset, bool count_only,
                 std::optional<std::size_t> limit) {
    const auto concepts =
        bmf::enumerate_concepts(dataset.matrix, concept_cell_limit(limit));
    if (count_only) {
        std::cout << concepts.size() << "\n";
        return 0;
    }
    bmf::FactorSet as_factors;
    for (const auto& c : concepts) as_factors.add(c);
    bmf::io::write_factor_file(std::cout, as_factors, dataset.labels);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"from-below Boolean matrix factorization with MDL-guided factor selection"};
    app.require_subcommand(1);

    std::string input;
    std::string format_name;
    std::string name_override;

    auto add_dataset_options = [&](CLI::App* cmd) {
        cmd->add_option("dataset", input, "input matrix file")->required();
        cmd->add_option("--format", format_name,
                        "input format: dense, fimi or csv (default: by file extension)");
        cmd->add_option("--name", name_override, "dataset name used in reports");
    };

    auto* factorize = app.add_subcommand("factorize", "factorize a dataset");
    std::string algo = "mdl-grecond";
    std::size_t epsilon = 0;
    std::size_t max_factors_value = 0;
    unsigned threads = 1;
    std::string factors_out;
    std::string report_out;
    add_dataset_options(factorize);
    factorize->add_option("--algo", algo, "algorithm: mdl-grecond or grecond")
        ->check(CLI::IsMember({"mdl-grecond", "grecond"}));
    auto* epsilon_opt = factorize->add_option(
        "--epsilon", epsilon, "grecond only: stop once at most this many ones are uncovered");
    auto* max_factors_opt = factorize->add_option(
        "--max-factors", max_factors_value, "grecond only: stop after this many factors");
    auto* threads_opt = factorize->add_option(
        "--threads", threads, "mdl-grecond only: candidate evaluation threads (0 = auto)");
    factorize->add_option("--factors-out", factors_out,
                          "factor file path, '-' for stdout (default: <name>.factors)");
    factorize->add_option("--report-out", report_out,
                          "JSON report path, '-' for stdout (default: <name>.report.json)");

    auto* evaluate = app.add_subcommand("evaluate", "recompute metrics for a factor file");
    std::string factor_path;
    std::string eval_report_out;
    add_dataset_options(evaluate);
    evaluate->add_option("--factors", factor_path, "factor file to evaluate")->required();
    evaluate->add_option("--report-out", eval_report_out,
                         "JSON report path, '-' for stdout (default: stdout)");

    auto* concepts = app.add_subcommand("concepts", "enumerate all formal concepts");
    bool count_only = false;
    std::size_t limit_value = 0;
    add_dataset_options(concepts);
    concepts->add_flag("--count-only", count_only, "print only the number of concepts");
    auto* limit_opt = concepts->add_option(
        "--limit", limit_value,
        "cell guard for enumeration (default 1e6; BMF_CONCEPT_LIMIT overrides)");

    CLI11_PARSE(app, argc, argv);

    try {
        const bmf::io::Dataset loaded = bmf::io::load_matrix(input, format_option(format_name));
        bmf::io::Dataset dataset{name_override.empty() ? loaded.name : name_override,
                                 loaded.matrix, loaded.labels};

        if (factorize->parsed()) {
            if (algo != "grecond" && (epsilon_opt->count() > 0 || max_factors_opt->count() > 0))
                throw std::runtime_error("--epsilon/--max-factors only apply to --algo grecond");
            if (algo != "mdl-grecond" && threads_opt->count() > 0)
                throw std::runtime_error("--threads only applies to --algo mdl-grecond");
            std::optional<std::size_t> max_factors;
            if (max_factors_opt->count() > 0) max_factors = max_factors_value;
            return run_factorize(dataset, algo, epsilon, max_factors, threads, factors_out,
                                 report_out);
        }
        if (evaluate->parsed())
            return run_evaluate(dataset, factor_path, eval_report_out);
        if (concepts->parsed()) {
            std::optional<std::size_t> limit;
            if (limit_opt->count() > 0) limit = limit_value;
            return run_concepts(dataset, count_only, limit);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
