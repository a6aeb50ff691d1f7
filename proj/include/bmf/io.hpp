#pragma once

#include <charconv>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bmf/fca.hpp"
#include "bmf/matrix.hpp"

namespace bmf::io {

/// Input error with 1-based line/column location.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

enum class MatrixFormat {
    dense,  // whitespace-separated 0/1 rows
    fimi,   // one object per line: space-separated 1-based attribute indices
    csv,    // header row of attribute names, body of 0/1
};

struct Dataset {
    std::string name;
    BooleanMatrix matrix;
    std::vector<std::string> labels;  // one per attribute
};

/// Default attribute labels: a..i for positions 1..9, then x10, x11, ...
inline std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t p = 1; p <= n; ++p) {
        if (p <= 9)
            labels.emplace_back(1, static_cast<char>('a' + p - 1));
        else
            labels.push_back("x" + std::to_string(p));
    }
    return labels;
}

inline std::optional<MatrixFormat> format_from_extension(const std::filesystem::path& path) {
    const std::string ext = path.extension().string();
    if (ext == ".dense" || ext == ".txt") return MatrixFormat::dense;
    if (ext == ".fimi" || ext == ".dat") return MatrixFormat::fimi;
    if (ext == ".csv") return MatrixFormat::csv;
    return std::nullopt;
}

inline MatrixFormat parse_format_name(std::string_view name) {
    if (name == "dense") return MatrixFormat::dense;
    if (name == "fimi") return MatrixFormat::fimi;
    if (name == "csv") return MatrixFormat::csv;
    throw std::invalid_argument("unknown matrix format: " + std::string(name) +
                                " (expected dense, fimi or csv)");
}

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based position of the first character
};

inline std::vector<Token> split_ws(std::string_view line) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        tokens.push_back({line.substr(start, i - start), start + 1});
    }
    return tokens;
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

inline std::size_t parse_count(const Token& token, std::size_t line) {
    std::size_t value = 0;
    const auto* first = token.text.data();
    const auto* last = first + token.text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("expected an unsigned integer, got '" + std::string(token.text) + "'",
                         line, token.column);
    return value;
}

}  // namespace detail

inline std::pair<BooleanMatrix, std::vector<std::string>> read_dense(std::istream& in) {
    std::vector<std::vector<bool>> rows;
    std::size_t n = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto tokens = detail::split_ws(line);
        if (tokens.empty()) continue;  // blank lines are not rows in dense files
        if (!rows.empty() && tokens.size() != n)
            throw ParseError("ragged row: expected " + std::to_string(n) + " cells, got " +
                                 std::to_string(tokens.size()),
                             lineno, tokens.size() > n ? tokens[n].column : 1);
        std::vector<bool> row;
        row.reserve(tokens.size());
        for (const auto& t : tokens) {
            if (t.text == "0")
                row.push_back(false);
            else if (t.text == "1")
                row.push_back(true);
            else
                throw ParseError("cell must be 0 or 1, got '" + std::string(t.text) + "'",
                                 lineno, t.column);
        }
        n = row.size();
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no rows found", lineno == 0 ? 1 : lineno, 1);

    MatrixBuilder b(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rows[i][j]) b.set(i, j);
    return {b.build(), default_labels(n)};
}

inline std::pair<BooleanMatrix, std::vector<std::string>> read_fimi(std::istream& in) {
    std::vector<std::vector<std::size_t>> rows;  // 0-based indices
    std::size_t n = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::size_t> row;
        for (const auto& t : detail::split_ws(line)) {
            const std::size_t idx = detail::parse_count(t, lineno);
            if (idx == 0)
                throw ParseError("attribute indices are 1-based; 0 is invalid", lineno, t.column);
            row.push_back(idx - 1);
            n = std::max(n, idx);
        }
        rows.push_back(std::move(row));  // an empty line is an all-zero object
    }
    if (rows.empty()) throw ParseError("no objects found", 1, 1);
    if (n == 0) throw ParseError("dataset has no attributes", lineno, 1);

    MatrixBuilder b(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const std::size_t j : rows[i]) b.set(i, j);
    return {b.build(), default_labels(n)};
}

inline std::pair<BooleanMatrix, std::vector<std::string>> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header row", 1, 1);

    std::vector<std::string> labels;
    {
        std::size_t col = 1;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                const auto label = detail::trim(std::string_view(line).substr(start, i - start));
                if (label.empty())
                    throw ParseError("empty attribute name in header", 1, col);
                labels.emplace_back(label);
                start = i + 1;
                col = i + 2;
            }
        }
    }
    {
        std::unordered_map<std::string_view, std::size_t> seen;
        for (const auto& l : labels) {
            if (!seen.emplace(l, seen.size()).second)
                throw ParseError("duplicate attribute name '" + l + "' in header", 1, 1);
        }
    }

    const std::size_t n = labels.size();
    std::vector<std::vector<bool>> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::trim(line).empty()) continue;
        std::vector<bool> row;
        std::size_t start = 0;
        std::size_t col = 1;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                const auto cell = detail::trim(std::string_view(line).substr(start, i - start));
                if (cell == "0")
                    row.push_back(false);
                else if (cell == "1")
                    row.push_back(true);
                else
                    throw ParseError("cell must be 0 or 1, got '" + std::string(cell) + "'",
                                     lineno, col);
                start = i + 1;
                col = i + 2;
            }
        }
        if (row.size() != n)
            throw ParseError("ragged row: expected " + std::to_string(n) + " cells, got " +
                                 std::to_string(row.size()),
                             lineno, 1);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("no data rows found", lineno + 1, 1);

    MatrixBuilder b(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rows[i][j]) b.set(i, j);
    return {b.build(), std::move(labels)};
}

inline std::pair<BooleanMatrix, std::vector<std::string>> read_matrix(std::istream& in,
                                                                      MatrixFormat format) {
    switch (format) {
        case MatrixFormat::dense: return read_dense(in);
        case MatrixFormat::fimi: return read_fimi(in);
        case MatrixFormat::csv: return read_csv(in);
    }
    throw std::logic_error("read_matrix: unhandled format");
}

/// Note: FIMI files carry no column count, so a matrix whose trailing columns
/// are all zero loads back narrower than it was written.
inline void write_matrix(std::ostream& out, const BooleanMatrix& matrix, MatrixFormat format,
                         const std::vector<std::string>* labels = nullptr) {
    switch (format) {
        case MatrixFormat::dense:
            for (std::size_t i = 0; i < matrix.rows(); ++i) {
                for (std::size_t j = 0; j < matrix.cols(); ++j) {
                    if (j > 0) out << ' ';
                    out << (matrix.at(i, j) ? '1' : '0');
                }
                out << '\n';
            }
            return;
        case MatrixFormat::fimi:
            for (std::size_t i = 0; i < matrix.rows(); ++i) {
                bool first = true;
                bmf::detail::for_each_bit(matrix.row_words(i), [&](std::size_t j) {
                    if (!first) out << ' ';
                    out << (j + 1);
                    first = false;
                });
                out << '\n';
            }
            return;
        case MatrixFormat::csv: {
            std::vector<std::string> fallback;
            const std::vector<std::string>* names = labels;
            if (names == nullptr || names->size() != matrix.cols()) {
                fallback = default_labels(matrix.cols());
                names = &fallback;
            }
            for (std::size_t j = 0; j < matrix.cols(); ++j) {
                if (j > 0) out << ',';
                out << (*names)[j];
            }
            out << '\n';
            for (std::size_t i = 0; i < matrix.rows(); ++i) {
                for (std::size_t j = 0; j < matrix.cols(); ++j) {
                    if (j > 0) out << ',';
                    out << (matrix.at(i, j) ? '1' : '0');
                }
                out << '\n';
            }
            return;
        }
    }
    throw std::logic_error("write_matrix: unhandled format");
}

inline Dataset load_matrix(const std::filesystem::path& path,
                           std::optional<MatrixFormat> format = std::nullopt) {
    if (!format) {
        format = format_from_extension(path);
        if (!format)
            throw std::invalid_argument("cannot infer matrix format from '" + path.string() +
                                        "'; pass the format explicitly");
    }
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    try {
        auto [matrix, labels] = read_matrix(in, *format);
        return {path.stem().string(), std::move(matrix), std::move(labels)};
    } catch (const ParseError& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

inline void save_matrix(const std::filesystem::path& path, const BooleanMatrix& matrix,
                        MatrixFormat format, const std::vector<std::string>* labels = nullptr) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_matrix(out, matrix, format, labels);
}

/// One factor per line, 1-based object indices and attribute labels:
///   extent: 1 2 | intent: a b c
inline void write_factor_file(std::ostream& out, const FactorSet& factors,
                              const std::vector<std::string>& labels) {
    for (const auto& f : factors) {
        out << "extent:";
        f.extent.for_each([&](std::size_t i) { out << ' ' << (i + 1); });
        out << " | intent:";
        f.intent.for_each([&](std::size_t j) { out << ' ' << labels.at(j); });
        out << '\n';
    }
}

inline std::string factor_file_string(const FactorSet& factors,
                                      const std::vector<std::string>& labels) {
    std::ostringstream out;
    write_factor_file(out, factors, labels);
    return out.str();
}

/// Parses a factor file against a dataset's shape and labels. Lines starting
/// with '#' and blank lines are skipped; factor order is preserved.
inline FactorSet read_factor_file(std::istream& in, std::size_t object_count,
                                  const std::vector<std::string>& labels) {
    std::unordered_map<std::string, std::size_t> label_index;
    for (std::size_t j = 0; j < labels.size(); ++j) label_index.emplace(labels[j], j);

    FactorSet factors;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto trimmed = detail::trim(line);
        if (trimmed.empty() || trimmed.front() == '#') continue;

        const std::size_t bar = line.find('|');
        if (bar == std::string::npos)
            throw ParseError("expected 'extent: ... | intent: ...'", lineno, 1);
        auto left = detail::split_ws(std::string_view(line).substr(0, bar));
        auto right = detail::split_ws(std::string_view(line).substr(bar + 1));
        if (left.empty() || left.front().text != "extent:")
            throw ParseError("factor line must start with 'extent:'", lineno, 1);
        if (right.empty() || right.front().text != "intent:")
            throw ParseError("expected 'intent:' after '|'", lineno, bar + 2);
        for (auto& t : right) t.column += bar + 1;

        ObjectSet extent(object_count);
        for (std::size_t t = 1; t < left.size(); ++t) {
            const std::size_t idx = detail::parse_count(left[t], lineno);
            if (idx == 0 || idx > object_count)
                throw ParseError("object index " + std::string(left[t].text) +
                                     " outside 1.." + std::to_string(object_count),
                                 lineno, left[t].column);
            extent.add(idx - 1);
        }
        AttributeSet intent(labels.size());
        for (std::size_t t = 1; t < right.size(); ++t) {
            const auto it = label_index.find(std::string(right[t].text));
            if (it == label_index.end())
                throw ParseError("unknown attribute label '" + std::string(right[t].text) + "'",
                                 lineno, right[t].column);
            intent.add(it->second);
        }
        factors.add({std::move(extent), std::move(intent)});
    }
    return factors;
}

inline FactorSet load_factor_file(const std::filesystem::path& path, std::size_t object_count,
                                  const std::vector<std::string>& labels) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    try {
        return read_factor_file(in, object_count, labels);
    } catch (const ParseError& e) {
        throw std::runtime_error(path.string() + ": " + e.what());
    }
}

inline void save_factor_file(const std::filesystem::path& path, const FactorSet& factors,
                             const std::vector<std::string>& labels) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_factor_file(out, factors, labels);
}

}  // namespace bmf::io
