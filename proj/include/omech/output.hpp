// output.hpp — machine-readable result tables (CSV and JSON)

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "omech/config.hpp"

namespace omech::cli {

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

struct OutputMeta {
    std::string command;
    std::uint64_t seed = 0;
    std::string version;
};

/// RFC-4180-style CSV: one header row, '\n' line endings, '.' decimal
/// separator, floats with `precision` significant digits (round-half-even).
std::string to_csv(const Table& table, int precision = 9);

/// One top-level object with `config`, `results` and `meta`. Content is a
/// pure function of its inputs, so equal runs give identical bytes.
std::string to_json(const Table& table, const RunConfig& config, const OutputMeta& meta,
                    int precision = 9);

/// Writes `content` to `path`, or to stdout when path is "-" or empty.
void write_file(const std::string& path, const std::string& content);

} // namespace omech::cli
