// output.cpp — CSV/JSON rendering

#include "omech/output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace omech::cli {

namespace {

std::string format_double(double v, int precision) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

std::string cell_to_string(const Cell& cell, int precision) {
    if (std::holds_alternative<double>(cell)) {
        return format_double(std::get<double>(cell), precision);
    }
    if (std::holds_alternative<long long>(cell)) {
        return std::to_string(std::get<long long>(cell));
    }
    return std::get<std::string>(cell);
}

} // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != header.size()) {
        throw IoError("table row width does not match header");
    }
    rows.push_back(std::move(row));
}

std::string to_csv(const Table& table, int precision) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out << (i ? "," : "") << table.header[i];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << cell_to_string(row[i], precision);
        }
        out << "\n";
    }
    return out.str();
}

std::string to_json(const Table& table, const RunConfig& config, const OutputMeta& meta,
                    int precision) {
    nlohmann::ordered_json doc;

    nlohmann::ordered_json cfg;
    std::istringstream rendered(render_config(config));
    std::string line;
    while (std::getline(rendered, line)) {
        const std::size_t eq = line.find('=');
        if (line.empty() || line[0] == '#' || eq == std::string::npos) continue;
        const std::string key = line.substr(0, eq - 1);
        cfg[key.substr(0, key.find_last_not_of(' ') + 1)] =
            std::strtod(line.c_str() + eq + 1, nullptr);
    }
    doc["config"] = cfg;

    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (std::holds_alternative<double>(row[i])) {
                // Render through the same formatter as CSV so precision and
                // byte determinism match.
                const double v = std::get<double>(row[i]);
                if (std::isnan(v)) {
                    obj[table.header[i]] = nullptr;
                } else {
                    obj[table.header[i]] =
                        std::strtod(format_double(v, precision).c_str(), nullptr);
                }
            } else if (std::holds_alternative<long long>(row[i])) {
                obj[table.header[i]] = std::get<long long>(row[i]);
            } else {
                obj[table.header[i]] = std::get<std::string>(row[i]);
            }
        }
        results.push_back(obj);
    }
    doc["results"] = results;

    doc["meta"] = {{"command", meta.command}, {"seed", meta.seed}, {"version", meta.version}};
    return doc.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output path: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

} // namespace omech::cli
