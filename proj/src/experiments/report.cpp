// Copyright 2026 The ergo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ergo/experiments/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#ifndef ERGO_VERSION
#define ERGO_VERSION "0.0.0"
#endif

namespace ergo {

void ReportTable::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size())
        throw InvalidInput("table " + name + " has " + std::to_string(columns.size()) + " columns, row has " + std::to_string(row.size()));
    rows.push_back(std::move(row));
}

ReportTable& ExperimentReport::add_table(std::string name, std::vector<std::string> columns) {
    tables.push_back(ReportTable{std::move(name), std::move(columns), {}});
    return tables.back();
}

const ReportTable& ExperimentReport::table(std::string_view name) const {
    for (const auto& t : tables)
        if (t.name == name) return t;
    throw InvalidInput("report has no table '" + std::string(name) + "'");
}

const std::string& ExperimentReport::summary_value(std::string_view key) const {
    for (const auto& [k, v] : summary)
        if (k == key) return v;
    for (const auto& [k, v] : verdicts)
        if (k == key) return v;
    throw InvalidInput("report has no summary key '" + std::string(key) + "'");
}

ReportFormat parse_format(std::string_view name) {
    if (name == "table_text") return ReportFormat::TableText;
    if (name == "structured_text") return ReportFormat::StructuredText;
    throw InvalidInput("unknown report format '" + std::string(name) + "'");
}

std::string format_name(ReportFormat format) { return format == ReportFormat::TableText ? "table_text" : "structured_text"; }

std::string artifact_version() { return ERGO_VERSION; }

namespace {

void config_lines(std::ostream& out, const ExperimentConfig& c, std::string_view prefix) {
    std::istringstream in(c.to_text());
    std::string line;
    while (std::getline(in, line)) out << prefix << line << "\n";
}

}  // namespace

std::string table_text(const ExperimentReport& r) {
    std::ostringstream out;
    out << "# ergo " << artifact_version() << "\n";
    if (!r.experiment.empty()) out << "# experiment " << r.experiment << "\n";
    if (r.config) {
        out << "# config\n";
        config_lines(out, *r.config, "#   ");
    }
    if (!r.summary.empty()) out << "# summary\n";
    for (const auto& [k, v] : r.summary) out << "#   " << k << " = " << v << "\n";
    if (!r.verdicts.empty()) out << "# verdicts\n";
    for (const auto& [k, v] : r.verdicts) out << "#   " << k << " = " << v << "\n";
    for (const auto& t : r.tables) {
        std::vector<std::size_t> width(t.columns.size());
        for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
        for (const auto& row : t.rows)
            for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
        auto emit = [&](const std::vector<std::string>& cells) {
            std::string line;
            for (std::size_t i = 0; i < cells.size(); ++i) {
                line += cells[i];
                if (i + 1 < cells.size()) line += std::string(width[i] - cells[i].size() + 2, ' ');
            }
            out << line << "\n";
        };
        out << "\n[" << t.name << "]\n";
        emit(t.columns);
        for (const auto& row : t.rows) emit(row);
    }
    for (const auto& rec : r.records) out << "\n" << rec;
    return out.str();
}

std::string structured_text(const ExperimentReport& r) {
    std::ostringstream out;
    out << "version = " << artifact_version() << "\n";
    if (!r.experiment.empty()) out << "experiment = " << r.experiment << "\n";
    if (r.config) {
        out << "[config]\n";
        config_lines(out, *r.config, "");
    }
    if (!r.summary.empty()) out << "[summary]\n";
    for (const auto& [k, v] : r.summary) out << k << " = " << v << "\n";
    if (!r.verdicts.empty()) out << "[verdicts]\n";
    for (const auto& [k, v] : r.verdicts) out << k << " = " << v << "\n";
    for (const auto& t : r.tables) {
        out << "[table." << t.name << "]\n";
        out << "columns =";
        for (const auto& c : t.columns) out << " " << c;
        out << "\n";
        for (const auto& row : t.rows) {
            out << "row =";
            for (const auto& c : row) out << " " << c;
            out << "\n";
        }
    }
    for (const auto& rec : r.records) out << rec;
    return out.str();
}

std::string render(const ExperimentReport& report, ReportFormat format) {
    return format == ReportFormat::TableText ? table_text(report) : structured_text(report);
}

void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path) {
    const std::string bytes = render(report, format);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open report file " + path);
    out << bytes;
    out.flush();
    if (!out) throw Error("failed writing report file " + path);
}

}  // namespace ergo
