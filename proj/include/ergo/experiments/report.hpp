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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ergo/experiments/config.hpp"

namespace ergo {

struct ReportTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

struct ExperimentReport {
    std::string experiment;
    std::optional<ExperimentConfig> config;
    /// Ordered key/value lines.
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::pair<std::string, std::string>> verdicts;
    std::vector<ReportTable> tables;
    /// Free-form records appended verbatim to the structured output.
    std::vector<std::string> records;
    /// Seconds; shown on the console only, never written to report files.
    double wall_clock = 0.0;

    void add_summary(std::string key, std::string value) { summary.emplace_back(std::move(key), std::move(value)); }
    void add_verdict(std::string key, std::string value) { verdicts.emplace_back(std::move(key), std::move(value)); }
    ReportTable& add_table(std::string name, std::vector<std::string> columns);
    const ReportTable& table(std::string_view name) const;
    const std::string& summary_value(std::string_view key) const;
};

enum class ReportFormat { TableText, StructuredText };
ReportFormat parse_format(std::string_view name);
std::string format_name(ReportFormat format);

std::string artifact_version();

/// Header comment lines, then each table with space-padded fixed-width columns.
std::string table_text(const ExperimentReport& report);
/// `key = value` lines grouped under [section] headers; starts with `version`.
std::string structured_text(const ExperimentReport& report);
std::string render(const ExperimentReport& report, ReportFormat format);

/// Writes render(report, format) to `path`; Error naming the path on failure.
void emit_report(const ExperimentReport& report, ReportFormat format, const std::string& path);

}  // namespace ergo
